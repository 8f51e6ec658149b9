#include "helpers.hpp"

#include "jimm/continued_fraction.hpp"
#include "jimm/jimm.hpp"
#include "jimm/tree.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace jimm;
using namespace jimm::testing;

namespace {

Bits bits_of(unsigned long value, std::size_t length) {
  Bits out(length);
  for (std::size_t i = 0; i < length; ++i) out[i] = ((value >> i) & 1u) != 0;
  return out;
}

std::vector<Vertex> vertices_up_to(std::size_t depth) {
  std::vector<Vertex> out;
  for (std::size_t d = 0; d <= depth; ++d) {
    for (unsigned long v = 0; v < (1ul << d); ++v) out.push_back(bits_of(v, d));
  }
  return out;
}

Vertex child(Vertex v, bool bit) {
  v.push_back(bit);
  return v;
}

}  // namespace

TEST_SUITE("tree-automorphisms") {

TEST_CASE("shuffles are involutions") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const Bits w = bits_of(rng(), 20);
    const Vertex v(w.begin(), w.begin() + static_cast<long>(rng() % 8));
    CHECK(shuffle(v, shuffle(v, w)) == w);
    CHECK(twist(v, twist(v, w)) == w);
  }
}

TEST_CASE("twist below a child of the special vertex") {
  const Bits w = bits_of(0b1010101010, 10);  // 0101010101
  const Bits expected = {false, false, true, false, true, false, true, false, true, false};
  CHECK(twist(Vertex{false}, w) == expected);
  CHECK(twist(Vertex{true}, w) == w);
}

TEST_CASE("twist at a vertex and its two children is the shuffle there") {
  for (std::size_t depth = 0; depth <= 7; ++depth) {
    for (const Vertex& v : vertices_up_to(depth)) {
      if (v.size() != depth) continue;
      for (unsigned long x = 0; x < (1ul << 8); ++x) {
        const Bits w = bits_of(x, 8);
        REQUIRE(twist_sequence({v, child(v, false), child(v, true)}, w) == shuffle(v, w));
      }
    }
  }
}

TEST_CASE("shuffling every vertex negates the word") {
  for (std::size_t n = 0; n <= 7; ++n) {
    const auto all = vertices_up_to(n);
    const std::set<Vertex> every(all.begin(), all.end());
    for (unsigned long x = 0; x < (1ul << (n + 1)); ++x) {
      Bits w = bits_of(x, n + 1);
      Bits negated = w;
      negated.flip();
      REQUIRE(shuffle_set(every, w) == negated);
    }
  }
}

TEST_CASE("automorphism counts") {
  CHECK(count_automorphisms(0) == 2);
  CHECK(count_automorphisms(1) == 8);
  for (int n = 0; n <= 3; ++n) {
    CHECK(count_automorphisms_by_enumeration(n) == count_automorphisms_by_stabilizer_chain(n));
  }
  for (int n = 0; n <= 8; ++n) {
    Integer expected = 1;
    mpz_mul_2exp(expected.get_mpz_t(), expected.get_mpz_t(), vertex_count(n).get_ui());
    CHECK(count_automorphisms(n) == expected);
  }
  CHECK(vertex_count(2) == 7);
}

TEST_CASE("approximants tile and are involutions") {
  for (int n = 0; n <= 10; ++n) {
    CAPTURE(n);
    const PiecewiseMobius map = jimm_approximant(n);
    CHECK(map.pieces().size() == (1u << n));
    CHECK(map.tiles(rat(0), rat(1)));
    CHECK(map.is_involution());
  }
}

TEST_CASE("approximant near sqrt 2") {
  const PiecewiseMobius map = jimm_approximant(8, ApproximantDomain::PositiveReals);
  const auto piece = map.locate(QuadSurd::sqrt(2));
  REQUIRE(piece.has_value());
  CHECK(map.pieces()[*piece].image.contains(surd(1, 1, 2)));
  CHECK(map.tiles(rat(0), Rational::infinity()));
}

TEST_CASE("approximant mask") {
  CHECK_FALSE(approximant_mask_bit(4, 0));
  CHECK(approximant_mask_bit(4, 1));
  CHECK_FALSE(approximant_mask_bit(4, 2));
}

TEST_CASE("box graph output") {
  const std::string csv = box_graph_csv(jimm_approximant(2));
  CHECK(csv.rfind("x_lo,x_hi,y_lo,y_hi\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
  const std::string svg = box_graph_svg(jimm_approximant(2));
  CHECK(svg.find("<svg") != std::string::npos);
}

TEST_CASE("tree maps on boundary words") {
  const BoundaryWord w = cf_to_word(surd_to_periodic_cf(QuadSurd::sqrt(3)));
  CHECK(shuffle(Vertex{false}, shuffle(Vertex{false}, w)) == w);
  CHECK(twist(Vertex{}, w) == w.complemented());
}

}  // TEST_SUITE
