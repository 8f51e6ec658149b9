#include "helpers.hpp"

#include "jimm/boundary_word.hpp"
#include "jimm/continued_fraction.hpp"

#include <doctest.h>

using namespace jimm;
using namespace jimm::testing;

namespace {

Bits bits(std::string_view text) {
  Bits out;
  for (char c : text) out.push_back(c == '1');
  return out;
}

}  // namespace

TEST_SUITE("farey-boundary") {

TEST_CASE("cf to word") {
  const BoundaryWord r2 = cf_to_word(ContinuedFraction::periodic({1}, {2}));
  CHECK(r2.prefix(9) == bits("011001100"));
  CHECK(cf_to_word(ContinuedFraction::periodic({}, {1})).prefix(6) == bits("010101"));
  CHECK(cf_to_word(ContinuedFraction::periodic({}, {1})) == phi_word());
  const BoundaryWord two = cf_to_word(ContinuedFraction::finite({2}));
  CHECK(two.str() == "00(1)");
  CHECK(exact_equal(word_value(two), ExactReal(rat(2))));
}

TEST_CASE("word to cf") {
  CHECK(word_to_cf(parse_word("(0011)")) == ContinuedFraction::periodic({2}, {2}));
  CHECK(word_to_cf(parse_word("(0)")).is_infinity());
  CHECK(word_to_cf(parse_word("(1)")) == ContinuedFraction::finite({0}));
  CHECK(exact_equal(word_value(parse_word("010(0)")), ExactReal(rat(2))));
}

TEST_CASE("negative words") {
  const BoundaryWord w = cf_to_word(ContinuedFraction::periodic({-2}, {2}));
  CHECK(w.negative());
  CHECK(exact_equal(word_value(w), ExactReal(surd(-3, 1, 2))));
}

TEST_CASE("xor") {
  CHECK(xor_words(parse_word("(0011)"), phi_word()) == parse_word("011(0011)"));
  const BoundaryWord w = parse_word("0110(001)");
  CHECK(xor_words(w, parse_word("(0)")) == w);
  CHECK(xor_words(w, w) == parse_word("(0)"));
  CHECK(xor_words(xor_words(w, phi_word()), phi_word()) == w);
}

TEST_CASE("two words of a rational") {
  const auto [below2, above2] = rational_two_words(rat(2));
  CHECK(below2 == parse_word("010(0)"));
  CHECK(above2 == parse_word("00(1)"));
  const auto [below1, above1] = rational_two_words(rat(1));
  CHECK(exact_equal(word_value(below1), ExactReal(rat(1))));
  CHECK(exact_equal(word_value(above1), ExactReal(rat(1))));
  CHECK(compare_words(below1, above1) != 0);
  CHECK(exact_equal(word_value(rational_two_words(rat(0)).first), ExactReal(rat(0))));
  CHECK(exact_equal(word_value(rational_two_words(rat(0)).second), ExactReal(rat(0))));
}

TEST_CASE("interval of prefix") {
  const FareyInterval all = interval_of_prefix({});
  CHECK(all.lo == rat(0));
  CHECK(all.hi.is_infinite());
  const FareyInterval zero = interval_of_prefix(bits("0"));
  CHECK(zero.lo == rat(1));
  CHECK(zero.hi.is_infinite());
  const FareyInterval zero_one = interval_of_prefix(bits("01"));
  CHECK(zero_one.lo == rat(1));
  CHECK(zero_one.hi == rat(2));
  CHECK(zero_one.is_unimodular());
  CHECK(zero_one.contains(QuadSurd::sqrt(2)));
}

TEST_CASE("real order is reverse lexicographic") {
  const BoundaryWord r2 = cf_to_word(surd_to_periodic_cf(QuadSurd::sqrt(2)));
  const BoundaryWord r3 = cf_to_word(surd_to_periodic_cf(QuadSurd::sqrt(3)));
  CHECK(compare_words(r2, r3) < 0);
  CHECK(compare_words(r3, r2) > 0);
}

TEST_CASE("word literals") {
  CHECK(parse_word("010...") == parse_word("01(0)"));
  CHECK(parse_word("-1(10)").negative());
  CHECK(parse_word("0(10)").str() == "(01)");
  CHECK_THROWS(parse_word("01(2)"));
}

}  // TEST_SUITE
