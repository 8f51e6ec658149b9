#include "jimm/tree.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace jimm {

bool passes_through(const Bits& word, const Vertex& v) {
  return word.size() > v.size() && std::equal(v.begin(), v.end(), word.begin());
}

Bits shuffle(const Vertex& v, Bits word) {
  if (passes_through(word, v)) word[v.size()].flip();
  return word;
}

Bits twist(const Vertex& v, Bits word) {
  if (!passes_through(word, v)) return word;
  for (std::size_t i = v.size(); i < word.size(); ++i) word[i].flip();
  return word;
}

Bits shuffle_set(const std::set<Vertex>& vertices, const Bits& word) {
  Bits out = word;
  Vertex path;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (vertices.count(path) != 0) out[i].flip();
    path.push_back(word[i]);
  }
  return out;
}

Bits twist_sequence(const std::vector<Vertex>& vertices, Bits word) {
  for (const Vertex& v : vertices) word = twist(v, std::move(word));
  return word;
}

namespace {

BoundaryWord rebuild(const BoundaryWord& w, std::size_t head_length, bool flip_period,
                     const std::function<void(Bits&)>& edit) {
  Bits head = w.prefix(head_length);
  Bits period(w.period().size());
  for (std::size_t i = 0; i < period.size(); ++i) period[i] = w.bit(head_length + i) != flip_period;
  edit(head);
  return BoundaryWord(w.negative(), std::move(head), std::move(period));
}

}  // namespace

BoundaryWord shuffle(const Vertex& v, const BoundaryWord& w) {
  const std::size_t length = std::max(v.size() + 1, w.head().size());
  if (!passes_through(w.prefix(length), v)) return w;
  return rebuild(w, length, false, [&](Bits& head) { head[v.size()].flip(); });
}

BoundaryWord twist(const Vertex& v, const BoundaryWord& w) {
  const std::size_t length = std::max(v.size() + 1, w.head().size());
  if (!passes_through(w.prefix(length), v)) return w;
  return rebuild(w, length, true, [&](Bits& head) {
    for (std::size_t i = v.size(); i < head.size(); ++i) head[i].flip();
  });
}

std::optional<std::size_t> PiecewiseMobius::locate(const QuadSurd& x) const {
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (pieces_[i].domain.contains(x)) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> PiecewiseMobius::locate(const Rational& x) const {
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (pieces_[i].domain.contains(x)) return i;
  }
  return std::nullopt;
}

QuadSurd PiecewiseMobius::apply(const QuadSurd& x) const {
  auto i = locate(x);
  if (!i) throw std::domain_error("point outside the piecewise map: " + x.str());
  return mobius_apply(pieces_[*i].map, x);
}

bool PiecewiseMobius::tiles(const Rational& lo, const Rational& hi) const {
  if (pieces_.empty()) return false;
  Rational at = lo;
  for (const MobiusPiece& piece : pieces_) {
    if (!(piece.domain.lo == at) || !piece.domain.is_unimodular() || !piece.map.is_unimodular()) return false;
    if (!piece.domain.hi.is_infinite() && !(piece.domain.lo < piece.domain.hi)) return false;
    at = piece.domain.hi;
  }
  return at == hi;
}

bool PiecewiseMobius::is_involution() const {
  for (const MobiusPiece& piece : pieces_) {
    auto partner = std::find_if(pieces_.begin(), pieces_.end(), [&](const MobiusPiece& other) {
      return other.domain.lo == piece.image.lo && other.domain.hi == piece.image.hi;
    });
    if (partner == pieces_.end()) return false;
    if (!projectively_equal(partner->map * piece.map, Matrix2::identity())) return false;
  }
  return true;
}

bool approximant_mask_bit(int n, std::size_t i) {
  return std::min<std::size_t>(i, static_cast<std::size_t>(n)) % 2 == 1;
}

PiecewiseMobius jimm_approximant(int n, ApproximantDomain domain) {
  if (n < 0 || n > 24) throw std::domain_error("approximant depth must be in 0..24");
  const std::size_t length = static_cast<std::size_t>(n) + 1;
  const bool unit = domain == ApproximantDomain::UnitInterval;
  const Matrix2 flip_tail = n % 2 == 1 ? Matrix2{0, 1, 1, 0} : Matrix2::identity();
  std::vector<MobiusPiece> pieces;
  const std::uint64_t free_bits = unit ? length - 1 : length;
  // real order is the reverse of lexicographic order, so count down
  for (std::uint64_t code = (std::uint64_t{1} << free_bits); code-- > 0;) {
    Bits w(length);
    if (unit) w[0] = true;
    for (std::size_t k = 0; k < free_bits; ++k) w[length - 1 - k] = ((code >> k) & 1U) != 0;
    Bits image = w;
    for (std::size_t i = 0; i < length; ++i) image[i] = w[i] != approximant_mask_bit(n, i);
    const Matrix2 to = prefix_matrix(image);
    const Matrix2 from = prefix_matrix(w).adjugate();
    pieces.push_back({interval_of_prefix(w), (to * flip_tail * from).canonical(), interval_of_prefix(image)});
  }
  return PiecewiseMobius(std::move(pieces));
}

std::string box_graph_csv(const PiecewiseMobius& map) {
  std::ostringstream out;
  out << "x_lo,x_hi,y_lo,y_hi\n";
  for (const MobiusPiece& p : map.pieces()) {
    out << p.domain.lo.str() << ',' << p.domain.hi.str() << ',' << p.image.lo.str() << ',' << p.image.hi.str()
        << '\n';
  }
  return out.str();
}

std::string box_graph_svg(const PiecewiseMobius& map, int size) {
  std::ostringstream out;
  const double s = size;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  out << "<rect width=\"" << size << "\" height=\"" << size << "\" fill=\"white\" stroke=\"black\"/>\n";
  for (const MobiusPiece& p : map.pieces()) {
    if (p.domain.hi.is_infinite() || p.image.hi.is_infinite()) continue;
    const double x0 = p.domain.lo.to_double(), x1 = p.domain.hi.to_double();
    const double y0 = p.image.lo.to_double(), y1 = p.image.hi.to_double();
    out << "<rect x=\"" << x0 * s << "\" y=\"" << (1 - y1) * s << "\" width=\"" << (x1 - x0) * s << "\" height=\""
        << (y1 - y0) * s << "\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"0.5\"/>\n";
    out << "<polyline fill=\"none\" stroke=\"crimson\" stroke-width=\"0.7\" points=\"";
    constexpr int kSteps = 8;
    for (int k = 0; k <= kSteps; ++k) {
      Rational x = p.domain.lo + (p.domain.hi - p.domain.lo) * Rational(k, kSteps);
      Rational y = mobius_apply(p.map, x);
      if (y.is_infinite()) continue;
      out << x.to_double() * s << ',' << (1 - y.to_double()) * s << ' ';
    }
    out << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

Integer vertex_count(int n) {
  Integer v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(n) + 1);
  return v - 1;
}

namespace {

using Perm = std::vector<std::uint16_t>;

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : p) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

// Points are the nonempty paths of length <= n+1; vertices are paths of length <= n.
std::size_t point_index(const Bits& path) {
  std::size_t code = 0;
  for (bool b : path) code = code * 2 + (b ? 1 : 0);
  return (std::size_t{1} << path.size()) - 2 + code;
}

std::vector<Bits> paths_up_to(std::size_t max_length, std::size_t min_length) {
  std::vector<Bits> out;
  for (std::size_t len = min_length; len <= max_length; ++len) {
    for (std::size_t code = 0; code < (std::size_t{1} << len); ++code) {
      Bits b(len);
      for (std::size_t k = 0; k < len; ++k) b[len - 1 - k] = ((code >> k) & 1U) != 0;
      out.push_back(std::move(b));
    }
  }
  return out;
}

void check_depth(int n, int limit) {
  if (n < 0 || n > limit) throw std::domain_error("automorphism count depth out of range 0.." + std::to_string(limit));
}

}  // namespace

Integer count_automorphisms_by_enumeration(int n) {
  check_depth(n, 3);
  const std::vector<Bits> vertices = paths_up_to(static_cast<std::size_t>(n), 0);
  const std::vector<Bits> leaves = paths_up_to(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n) + 1);
  std::set<std::vector<Bits>> actions;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << vertices.size()); ++subset) {
    std::set<Vertex> chosen;
    for (std::size_t k = 0; k < vertices.size(); ++k) {
      if ((subset >> k) & 1U) chosen.insert(vertices[k]);
    }
    std::vector<Bits> action;
    action.reserve(leaves.size());
    for (const Bits& leaf : leaves) action.push_back(shuffle_set(chosen, leaf));
    actions.insert(std::move(action));
  }
  return Integer(static_cast<unsigned long>(actions.size()));
}

Integer count_automorphisms_by_stabilizer_chain(int n) {
  check_depth(n, 12);
  const std::vector<Bits> points = paths_up_to(static_cast<std::size_t>(n) + 1, 1);
  const std::vector<Bits> vertices = paths_up_to(static_cast<std::size_t>(n), 0);
  const std::size_t m = points.size();
  std::vector<Perm> gens;
  for (const Bits& v : vertices) {
    Perm p(m);
    for (std::size_t i = 0; i < m; ++i) p[i] = static_cast<std::uint16_t>(point_index(shuffle(v, points[i])));
    gens.push_back(std::move(p));
  }
  auto compose = [m](const Perm& outer, const Perm& inner) {
    Perm r(m);
    for (std::size_t i = 0; i < m; ++i) r[i] = outer[inner[i]];
    return r;
  };
  auto inverse = [m](const Perm& p) {
    Perm r(m);
    for (std::size_t i = 0; i < m; ++i) r[p[i]] = static_cast<std::uint16_t>(i);
    return r;
  };
  Perm identity(m);
  for (std::size_t i = 0; i < m; ++i) identity[i] = static_cast<std::uint16_t>(i);

  Integer order = 1;
  for (std::size_t base = 0; base < m && !gens.empty(); ++base) {
    // orbit of the base point with a transversal
    std::vector<std::pair<std::uint16_t, Perm>> orbit{{static_cast<std::uint16_t>(base), identity}};
    std::vector<int> where(m, -1);
    where[base] = 0;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const Perm& g : gens) {
        std::uint16_t image = g[orbit[k].first];
        if (where[image] < 0) {
          where[image] = static_cast<int>(orbit.size());
          orbit.emplace_back(image, compose(g, orbit[k].second));
        }
      }
    }
    order *= static_cast<unsigned long>(orbit.size());
    if (orbit.size() == 1) continue;
    std::vector<Perm> inverses;
    for (const auto& entry : orbit) inverses.push_back(inverse(entry.second));
    std::unordered_set<Perm, PermHash> next;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      const Perm& t = orbit[k].second;
      for (const Perm& g : gens) {
        const Perm& t_image_inverse = inverses[static_cast<std::size_t>(where[g[orbit[k].first]])];
        Perm h = compose(t_image_inverse, k == 0 ? g : compose(g, t));
        if (h != identity) next.insert(std::move(h));
      }
    }
    gens.assign(next.begin(), next.end());
    std::sort(gens.begin(), gens.end());
  }
  return order;
}

Integer count_automorphisms(int n) {
  if (n <= 3) return count_automorphisms_by_enumeration(n);
  return count_automorphisms_by_stabilizer_chain(n);
}

}  // namespace jimm
