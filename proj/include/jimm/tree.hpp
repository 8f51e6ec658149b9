#pragma once

#include "jimm/boundary_word.hpp"
#include "jimm/matrix.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace jimm {

/// A trivalent vertex of the Farey tree, named by its path from the special
/// vertex (the empty path).
using Vertex = Bits;

/// True when the word's path goes through v.
bool passes_through(const Bits& word, const Vertex& v);

/// sigma_v: exchanges the two branches at v, i.e. flips bit |v| of words through v.
Bits shuffle(const Vertex& v, Bits word);
/// theta_v: shuffles every vertex of the branch at v, i.e. flips bits |v|, |v|+1, ...
Bits twist(const Vertex& v, Bits word);

/// Shuffle at every vertex of a finite set, the vertices read in the original tree.
Bits shuffle_set(const std::set<Vertex>& vertices, const Bits& word);

/// Twists at each vertex in order.
Bits twist_sequence(const std::vector<Vertex>& vertices, Bits word);

/// The same maps on eventually periodic words; the vertices must lie in the positive sector.
BoundaryWord shuffle(const Vertex& v, const BoundaryWord& w);
BoundaryWord twist(const Vertex& v, const BoundaryWord& w);

struct MobiusPiece {
  FareyInterval domain;
  Matrix2 map;
  FareyInterval image;
};

/// Ordered (left to right) pieces of a map that is Mobius on each interval.
class PiecewiseMobius {
 public:
  explicit PiecewiseMobius(std::vector<MobiusPiece> pieces) : pieces_(std::move(pieces)) {}

  const std::vector<MobiusPiece>& pieces() const { return pieces_; }

  /// The first piece whose domain contains x.
  std::optional<std::size_t> locate(const QuadSurd& x) const;
  std::optional<std::size_t> locate(const Rational& x) const;
  QuadSurd apply(const QuadSurd& x) const;

  /// Pieces are unimodular, left to right, and each starts where the previous ends.
  bool tiles(const Rational& lo, const Rational& hi) const;
  /// Composing with itself gives the identity on every piece.
  bool is_involution() const;

 private:
  std::vector<MobiusPiece> pieces_;
};

enum class ApproximantDomain { UnitInterval, PositiveReals };

/**
 * Twists at every trivalent vertex at distance 1..n from the special vertex.
 * On words this is XOR with the mask 0101.. truncated at position n and then
 * constant; the pieces are the cylinders of depth n+1.
 */
PiecewiseMobius jimm_approximant(int n, ApproximantDomain domain = ApproximantDomain::UnitInterval);

/// Bit mask of the depth-n approximant at position i.
bool approximant_mask_bit(int n, std::size_t i);

/// Rows x_lo,x_hi,y_lo,y_hi, one per piece.
std::string box_graph_csv(const PiecewiseMobius& map);
/// Boxes plus the image of each piece as a polyline; the unit interval only.
std::string box_graph_svg(const PiecewiseMobius& map, int size = 600);

/// Number of trivalent vertices at distance <= n from the special vertex: 2^(n+1) - 1.
Integer vertex_count(int n);

/**
 * Number of distinct actions, on paths of length n+1, of the shuffle sets over
 * vertices at distance <= n. Small depths enumerate every subset; larger ones
 * compute the order of the generated group with a stabilizer chain.
 */
Integer count_automorphisms(int n);
Integer count_automorphisms_by_enumeration(int n);
Integer count_automorphisms_by_stabilizer_chain(int n);

}  // namespace jimm
