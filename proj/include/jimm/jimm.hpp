#pragma once

#include "jimm/boundary_word.hpp"
#include "jimm/continued_fraction.hpp"
#include "jimm/gl2_word.hpp"
#include "jimm/matrix.hpp"
#include "jimm/quad_surd.hpp"
#include "jimm/rational.hpp"

#include <optional>
#include <vector>

namespace jimm {

/// `count` consecutive partial quotients equal to `value`.
struct QuotientRun {
  Integer value;
  Integer count;
};

/**
 * Run-length form of the rewrite
 *   [n0; n1, n2, ...] -> [1_{n0-1}, 2, 1_{n1-2}, 2, 1_{n2-2}, ...]
 * with [.., m, 1_{-1}, n, ..] = [.., m+n-1, ..] and 1_0 dropped.
 * Valid for inputs with n0 >= 1. Every emitted run is final.
 */
class RewriteTransducer {
 public:
  void push(const Integer& quotient, std::vector<QuotientRun>& out);
  bool has_pending() const { return pending_.has_value(); }
  /// Lower bound for the next output quotient when one is pending.
  const std::optional<Integer>& pending() const { return pending_; }

 private:
  bool started_ = false;
  std::optional<Integer> pending_;
};

/// The boundary-word image: XOR with (01) on positive words, with (10) after S.
BoundaryWord jimm_boundary_word(const BoundaryWord& w);

/// Rewrite route. Periodic input gives a periodic result, or a finite one for
/// noble input; stream input gives a lazy stream. Finite input is refused.
ContinuedFraction jimm_cf(const ContinuedFraction& x);

ExactReal jimm_surd_xor(const QuadSurd& x);
ExactReal jimm_surd_rewrite(const QuadSurd& x);

struct SurdImage {
  ExactReal value;
  bool noble = false;  // input was a noble number, so the image is rational
};

/// Exact image of an irrational surd through the XOR route, cross-checked
/// against the rewrite route (std::logic_error on disagreement).
SurdImage jimm_surd(const QuadSurd& x);

/// Lazy certified image of a stream. The result ends early only when the
/// input runs out before the next digit is determined.
CfStream jimm_stream(const CfStream& x);

struct StreamPrefix {
  Quotients digits;
  bool complete = true;  // false: input exhausted before `n` digits were certified
};
StreamPrefix jimm_stream_prefix(const CfStream& x, std::size_t n);

/// -x and 1/x (for x > 0) on lazy streams.
CfStream negate_stream(const CfStream& x);
CfStream reciprocal_stream(const CfStream& x);

/// The tree bijection on positive rationals: f(1) = 1, f(1+x) = 1 + 1/f(x), f(1/x) = 1/f(x).
Rational jimm_q_rational(const Rational& q);

struct JumpData {
  Rational at;
  QuadSurd left;   // limit from below
  QuadSurd right;  // limit from above
  QuadSurd delta;  // right - left
};

JumpData jump(const Rational& q);
QuadSurd delta_integer_formula(long n);

struct OrbitFixedPoint {
  Matrix2 m;
  QuadSurd x;  // jimm(x) = m(x)
};

OrbitFixedPoint orbit_fixed_point(const Matrix2& m);

/// jimm(conj x) == conj(jimm x); empty when x or its conjugate is noble.
std::optional<bool> galois_commute_check(const QuadSurd& x);

/// True when the expansion ends in all 1's (the orbit of the golden section).
bool is_noble(const QuadSurd& x);

}  // namespace jimm
