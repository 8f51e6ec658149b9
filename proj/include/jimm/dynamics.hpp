#pragma once

#include "jimm/boundary_word.hpp"
#include "jimm/continued_fraction.hpp"
#include "jimm/quad_surd.hpp"
#include "jimm/rational.hpp"

#include <string>
#include <vector>

namespace jimm {

/// x -> frac(1/x) on (0, 1]. Streams must start with quotient 0.
Rational gauss_map(const Rational& x);
QuadSurd gauss_map(const QuadSurd& x);
CfStream gauss_map(const CfStream& x);

enum class FareyBranch { Low, High };  // x/(1-x) on [0,1/2], (1-x)/x on [1/2,1]
std::string to_string(FareyBranch b);

template <typename T>
struct FareyStep {
  T value;
  FareyBranch branch;
};

/// At x = 1/2 both branches give 1; the step is labelled High.
FareyStep<Rational> farey_map(const Rational& x);
FareyStep<QuadSurd> farey_map(const QuadSurd& x);
/// Branch read off the second quotient: Low iff a1 >= 2.
FareyStep<CfStream> farey_map(const CfStream& x);

/// [0; 1_k, n, a, ...] -> [0; n-1, a, ...] for irrational x in (0, 1).
/// Throws std::domain_error when the expansion ends in 1's from the start.
QuadSurd t_jimm(const QuadSurd& x);
ContinuedFraction t_jimm(const ContinuedFraction& x);
/// Lazy; gives up after `max_ones` consecutive 1's.
CfStream t_jimm(const CfStream& x, std::size_t max_ones = 1'000'000);

/// Inverse branch b_k(y) = (F_{k+1} y + F_k) / (F_{k+2} y + F_{k+1}), k >= 0.
Matrix2 inverse_branch_matrix(long k);
QuadSurd inverse_branch(long k, const QuadSurd& y);
Rational inverse_branch(long k, const Rational& y);

/// Density 1/(t(t+1)) of the invariant measure.
Rational invariant_density(const Rational& t);

struct MeasureResidual {
  Rational residual;    // |sum_{k<=K} |b_k'(y)| rho(b_k(y)) - rho(y)|, exact
  Rational tail_bound;  // rigorous bound on the omitted terms k > K
  long cutoff = 0;
  double total() const { return (residual + tail_bound).to_double(); }
};

MeasureResidual invariant_measure_residual(const Rational& y, long cutoff);
/// Smallest cutoff whose tail bound at y is below `target`.
long cutoff_for_tail(const Rational& y, const Rational& target);

/// Mass of the invariant measure on [lo, hi], 0 < lo <= hi.
double invariant_mass(double lo, double hi);

struct FareyConjugacy {
  bool equal = false;
  QuadSurd direct;     // T_F(x)
  QuadSurd conjugated; // jimm(T_F(jimm(x)))
  FareyBranch direct_branch = FareyBranch::Low;
  FareyBranch conjugated_branch = FareyBranch::Low;
};

/// Requires x in (0,1) irrational and not noble.
FareyConjugacy farey_conjugacy_check(const QuadSurd& x);

/// jimm(T_G(jimm(x))) as an exact value, for comparison with t_jimm(x).
QuadSurd conjugated_gauss(const QuadSurd& x);

}  // namespace jimm
