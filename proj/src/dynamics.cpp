#include "jimm/dynamics.hpp"

#include "jimm/jimm.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

namespace jimm {

namespace {

void require_unit(const Rational& x, bool allow_zero) {
  if (x.is_infinite() || x.sign() < 0 || Rational(1) < x || (!allow_zero && x.sign() == 0)) {
    throw std::domain_error("point must lie in " + std::string(allow_zero ? "[0,1]" : "(0,1]") + ": " + x.str());
  }
}

void require_unit(const QuadSurd& x) {
  if (x.sign() <= 0 || QuadSurd(1) < x) throw std::domain_error("point must lie in (0,1): " + x.str());
}

void require_leading_zero(const CfStream& x) {
  const Integer* a0 = x.at(0);
  if (a0 == nullptr || sgn(*a0) != 0) throw std::domain_error("stream must start with quotient 0");
}

// Stream reading x from index `from` on, with `first` in place of quotient `from`.
CfStream tail_from(const CfStream& x, std::size_t from, std::optional<Integer> first) {
  auto index = std::make_shared<std::size_t>(from);
  auto head = std::make_shared<std::optional<Integer>>(std::move(first));
  return CfStream([x, index, head]() -> std::optional<Integer> {
    std::size_t i = (*index)++;
    if (*head) {
      Integer v = std::move(**head);
      head->reset();
      return v;
    }
    const Integer* q = x.at(i);
    if (q == nullptr) return std::nullopt;
    return *q;
  });
}

CfStream with_leading_zero(const CfStream& rest) {
  auto started = std::make_shared<bool>(false);
  auto index = std::make_shared<std::size_t>(0);
  return CfStream([rest, started, index]() -> std::optional<Integer> {
    if (!*started) {
      *started = true;
      return Integer(0);
    }
    const Integer* q = rest.at((*index)++);
    if (q == nullptr) return std::nullopt;
    return *q;
  });
}

QuadSurd unwrap_surd(const ExactReal& v, const char* what) {
  if (const auto* s = std::get_if<QuadSurd>(&v)) return *s;
  throw std::domain_error(std::string(what) + ": value became rational");
}

}  // namespace

Rational gauss_map(const Rational& x) {
  require_unit(x, false);
  Rational inv = x.reciprocal();
  return inv - Rational(inv.floor());
}

QuadSurd gauss_map(const QuadSurd& x) {
  require_unit(x);
  QuadSurd inv = x.reciprocal();
  return inv - QuadSurd(Rational(inv.floor()));
}

CfStream gauss_map(const CfStream& x) {
  require_leading_zero(x);
  if (x.at(1) == nullptr) throw std::domain_error("gauss_map of 0");
  return with_leading_zero(tail_from(x, 2, std::nullopt));
}

std::string to_string(FareyBranch b) { return b == FareyBranch::Low ? "low" : "high"; }

FareyStep<Rational> farey_map(const Rational& x) {
  require_unit(x, true);
  if (x < Rational(1, 2)) return {x / (Rational(1) - x), FareyBranch::Low};
  return {(Rational(1) - x) / x, FareyBranch::High};
}

FareyStep<QuadSurd> farey_map(const QuadSurd& x) {
  if (x.sign() < 0 || QuadSurd(1) < x) throw std::domain_error("point must lie in [0,1]: " + x.str());
  const QuadSurd one(1);
  if (x < QuadSurd(Rational(1, 2))) return {x / (one - x), FareyBranch::Low};
  return {(one - x) / x, FareyBranch::High};
}

FareyStep<CfStream> farey_map(const CfStream& x) {
  require_leading_zero(x);
  const Integer* a1 = x.at(1);
  if (a1 == nullptr) return {x, FareyBranch::Low};  // x = 0
  if (*a1 >= 2) return {with_leading_zero(tail_from(x, 1, *a1 - 1)), FareyBranch::Low};
  return {with_leading_zero(tail_from(x, 2, std::nullopt)), FareyBranch::High};
}

ContinuedFraction t_jimm(const ContinuedFraction& x) {
  if (x.kind() == CfKind::Stream) return ContinuedFraction::stream(t_jimm(x.source()));
  if (x.kind() != CfKind::Periodic) throw std::domain_error("t_jimm needs an irrational point");
  if (*x.at(0) != 0) throw std::domain_error("t_jimm needs a point in (0,1)");
  const Quotients& pre = x.preperiod();
  const Quotients& per = x.period();
  const std::size_t s = pre.size();
  const std::size_t p = per.size();
  auto at = [&](std::size_t i) -> const Integer& { return i < s ? pre[i] : per[(i - s) % p]; };
  std::size_t j = 1;
  while (at(j) == 1) {
    if (j > s + p) throw std::domain_error("t_jimm: expansion ends in 1's (noble point)");
    ++j;
  }
  Quotients head{Integer(0), at(j) - 1};
  for (std::size_t i = j + 1; i < std::max(s, j + 1); ++i) head.push_back(at(i));
  const std::size_t start = std::max(s, j + 1);
  Quotients period;
  for (std::size_t i = 0; i < p; ++i) period.push_back(at(start + i));
  return ContinuedFraction::periodic(std::move(head), std::move(period));
}

QuadSurd t_jimm(const QuadSurd& x) {
  require_unit(x);
  if (x.is_rational()) throw std::domain_error("t_jimm needs an irrational point");
  return periodic_cf_to_surd(t_jimm(surd_to_periodic_cf(x)));
}

CfStream t_jimm(const CfStream& x, std::size_t max_ones) {
  require_leading_zero(x);
  std::size_t j = 1;
  while (true) {
    const Integer* q = x.at(j);
    if (q == nullptr) throw std::domain_error("t_jimm: stream ended inside the leading run of 1's");
    if (*q != 1) break;
    if (j > max_ones) throw std::domain_error("t_jimm: leading run of 1's too long");
    ++j;
  }
  return with_leading_zero(tail_from(x, j, *x.at(j) - 1));
}

Matrix2 inverse_branch_matrix(long k) {
  if (k < 0) throw std::domain_error("branch index must be >= 0");
  return {fib(k + 1), fib(k), fib(k + 2), fib(k + 1)};
}

QuadSurd inverse_branch(long k, const QuadSurd& y) { return mobius_apply(inverse_branch_matrix(k), y); }
Rational inverse_branch(long k, const Rational& y) { return mobius_apply(inverse_branch_matrix(k), y); }

Rational invariant_density(const Rational& t) { return (t * (t + Rational(1))).reciprocal(); }

namespace {

// 1/phi < 500/809, so (500/809)^(2K+1) / y^2 bounds the tail.
Rational tail_bound_at(const Rational& y, long cutoff) {
  Integer num, den;
  const unsigned long e = static_cast<unsigned long>(2 * cutoff + 1);
  mpz_ui_pow_ui(num.get_mpz_t(), 500, e);
  mpz_ui_pow_ui(den.get_mpz_t(), 809, e);
  return Rational(num, den) / (y * y);
}

}  // namespace

MeasureResidual invariant_measure_residual(const Rational& y, long cutoff) {
  if (y.is_infinite() || y.sign() <= 0 || !(y < Rational(1))) throw std::domain_error("sample point must lie in (0,1)");
  if (cutoff < 0) throw std::domain_error("cutoff must be >= 0");
  // |b_k'(y)| rho(b_k(y)) = 1/(A_k A_{k+2}) with A_k = F_{k+1} y + F_k
  auto a = [&](long k) { return Rational(fib(k + 1)) * y + Rational(fib(k)); };
  Rational sum = 0;
  for (long k = 0; k <= cutoff; ++k) sum = sum + (a(k) * a(k + 2)).reciprocal();
  Rational diff = sum - invariant_density(y);
  return {diff.sign() < 0 ? -diff : diff, tail_bound_at(y, cutoff), cutoff};
}

long cutoff_for_tail(const Rational& y, const Rational& target) {
  long k = 0;
  while (!(tail_bound_at(y, k) < target)) ++k;
  return k;
}

double invariant_mass(double lo, double hi) {
  if (!(lo > 0) || hi < lo) throw std::domain_error("invariant_mass needs 0 < lo <= hi");
  return std::log(hi / (hi + 1)) - std::log(lo / (lo + 1));
}

FareyConjugacy farey_conjugacy_check(const QuadSurd& x) {
  require_unit(x);
  if (x.is_rational() || is_noble(x)) throw std::domain_error("farey_conjugacy_check needs a non-noble irrational");
  FareyConjugacy out;
  auto direct = farey_map(x);
  out.direct = direct.value;
  out.direct_branch = direct.branch;
  auto inner = farey_map(unwrap_surd(jimm_surd(x).value, "jimm"));
  out.conjugated_branch = inner.branch;
  out.conjugated = unwrap_surd(jimm_surd(inner.value).value, "jimm");
  out.equal = out.direct == out.conjugated;
  return out;
}

QuadSurd conjugated_gauss(const QuadSurd& x) {
  require_unit(x);
  if (x.is_rational() || is_noble(x)) throw std::domain_error("conjugated_gauss needs a non-noble irrational");
  const QuadSurd y = unwrap_surd(jimm_surd(x).value, "jimm");
  return unwrap_surd(jimm_surd(gauss_map(y)).value, "jimm");
}

}  // namespace jimm
