#include "helpers.hpp"

#include "jimm/continued_fraction.hpp"
#include "jimm/dynamics.hpp"
#include "jimm/jimm.hpp"

#include <doctest.h>

#include <cmath>

using namespace jimm;
using namespace jimm::testing;

namespace {

QuadSurd cf(Quotients preperiod, Quotients period) {
  return periodic_cf_to_surd(ContinuedFraction::periodic(std::move(preperiod), std::move(period)));
}

}  // namespace

TEST_SUITE("dynamics") {

TEST_CASE("gauss map") {
  CHECK(gauss_map(cf({0}, {1})) == cf({0}, {1}));
  CHECK(gauss_map(cf({0, 2}, {3})) == cf({0}, {3}));
  CHECK(gauss_map(cf({0, 1}, {2})) == cf({0}, {2}));
  CHECK(gauss_map(rat(3, 7)) == rat(1, 3));
  CHECK(gauss_map(CfStream::cycle({0, 4}, {2})).prefix(3) == Quotients{0, 2, 2});
}

TEST_CASE("farey map") {
  const auto half = farey_map(rat(1, 2));
  CHECK(half.value == rat(1));
  CHECK(half.branch == FareyBranch::High);
  CHECK(farey_map(QuadSurd::sqrt(2) - 1).value == surd(0, 1, 2, 2));
  CHECK(farey_map(rat(0)).value == rat(0));
  CHECK(farey_map(rat(1, 3)).branch == FareyBranch::Low);
}

TEST_CASE("t_jimm rule") {
  CHECK(t_jimm(cf({0, 1, 1, 3}, {2})) == cf({0, 2}, {2}));
  CHECK(t_jimm(cf({0, 2}, {2})) == cf({0, 1}, {2}));
  CHECK(conjugated_gauss(cf({0, 2}, {2})) == cf({0, 1}, {2}));
  CHECK_THROWS_AS(t_jimm(cf({0}, {1})), std::domain_error);
  CHECK(t_jimm(ContinuedFraction::periodic({0, 1, 1, 3}, {2})) == ContinuedFraction::periodic({0, 2}, {2}));
  CHECK(t_jimm(CfStream::cycle({0, 1, 1, 3}, {2})).prefix(3) == Quotients{0, 2, 2});
}

TEST_CASE("inverse branches") {
  for (long k = 0; k <= 10; ++k) {
    const QuadSurd y = QuadSurd::sqrt(2) - 1;
    CHECK(t_jimm(inverse_branch(k, y)) == y);
  }
  CHECK(inverse_branch_matrix(0) == Matrix2{1, 0, 1, 1});
}

TEST_CASE("invariant measure residual") {
  CHECK(invariant_measure_residual(rat(1, 2), 40).total() < 1e-12);
  CHECK(invariant_measure_residual(rat(1, 3), 40).total() < 1e-12);
  CHECK(invariant_density(rat(1)) == rat(1, 2));
  CHECK(cutoff_for_tail(rat(1, 2), rat(1, 1000000)) > 0);
}

TEST_CASE("invariant measure is infinite") {
  const double near = invariant_mass(1e-3, 1);
  const double nearer = invariant_mass(1e-6, 1);
  const double nearest = invariant_mass(1e-9, 1);
  CHECK(nearer - near == doctest::Approx(std::log(1000.0)).epsilon(1e-3));
  CHECK(nearest - nearer == doctest::Approx(std::log(1000.0)).epsilon(1e-3));
}

TEST_CASE("farey conjugacy") {
  const FareyConjugacy low = farey_conjugacy_check(QuadSurd::sqrt(2) - 1);
  CHECK(low.equal);
  CHECK(low.direct == surd(0, 1, 2, 2));
  CHECK(low.direct_branch == FareyBranch::Low);
  CHECK(low.conjugated_branch == FareyBranch::High);
  const FareyConjugacy high = farey_conjugacy_check(surd(0, 1, 2, 2));
  CHECK(high.equal);
  CHECK(high.direct_branch == FareyBranch::High);
  CHECK(high.conjugated_branch == FareyBranch::Low);
  CHECK_THROWS(farey_conjugacy_check(surd(-1, 1, 5, 2)));
}

TEST_CASE("gauss conjugacy on a family") {
  for (long d : {2, 3, 6, 7, 10, 11, 13}) {
    const QuadSurd x = QuadSurd::sqrt(d) - QuadSurd(Rational(QuadSurd::sqrt(d).floor()));
    if (is_noble(x) || is_noble(gauss_map(x))) continue;
    CAPTURE(d);
    CHECK(conjugated_gauss(x) == t_jimm(x));
  }
}

}  // TEST_SUITE
