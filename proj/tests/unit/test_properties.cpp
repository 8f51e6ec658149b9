#include "helpers.hpp"

#include "jimm/continued_fraction.hpp"
#include "jimm/dynamics.hpp"
#include "jimm/jimm.hpp"
#include "jimm/verify.hpp"

#include <doctest.h>

using namespace jimm;
using namespace jimm::testing;

namespace {

void require_suite(std::string_view name, std::uint64_t seed, double scale) {
  const SuiteReport report = run_suite(name, seed, scale);
  for (const PropertyResult& p : report.properties) {
    CAPTURE(p.name);
    CAPTURE(p.counterexample);
    CHECK(p.passed());
  }
  CHECK(report.passed());
}

QuadSurd value_of(const ExactReal& x) { return std::get<QuadSurd>(x); }

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("involution on random surds") {
  SampleSource src(11);
  for (int i = 0; i < 300; ++i) {
    const QuadSurd x = src.surd();
    const SurdImage image = jimm_surd(x);
    REQUIRE_FALSE(image.noble);
    CAPTURE(x.str());
    CHECK(is_surd(jimm_surd(value_of(image.value)).value, x));
  }
}

TEST_CASE("reciprocal and negation laws on random surds") {
  SampleSource src(12);
  for (int i = 0; i < 300; ++i) {
    const QuadSurd x = src.surd();
    CAPTURE(x.str());
    const QuadSurd jx = value_of(jimm_surd(x).value);
    CHECK(is_surd(jimm_surd(-x).value, -jx.reciprocal()));
    CHECK(is_surd(jimm_surd(x.reciprocal()).value, jx.reciprocal()));
  }
}

TEST_CASE("expansion route matches the exact image") {
  SampleSource src(13);
  for (int i = 0; i < 300; ++i) {
    const QuadSurd x = src.surd();
    CAPTURE(x.str());
    const ContinuedFraction image = jimm_cf(surd_to_periodic_cf(x));
    CHECK(periodic_cf_to_surd(image) == value_of(jimm_surd(x).value));
  }
}

TEST_CASE("galois commutation on random surds") {
  SampleSource src(14);
  for (int i = 0; i < 200; ++i) {
    const QuadSurd x = src.surd();
    if (is_noble(x.conjugate())) continue;
    CAPTURE(x.str());
    CHECK(galois_commute_check(x) == true);
  }
}

TEST_CASE("rational bijection is an involution on 10^4 rationals") {
  SampleSource src(15);
  for (int i = 0; i < 10000; ++i) {
    const Rational q = src.positive_rational();
    REQUIRE(jimm_q_rational(jimm_q_rational(q)) == q);
  }
}

TEST_CASE("conjugacy with the gauss map on random points") {
  SampleSource src(16);
  for (int i = 0; i < 200; ++i) {
    const QuadSurd x = src.unit_surd();
    if (is_noble(gauss_map(x))) continue;
    CAPTURE(x.str());
    CHECK(conjugated_gauss(x) == t_jimm(x));
  }
}

TEST_CASE("verify suites at reduced scale, seed 7") {
  for (const std::string& name : suite_names()) {
    if (name == "all") continue;
    CAPTURE(name);
    require_suite(name, 7, 0.1);
  }
}

TEST_CASE("verify suites reject unknown names") {
  CHECK_THROWS(run_suite("nope", 1));
}

TEST_CASE("quadratic families in the run-expanded reading") {
  for (long k = 1; k <= 6; ++k) {
    const auto [input, image] = mcmullen_case(k);
    CAPTURE(k);
    CHECK(jimm_cf(input) == image);
    CHECK(jimm_cf(image) == input);
  }
  for (long n = 2; n <= 5; ++n) {
    for (long a = 3; a <= 6; ++a) {
      const auto [input, image] = unit_family_case(n, a);
      CAPTURE(n);
      CAPTURE(a);
      CHECK(jimm_cf(input) == image);
    }
  }
}

TEST_CASE("quadratic families in the literal compact reading are not images") {
  // Taking [k+2; (2,2,3,k+2,1,k+3)] at face value: its image is not the input,
  // so the compact form cannot be read literally.
  for (long k = 1; k <= 6; ++k) {
    const ContinuedFraction literal =
        ContinuedFraction::periodic({k + 2}, {2, 2, 3, Integer(k + 2), 1, Integer(k + 3)});
    CAPTURE(k);
    CHECK_FALSE(jimm_cf(literal) == mcmullen_case(k).first);
  }
}

}  // TEST_SUITE
