#include "helpers.hpp"

#include "jimm/continued_fraction.hpp"
#include "jimm/jimm.hpp"
#include "jimm/matrix.hpp"
#include "jimm/stream_ops.hpp"

#include <doctest.h>

using namespace jimm;
using namespace jimm::testing;

namespace {

Quotients runs(std::initializer_list<std::pair<long, long>> value_counts) {
  Quotients out;
  for (auto [value, count] : value_counts) out.insert(out.end(), static_cast<std::size_t>(count), Integer(value));
  return out;
}

}  // namespace

TEST_SUITE("jimm-core") {

TEST_CASE("surd goldens") {
  CHECK(is_surd(jimm_surd(QuadSurd::sqrt(2)).value, surd(1, 1, 2)));
  CHECK(is_surd(jimm_surd(surd(3, 5, 2, 7)).value, surd(-3, 2, 95, 7)));
  CHECK(is_surd(jimm_surd(QuadSurd::sqrt(11)).value, surd(15, 1, 901, 26)));
  CHECK(is_surd(jimm_surd(-QuadSurd::sqrt(11)).value, surd(15, -1, 901, 26)));
}

TEST_CASE("both routes agree on the goldens") {
  for (const QuadSurd& x : {QuadSurd::sqrt(2), surd(3, 5, 2, 7), QuadSurd::sqrt(11), -QuadSurd::sqrt(11)}) {
    CAPTURE(x.str());
    CHECK(exact_equal(jimm_surd_xor(x), jimm_surd_rewrite(x)));
  }
}

TEST_CASE("periodic expansions") {
  CHECK(jimm_cf(ContinuedFraction::periodic({1}, {2})) == ContinuedFraction::periodic({}, {2}));
  CHECK(jimm_cf(ContinuedFraction::periodic({}, {1})).is_infinity());
  CHECK(jimm_cf(ContinuedFraction::periodic({}, {5})) ==
        ContinuedFraction::periodic(runs({{1, 4}}), runs({{2, 1}, {1, 3}})));
  CHECK_THROWS(jimm_cf(ContinuedFraction::finite({2})));
}

TEST_CASE("nobles map to rationals") {
  const SurdImage phi = jimm_surd(surd(1, 1, 5, 2));
  CHECK(phi.noble);
  CHECK(exact_equal(phi.value, ExactReal(Rational::infinity())));
  CHECK(is_noble(surd(3, 1, 5, 2)));
  CHECK(is_noble(-surd(1, 1, 5, 2)));
  CHECK_FALSE(is_noble(QuadSurd::sqrt(5)));
}

TEST_CASE("pi") {
  const Quotients expected = [] {
    Quotients q = runs({{1, 2}, {2, 1}, {1, 5}, {2, 1}, {1, 13}, {3, 1}, {1, 290}, {5, 1}, {3, 1}});
    return q;
  }();
  const StreamPrefix image = jimm_stream_prefix(pi_stream(), expected.size());
  REQUIRE(image.complete);
  CHECK(image.digits == expected);
  CHECK(render_decimal(jimm_stream(pi_stream()), 45).value() ==
        "1.723770792548027607969932649493102514555814428");
}

TEST_CASE("e") {
  const StreamPrefix image = jimm_stream_prefix(e_stream(), 10);
  CHECK(image.digits == Quotients{1, 3, 4, 1, 1, 4, 1, 1, 1, 1});
  CHECK(render_decimal(jimm_stream(e_stream()), 45).value() ==
        "1.310575292846625521582249549693914334971203808");
}

TEST_CASE("constant stream agrees with the periodic image") {
  const StreamPrefix image = jimm_stream_prefix(CfStream::cycle({}, {5}), 20);
  const ContinuedFraction exact = jimm_cf(ContinuedFraction::periodic({}, {5}));
  for (std::size_t i = 0; i < image.digits.size(); ++i) CHECK(image.digits[i] == *exact.at(i));
}

TEST_CASE("cube root of two") {
  // The image starts [2,1,3,1,1,1,4,...] and so lies above 2.7.
  const StreamPrefix image = jimm_stream_prefix(cbrt2_stream(), 7);
  CHECK(image.digits == Quotients{2, 1, 3, 1, 1, 1, 4});
}

TEST_CASE("stream helpers") {
  CHECK(negate_stream(CfStream::cycle({1}, {2})).prefix(4) == Quotients{-2, 1, 1, 2});
  CHECK(reciprocal_stream(CfStream::cycle({1}, {2})).prefix(3) == Quotients{0, 1, 2});
}

TEST_CASE("rational tree bijection") {
  CHECK(jimm_q_rational(rat(1)) == rat(1));
  for (long n = 1; n <= 20; ++n) CHECK(jimm_q_rational(rat(n)) == Rational(fib(n + 1), fib(n)));
  CHECK(jimm_q_rational(rat(5, 2)) == rat(4, 3));
  CHECK(jimm_q_rational(rat(4, 3)) == rat(5, 2));
  CHECK_THROWS(jimm_q_rational(rat(-1)));
}

TEST_CASE("jump at two") {
  const JumpData j = jump(rat(2));
  CHECK(j.right == periodic_cf_to_surd(ContinuedFraction::periodic({1, 2}, {1})));
  CHECK(j.left == periodic_cf_to_surd(ContinuedFraction::periodic({3}, {1})));
  CHECK(j.delta == -QuadSurd::sqrt(5));
  CHECK(j.delta == j.right - j.left);
}

TEST_CASE("jump at one and three") {
  const QuadSurd phi = surd(1, 1, 5, 2);
  const JumpData one = jump(rat(1));
  const QuadSurd a = phi + 1;
  const QuadSurd b = (phi + 1).reciprocal();
  CHECK(((one.left == a && one.right == b) || (one.left == b && one.right == a)));
  CHECK(jump(rat(3)).delta == surd(0, 1, 5, 5));
}

TEST_CASE("jump formula") {
  CHECK(delta_integer_formula(2) == -QuadSurd::sqrt(5));
  CHECK(delta_integer_formula(3) == surd(0, 1, 5, 5));
  CHECK(delta_integer_formula(10) == surd(0, -1, 5, 55 * 55 + 34 * 21));
  for (long n = 1; n <= 30; ++n) {
    CAPTURE(n);
    CHECK(jump(rat(n)).delta == delta_integer_formula(n));
  }
}

TEST_CASE("orbit fixed points") {
  const OrbitFixedPoint t = orbit_fixed_point(Matrix2{1, 1, 0, 1});
  CHECK(t.x == QuadSurd::sqrt(2));
  CHECK(is_surd(jimm_surd(t.x).value, t.x + 1));
  CHECK_THROWS(orbit_fixed_point(Matrix2::identity()));
  const OrbitFixedPoint t2 = orbit_fixed_point(Matrix2{1, 2, 0, 1});
  CHECK(is_surd(jimm_surd(t2.x).value, t2.x + 2));
  const ContinuedFraction cf = surd_to_periodic_cf(t2.x);
  const Quotients& period = cf.period();
  CHECK(((period == Quotients{1, 3}) || (period == Quotients{3, 1})));
}

TEST_CASE("galois commutation") {
  CHECK(galois_commute_check(QuadSurd::sqrt(11)) == true);
  CHECK(galois_commute_check(surd(3, 5, 2, 7)) == true);
  CHECK_FALSE(galois_commute_check(surd(1, 1, 5, 2)).has_value());
}

TEST_CASE("rewrite transducer runs") {
  RewriteTransducer t;
  std::vector<QuotientRun> out;
  for (long q : {3, 7, 15}) t.push(Integer(q), out);
  REQUIRE(out.size() >= 3);
  CHECK(out[0].value == 1);
  CHECK(out[0].count == 2);
  CHECK(out[1].value == 2);
}

}  // TEST_SUITE
