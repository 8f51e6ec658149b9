#include "helpers.hpp"

#include "jimm/continued_fraction.hpp"
#include "jimm/matrix.hpp"

#include <doctest.h>

using namespace jimm;
using namespace jimm::testing;

TEST_SUITE("cf-core") {

TEST_CASE("rational to continued fraction") {
  CHECK(rational_to_cf(rat(22, 7)) == ContinuedFraction::finite({3, 7}));
  CHECK(rational_to_cf(rat(5, 2)) == ContinuedFraction::finite({2, 2}));
  CHECK(rational_to_cf(rat(-3, 8)) == ContinuedFraction::finite({-1, 1, 1, 1, 2}));
  CHECK(cf_to_rational(rational_to_cf(rat(-3, 8))) == rat(-3, 8));
}

TEST_CASE("negative rational tail quotients are positive") {
  const auto cf = rational_to_cf(rat(-3, 8));
  for (std::size_t i = 1; i < cf.terms().size(); ++i) CHECK(cf.terms()[i] >= 1);
}

TEST_CASE("continued fraction to rational") {
  CHECK(cf_to_rational(ContinuedFraction::finite({3, 7, 15, 1})) == rat(355, 113));
  CHECK(cf_to_rational(ContinuedFraction::finite({2})) == rat(2));
  CHECK(cf_to_rational(ContinuedFraction::finite({1, 1, 1, 1, 1})) == rat(8, 5));
  CHECK(cf_to_rational(ContinuedFraction::finite({-1, 2, 3})) == rat(-4, 7));
}

TEST_CASE("finite expansions are canonical") {
  CHECK(ContinuedFraction::finite({2, 1}) == ContinuedFraction::finite({3}));
  CHECK(split_last_quotient(ContinuedFraction::finite({3, 7})) == Quotients{3, 6, 1});
}

TEST_CASE("surd to periodic expansion") {
  CHECK(surd_to_periodic_cf(QuadSurd::sqrt(11)) == ContinuedFraction::periodic({3}, {3, 6}));
  CHECK(surd_to_periodic_cf(surd(1, 1, 5, 2)) == ContinuedFraction::periodic({}, {1}));
  CHECK(surd_to_periodic_cf(surd(3, 5, 2, 7)) ==
        ContinuedFraction::periodic({1}, {2, 3, 1, 1, 2, 1, 1, 1}));
  CHECK(surd_to_periodic_cf(QuadSurd::sqrt(2)).str() == "[1;(2)]");
}

TEST_CASE("periodic expansion to surd") {
  CHECK(periodic_cf_to_surd(ContinuedFraction::periodic({}, {2})) == surd(1, 1, 2));
  CHECK(periodic_cf_to_surd(ContinuedFraction::periodic({2}, {2, 1, 4, 5})) == surd(-3, 2, 95, 7));
  CHECK(periodic_cf_to_surd(ContinuedFraction::periodic({0}, {1})) == surd(-1, 1, 5, 2));
}

TEST_CASE("periodic expansions absorb the preperiod") {
  CHECK(ContinuedFraction::periodic({1, 2}, {1, 2}) == ContinuedFraction::periodic({}, {1, 2}));
  CHECK(ContinuedFraction::periodic({}, {2, 2}) == ContinuedFraction::periodic({}, {2}));
  CHECK(ContinuedFraction::periodic({2, 1}, {2, 1}).str() == "[(2,1)]");
}

TEST_CASE("mobius action") {
  const Matrix2 t{1, 1, 0, 1};
  const Matrix2 s{0, 1, -1, 0};
  const QuadSurd phi = surd(1, 1, 5, 2);
  CHECK(mobius_apply(t, QuadSurd::sqrt(2)) == surd(1, 1, 2));
  CHECK(mobius_apply(s, phi) == -phi.reciprocal());
  CHECK(mobius_apply(Matrix2{1, 1, 1, 0}, phi) == phi);
  CHECK(mobius_apply(s, rat(0)).is_infinite());
  CHECK(mobius_apply(t, Rational::infinity()).is_infinite());
  CHECK_THROWS_AS(mobius_apply(Matrix2{0, 1, 1, 0}, QuadSurd(0)), std::domain_error);
}

TEST_CASE("fibonacci and lucas") {
  CHECK(fib(7) == 13);
  CHECK(fib(-4) == -3);
  CHECK(fib(0) == 0);
  CHECK(fib(-1) == 1);
  CHECK(fib(21) == 10946);
  CHECK(lucas(10) == 123);
}

TEST_CASE("surd helpers") {
  CHECK(surd(15, 1, 901, 26).conjugate() == surd(15, -1, 901, 26));
  CHECK(surd(1, 1, 5, 2).floor() == 1);
  CHECK(QuadSurd::sqrt(2) > QuadSurd(rat(141, 100)));
  CHECK(QuadSurd::sqrt(2) < QuadSurd(rat(1415, 1000)));
  CHECK(surd(-3, 1, 2).floor() == -2);
  CHECK((-QuadSurd::sqrt(2)).floor() == -2);
  CHECK(surd(0, 1, 8).str() == "(0+2*sqrt(2))/1");
  CHECK(QuadSurd::sqrt(9).is_rational());
}

TEST_CASE("surd normal form and field mismatch") {
  CHECK(surd(2, 4, 2, 6) == surd(1, 2, 2, 3));
  CHECK(surd(1, 1, 12, 1) == surd(1, 2, 3, 1));
  CHECK(surd(0, 1, 2, -1) == surd(0, -1, 2, 1));
  CHECK_THROWS_AS(QuadSurd::sqrt(2) + QuadSurd::sqrt(3), std::domain_error);
}

TEST_CASE("surd arithmetic") {
  const QuadSurd r2 = QuadSurd::sqrt(2);
  CHECK(r2 * r2 == QuadSurd(2));
  CHECK((r2 + 1).reciprocal() == r2 - 1);
  CHECK(surd(1, 1, 5, 2).discriminant() == 5);
  CHECK(surd(1, 1, 5, 2).minimal_polynomial() == std::array<Integer, 3>{1, -1, -1});
}

TEST_CASE("convergent matrix") {
  CHECK(convergent_matrix({3, 7, 15, 1}) == Matrix2{355, 333, 113, 106});
  CHECK(convergent_matrix({}) == Matrix2::identity());
}

TEST_CASE("continued fraction literals") {
  CHECK(parse_cf("[3;(3,6)]") == ContinuedFraction::periodic({3}, {3, 6}));
  CHECK(parse_cf("[(1)]") == ContinuedFraction::periodic({}, {1}));
  CHECK(parse_cf("[1;1_4,(2,1_3)]") == ContinuedFraction::periodic({1, 1, 1, 1, 1}, {2, 1, 1, 1}));
  CHECK(parse_cf_literal("[3;7,15,1,292,...]").open_ended);
  CHECK_THROWS(parse_cf("[3;0,2]"));
  CHECK_THROWS(parse_cf("3;7"));
}

TEST_CASE("streams") {
  const CfStream s = CfStream::cycle({2}, {1, 2});
  CHECK(s.prefix(6) == Quotients{2, 1, 2, 1, 2, 1});
  const CfStream f = CfStream::from_quotients({1, 2});
  CHECK(f.at(2) == nullptr);
  const Integer* first = f.at(0);
  f.at(1);
  CHECK(*first == 1);
}

}  // TEST_SUITE
