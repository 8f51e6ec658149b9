#pragma once

#include "jimm/integer.hpp"
#include "jimm/rational.hpp"

#include <array>
#include <compare>
#include <string>
#include <utility>

namespace jimm {

/**
 * Element (p + q*sqrt(d))/r of a real quadratic field, kept in normal form:
 * r > 0, gcd(p,q,r) = 1, d > 1 with square factors removed. A zero q means
 * the value is rational and d is then 1.
 *
 * Comparisons are exact. Arithmetic between values from different fields
 * throws std::domain_error.
 */
class QuadSurd {
 public:
  QuadSurd() : p_(0), q_(0), d_(1), r_(1) {}
  QuadSurd(const Integer& p, const Integer& q, const Integer& d, const Integer& r);
  QuadSurd(const Rational& x);  // NOLINT(google-explicit-constructor)
  QuadSurd(long n) : QuadSurd(Rational(n)) {}  // NOLINT(google-explicit-constructor)

  static QuadSurd sqrt(const Integer& n);

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  const Integer& d() const { return d_; }
  const Integer& r() const { return r_; }

  bool is_rational() const { return sgn(q_) == 0; }
  /// Requires is_rational().
  Rational to_rational() const;

  QuadSurd conjugate() const;
  Integer floor() const;
  int sign() const;

  /// Coefficients (a,b,c), gcd 1 and a > 0, of the minimal polynomial ax^2+bx+c.
  /// For a rational value a is 0.
  std::array<Integer, 3> minimal_polynomial() const;
  /// b^2 - 4ac of the minimal polynomial.
  Integer discriminant() const;

  QuadSurd operator-() const;
  QuadSurd reciprocal() const;
  friend QuadSurd operator+(const QuadSurd& a, const QuadSurd& b);
  friend QuadSurd operator-(const QuadSurd& a, const QuadSurd& b);
  friend QuadSurd operator*(const QuadSurd& a, const QuadSurd& b);
  friend QuadSurd operator/(const QuadSurd& a, const QuadSurd& b);

  friend bool operator==(const QuadSurd& a, const QuadSurd& b);
  friend std::strong_ordering operator<=>(const QuadSurd& a, const QuadSurd& b);

  /// "(P+Q*sqrt(D))/R", or the rational form when q = 0.
  std::string str() const;
  double to_double() const;

  /// floor(x * 2^k), used for comparisons across different fields.
  Integer scaled_floor(unsigned long k) const;

 private:
  struct Reduced {};
  QuadSurd(Reduced, Integer p, Integer q, Integer d, Integer r);
  void normalize();

  Integer p_, q_, d_, r_;
};

/// Splits n > 0 as s^2 * core with core free of square factors below 10^5
/// (and fully squarefree whenever n < 10^15).
std::pair<Integer, Integer> split_square_part(const Integer& n);

/// Exact sign of p + q*sqrt(d) for d not a perfect square.
int sign_of_surd_numerator(const Integer& p, const Integer& q, const Integer& d);

}  // namespace jimm
