#pragma once

#include "jimm/integer.hpp"

#include <compare>
#include <string>
#include <string_view>

namespace jimm {

/**
 * Reduced fraction num/den with den > 0, plus a single unsigned infinity 1/0
 * that compares above every finite value.
 */
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);

  static Rational infinity();

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  bool is_infinite() const { return sgn(den_) == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return sgn(num_); }

  Integer floor() const;
  Rational reciprocal() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p/q", "n" for integers, "inf" for infinity.
  std::string str() const;

  /// Finite values only; accurate to double rounding of the quotient.
  double to_double() const;

 private:
  struct Raw {};
  Rational(Raw, Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {}

  Integer num_;
  Integer den_;
};

/// Accepts "n", "p/q" and "inf".
Rational parse_rational(std::string_view text);

}  // namespace jimm
