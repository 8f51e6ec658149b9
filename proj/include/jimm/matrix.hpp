#pragma once

#include "jimm/integer.hpp"
#include "jimm/quad_surd.hpp"
#include "jimm/rational.hpp"

#include <string>
#include <string_view>

namespace jimm {

/// Integer 2x2 matrix [[a,b],[c,d]] acting by x -> (ax+b)/(cx+d).
struct Matrix2 {
  Integer a{1}, b{0}, c{0}, d{1};

  static Matrix2 identity() { return {}; }

  Integer det() const { return a * d - b * c; }
  Integer trace() const { return a + d; }
  bool is_unimodular() const { return abs(det()) == 1; }

  /// Adjugate; the inverse up to the sign of the determinant.
  Matrix2 adjugate() const { return {d, -b, -c, a}; }

  /// Sign-normalized representative: first nonzero entry positive.
  Matrix2 canonical() const;

  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Matrix2& x, const Matrix2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }

  /// "[[a,b],[c,d]]"
  std::string str() const;
};

/// Equality in PGL(2): M ~ -M.
bool projectively_equal(const Matrix2& x, const Matrix2& y);

Matrix2 power(const Matrix2& m, long k);

/// Projective action; infinity maps to a/c.
Rational mobius_apply(const Matrix2& m, const Rational& x);
/// Throws std::domain_error if the image is infinite.
QuadSurd mobius_apply(const Matrix2& m, const QuadSurd& x);

/// Parses "[[a,b],[c,d]]".
Matrix2 parse_matrix(std::string_view text);

/// Fibonacci numbers for every integer index, F_{-n} = (-1)^{n+1} F_n.
Integer fib(long n);
/// Lucas numbers for n >= 0.
Integer lucas(long n);

}  // namespace jimm
