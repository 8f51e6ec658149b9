#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jimm {

/// Arbitrary precision signed integer.
using Integer = mpz_class;

/// Floor of the square root of a non-negative integer.
Integer isqrt(const Integer& n);

bool is_perfect_square(const Integer& n);

/// Quotient rounded toward negative infinity. Divisor must be nonzero.
Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);

Integer pow10(unsigned long e);

Integer parse_integer(std::string_view text);

std::string to_string(const Integer& n);

inline int sign(const Integer& n) { return sgn(n); }

}  // namespace jimm
