#pragma once

#include "jimm/boundary_word.hpp"
#include "jimm/continued_fraction.hpp"
#include "jimm/matrix.hpp"
#include "jimm/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

namespace jimm {

/// Lazy expansion of (a x + b)/(c x + d) for a stream x (Gosper's algorithm).
/// The matrix must be invertible.
CfStream homographic_stream(const Matrix2& m, const CfStream& x);

/// Closed rational interval [lo, hi] known to contain a value.
struct Enclosure {
  Rational lo;
  Rational hi;
  Rational width() const { return hi - lo; }
};

/// Encloses the value of an infinite stream within `width`, reading at most
/// `max_terms` quotients. Empty if the stream ends or the budget runs out
/// first. A stream that ends gives its exact rational as a point.
std::optional<Enclosure> enclose(const CfStream& x, const Rational& width,
                                 std::size_t max_terms = 1'000'000);

/// Truncated decimal expansion with `digits` digits after the point.
std::string render_decimal(const Rational& x, std::size_t digits);
std::string render_decimal(const QuadSurd& x, std::size_t digits);
std::string render_decimal(const ExactReal& x, std::size_t digits);
/// Empty when the stream runs out before the digits are certain.
std::optional<std::string> render_decimal(const CfStream& x, std::size_t digits);

/// Stream of the expansion of e: [2;1,2,1,1,4,1,1,6,...].
CfStream e_stream();
/// The bundled quotients of pi (finite; ends after the bundled count).
CfStream pi_stream();
std::size_t pi_quotient_count();
/// Expansion of the unique real root > 1 of a polynomial with one real root,
/// coefficients from the constant term up.
CfStream polynomial_root_stream(Quotients coefficients);
/// 2^(1/3).
CfStream cbrt2_stream();

}  // namespace jimm
