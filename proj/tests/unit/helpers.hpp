#pragma once

#include "jimm/boundary_word.hpp"
#include "jimm/number_parser.hpp"
#include "jimm/quad_surd.hpp"

#include <stdexcept>
#include <string_view>

namespace jimm::testing {

/// (p + q sqrt d)/r
inline QuadSurd surd(long p, long q, long d, long r = 1) {
  return QuadSurd(Integer(p), Integer(q), Integer(d), Integer(r));
}

inline Rational rat(long p, long q = 1) { return Rational(Integer(p), Integer(q)); }

inline QuadSurd parse_surd(std::string_view text) {
  RealValue v = parse_number(text);
  if (auto* s = std::get_if<QuadSurd>(&v)) return *s;
  throw std::invalid_argument("not a surd");
}

inline bool is_surd(const ExactReal& x, const QuadSurd& expected) {
  return exact_equal(x, ExactReal(expected));
}

}  // namespace jimm::testing
