#pragma once

#include "jimm/continued_fraction.hpp"
#include "jimm/quad_surd.hpp"
#include "jimm/rational.hpp"

#include <string_view>
#include <variant>

namespace jimm {

/// A parsed real: exact rational (or infinity), exact surd, or a lazy expansion.
using RealValue = std::variant<Rational, QuadSurd, CfStream>;

/**
 * Number literals:
 *   inf, 22/7, -3
 *   (P+Q*sqrt(D))/R and other +,-,*,/ expressions over integers and sqrt(n)
 *   [3;7,15,1], [3;(3,6)], [(1)], [1;1_4,(2,1_3)]
 *   [3;7,15,1,292,...]  continued with pi, e or cbrt2 when the prefix matches
 *   pi, e, cbrt2, phi
 * Surd results that are rational come back as Rational.
 */
RealValue parse_number(std::string_view text);

/// Name of the bundled constant whose expansion starts with `head`, if any.
std::optional<std::string> match_constant(const Quotients& head);
CfStream constant_stream(std::string_view name);

}  // namespace jimm
