#pragma once

#include "skewtorus/circle.hpp"
#include "skewtorus/poly_angle.hpp"

#include <string>
#include <string_view>

namespace skewtorus {

// Text forms. The grammar is documented in README.md; every parse error is a
// ParseError carrying the byte offset of the offending character.

/// "1/3 + 1/2*b1 - 2*b2". Symbols must be declared in `basis` (which may be
/// null for purely rational input).
Angle parse_angle(std::string_view text, const BasisPtr &basis);

/// Comma separated angles: "0, 1/2*b1".
TorusPoint parse_point(std::string_view text, const BasisPtr &basis);

/// Binomial-basis polynomial: "1/5 + b1*C(n,1) + 1/2*b1*C(n,2)".
PolyAngle parse_poly(std::string_view text, const BasisPtr &basis);

std::string format_rational(const mpq_class &q);
std::string format_angle(const Angle &a);
std::string format_point(const TorusPoint &p);
std::string format_poly(const PolyAngle &p);

} // namespace skewtorus
