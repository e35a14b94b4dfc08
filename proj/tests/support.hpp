#pragma once

#include "skewtorus/config.hpp"
#include "skewtorus/endo.hpp"
#include "skewtorus/syntax.hpp"

namespace skewtorus::testing {

// Level 6 over the default two-symbol basis.
inline ContextPtr default_ctx() {
  static const ContextPtr ctx = Config{}.context();
  return ctx;
}

inline ContextPtr ctx_at(int level) { return make_context(level, default_ctx()->basis); }

inline Angle A(const char *text) { return parse_angle(text, default_ctx()->basis); }

inline TorusPoint P(const char *text) { return parse_point(text, default_ctx()->basis); }

inline PolyAngle Poly(const char *text) { return parse_poly(text, default_ctx()->basis); }

} // namespace skewtorus::testing
