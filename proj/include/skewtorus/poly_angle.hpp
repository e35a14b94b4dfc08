#pragma once

#include "skewtorus/circle.hpp"

#include <gmpxx.h>

#include <vector>

namespace skewtorus {

/// Angle-valued polynomial in the binomial basis:
///   n -> sum_k coeffs[k] * C(n, k).
/// Trailing zero coefficients are trimmed; the zero polynomial is {0}.
class PolyAngle {
public:
  PolyAngle() : coeffs_{Angle()} {}
  explicit PolyAngle(std::vector<Angle> coeffs);

  const std::vector<Angle> &coeffs() const noexcept { return coeffs_; }
  const Angle &coeff(std::size_t k) const { return coeffs_.at(k); }
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }

  Angle operator()(const mpz_class &n) const;

  /// q(n) = p(n+1) - p(n), i.e. drop c_0.
  PolyAngle difference() const;

  /// n -> p(n + k), re-expanded with Vandermonde.
  PolyAngle shifted(const mpz_class &k) const;

  friend bool operator==(const PolyAngle &, const PolyAngle &) = default;

private:
  std::vector<Angle> coeffs_;
};

} // namespace skewtorus
