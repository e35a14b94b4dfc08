#include "skewtorus/poly_angle.hpp"

#include "skewtorus/combinatorics.hpp"

namespace skewtorus {

PolyAngle::PolyAngle(std::vector<Angle> coeffs) : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back().is_zero())
    coeffs_.pop_back();
  if (coeffs_.empty())
    coeffs_.emplace_back();
}

Angle PolyAngle::operator()(const mpz_class &n) const {
  Angle r;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    r += binom(n, k) * coeffs_[k];
  return r;
}

PolyAngle PolyAngle::difference() const {
  if (coeffs_.size() == 1)
    return PolyAngle();
  return PolyAngle(std::vector<Angle>(coeffs_.begin() + 1, coeffs_.end()));
}

PolyAngle PolyAngle::shifted(const mpz_class &k) const {
  // C(n+k, d) = sum_j C(k, d-j) C(n, j)
  std::vector<Angle> out(coeffs_.size());
  for (std::size_t d = 0; d < coeffs_.size(); ++d)
    for (std::size_t j = 0; j <= d; ++j)
      out[j] += binom(k, d - j) * coeffs_[d];
  return PolyAngle(std::move(out));
}

} // namespace skewtorus
