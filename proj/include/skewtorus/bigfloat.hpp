#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <utility>

namespace skewtorus::detail {

/// Working precision for every numeric bridge out of the exact algebra.
inline constexpr mpfr_prec_t kWorkingBits = 256;

/// Owning MPFR value.
class BigFloat {
public:
  BigFloat() { mpfr_init2(v_, kWorkingBits); mpfr_set_zero(v_, 1); }
  BigFloat(const BigFloat &o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat &&o) noexcept : BigFloat() { mpfr_swap(v_, o.v_); }
  BigFloat &operator=(BigFloat o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_ptr get() noexcept { return v_; }
  mpfr_srcptr get() const noexcept { return v_; }

private:
  mpfr_t v_;
};

/// Fractional part in [0, 1) of an MPFR value, rounded to double.
inline double frac_to_double(mpfr_ptr x) {
  mpfr_frac(x, x, MPFR_RNDN);
  if (mpfr_sgn(x) < 0)
    mpfr_add_ui(x, x, 1, MPFR_RNDN);
  double d = mpfr_get_d(x, MPFR_RNDN);
  return d >= 1.0 ? 0.0 : d;
}

} // namespace skewtorus::detail
