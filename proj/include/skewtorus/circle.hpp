#pragma once

#include "skewtorus/bigfloat.hpp"

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace skewtorus {

/// A finite list of symbolic irrationals b_1, ..., b_r. Together with 1 they
/// are assumed linearly independent over the rationals; that assumption is
/// what makes Angle equality decidable, and it is never checked.
///
/// The decimal values only feed numeric evaluation (to_unit, Weyl sums).
class BasisDecl {
public:
  struct Symbol {
    std::string name;
    std::string value; ///< decimal literal in (0, 1)
  };

  explicit BasisDecl(std::vector<Symbol> symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  const Symbol &symbol(std::size_t i) const { return symbols_.at(i); }
  const std::string &name(std::size_t i) const { return symbols_.at(i).name; }
  const std::vector<Symbol> &symbols() const noexcept { return symbols_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  mpfr_srcptr numeric(std::size_t i) const { return numeric_.at(i).get(); }

  friend bool operator==(const BasisDecl &a, const BasisDecl &b);

private:
  std::vector<Symbol> symbols_;
  std::vector<detail::BigFloat> numeric_;
};

using BasisPtr = std::shared_ptr<const BasisDecl>;

BasisPtr make_basis(std::vector<BasisDecl::Symbol> symbols);

/// Reduce a rational into [0, 1).
mpq_class frac(const mpq_class &q);

/// Exact element of the circle group, written additively:
///   rat + sum_i coeffs[i] * b_i  (mod 1).
/// Only the rational part is reduced; basis coefficients are kept exactly.
class Angle {
public:
  using Coeffs = std::map<std::size_t, mpq_class>;

  Angle() = default;
  explicit Angle(const mpq_class &rat) : rat_(frac(rat)) {}
  Angle(BasisPtr basis, const mpq_class &rat, Coeffs coeffs);

  /// coeff * b_index
  static Angle term(BasisPtr basis, std::size_t index, const mpq_class &coeff);

  const mpq_class &rat() const noexcept { return rat_; }
  const Coeffs &coeffs() const noexcept { return coeffs_; }
  const BasisPtr &basis() const noexcept { return basis_; }
  mpq_class coeff(std::size_t index) const;

  bool is_zero() const { return coeffs_.empty() && rat_ == 0; }
  bool is_torsion() const noexcept { return coeffs_.empty(); }

  /// Least common multiple of all denominators, rational part included.
  mpz_class denominator_lcm() const;

  Angle &operator+=(const Angle &o);
  Angle &operator-=(const Angle &o);

  friend Angle operator+(Angle a, const Angle &b) { return a += b; }
  friend Angle operator-(Angle a, const Angle &b) { return a -= b; }
  friend Angle operator-(const Angle &a);
  friend Angle operator*(const mpz_class &n, const Angle &a);
  friend Angle operator*(long n, const Angle &a) { return mpz_class(n) * a; }

  /// Componentwise; throws ConfigError for incompatible basis declarations.
  friend bool operator==(const Angle &a, const Angle &b);

  /// Total order used only for deterministic sorting.
  friend bool operator<(const Angle &a, const Angle &b);

private:
  BasisPtr basis_;
  mpq_class rat_{0};
  Coeffs coeffs_;
};

/// Returns the basis both operands live over, or throws ConfigError.
BasisPtr common_basis(const BasisPtr &a, const BasisPtr &b);

/// Order of a torsion angle (denominator of its rational part); nullopt when
/// the angle carries any basis term.
std::optional<mpz_class> torsion_order(const Angle &a);

/// Numeric bridge: exp(2 pi i theta) with theta evaluated at 256 bits before
/// rounding to double.
std::complex<double> to_unit(const Angle &a);

/// theta mod 1 in [0, 1), evaluated at working precision.
double phase(const Angle &a);

/// Point of a torus: a fixed-length list of angles.
struct TorusPoint {
  std::vector<Angle> coords;

  TorusPoint() = default;
  explicit TorusPoint(std::vector<Angle> c) : coords(std::move(c)) {}

  std::size_t size() const noexcept { return coords.size(); }
  Angle &operator[](std::size_t i) { return coords[i]; }
  const Angle &operator[](std::size_t i) const { return coords[i]; }

  friend bool operator==(const TorusPoint &, const TorusPoint &) = default;
};

} // namespace skewtorus
