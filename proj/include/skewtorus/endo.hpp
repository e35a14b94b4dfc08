#pragma once

#include "skewtorus/circle.hpp"

#include <gmpxx.h>

#include <memory>
#include <vector>

namespace skewtorus {

inline constexpr int kDefaultLevel = 6;

/// Truncation level L with its cached modulus L! and the basis every
/// endomorphism in this context is written over.
struct TruncationContext {
  int level;
  mpz_class modulus;
  BasisPtr basis;

  /// b_i / L!
  Angle generator(std::size_t i) const;
};

using ContextPtr = std::shared_ptr<const TruncationContext>;

/// level must be >= 2. A null basis is replaced by an empty declaration.
ContextPtr make_context(int level, BasisPtr basis);

bool same_context(const ContextPtr &a, const ContextPtr &b);

/// Smallest L with den | L!, searched up to `cap`; -1 if not found.
int level_absorbing(const mpz_class &den, int cap = 1 << 20);

/// Endomorphism of the circle restricted to <T_{L!}, b_1/L!, ...>: a residue
/// mod L! (the power it acts by on torsion) and the image of each b_i/L!.
class TruncEndo {
public:
  /// Throws ConfigError if an image has a denominator not dividing L!.
  TruncEndo(ContextPtr ctx, const mpz_class &residue, std::vector<Angle> images);

  /// n^x
  static TruncEndo power(const mpz_class &n, const ContextPtr &ctx);
  static TruncEndo power(long n, const ContextPtr &ctx) { return power(mpz_class(n), ctx); }

  const ContextPtr &context() const noexcept { return ctx_; }
  const mpz_class &residue() const noexcept { return residue_; }
  const std::vector<Angle> &images() const noexcept { return images_; }
  const Angle &image(std::size_t i) const { return images_.at(i); }

  bool is_zero() const;

  /// phi(a); throws TruncationError when a is outside the represented
  /// subgroup.
  Angle operator()(const Angle &a) const;

  /// Pointwise product (written additively).
  friend TruncEndo operator+(const TruncEndo &a, const TruncEndo &b);
  /// Pointwise inverse.
  friend TruncEndo operator-(const TruncEndo &a);
  friend TruncEndo operator-(const TruncEndo &a, const TruncEndo &b) { return a + (-b); }

  friend bool operator==(const TruncEndo &a, const TruncEndo &b);

private:
  struct Unchecked {};
  TruncEndo(Unchecked, ContextPtr ctx, mpz_class residue, std::vector<Angle> images)
      : ctx_(std::move(ctx)), residue_(std::move(residue)), images_(std::move(images)) {}

  friend TruncEndo compose(const TruncEndo &phi, const TruncEndo &psi);

  ContextPtr ctx_;
  mpz_class residue_;
  std::vector<Angle> images_;
};

/// phi o psi
TruncEndo compose(const TruncEndo &phi, const TruncEndo &psi);

} // namespace skewtorus
