#include "skewtorus/endo.hpp"

#include "skewtorus/combinatorics.hpp"
#include "skewtorus/errors.hpp"

#include <string>

namespace skewtorus {

Angle TruncationContext::generator(std::size_t i) const {
  return Angle::term(basis, i, mpq_class(mpz_class(1), modulus));
}

ContextPtr make_context(int level, BasisPtr basis) {
  if (level < 2)
    throw ConfigError("truncation level must be at least 2, got " + std::to_string(level));
  if (level > 64)
    throw ConfigError("truncation level " + std::to_string(level) + " is above the supported 64");
  if (!basis)
    basis = make_basis({});
  return std::make_shared<const TruncationContext>(
      TruncationContext{level, factorial(static_cast<unsigned long>(level)), std::move(basis)});
}

bool same_context(const ContextPtr &a, const ContextPtr &b) {
  if (a == b)
    return true;
  return a && b && a->level == b->level &&
         (a->basis == b->basis || *a->basis == *b->basis);
}

int level_absorbing(const mpz_class &den, int cap) {
  mpz_class rem = abs(den);
  mpz_class g;
  for (int l = 1; l <= cap; ++l) {
    if (rem == 1)
      return l;
    mpz_gcd_ui(g.get_mpz_t(), rem.get_mpz_t(), static_cast<unsigned long>(l));
    rem /= g;
    if (rem == 1)
      return l;
  }
  return -1;
}

namespace {

mpz_class mod(const mpz_class &a, const mpz_class &m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

bool divides_modulus(const Angle &a, const mpz_class &modulus) {
  return mpz_divisible_p(modulus.get_mpz_t(), a.denominator_lcm().get_mpz_t()) != 0;
}

} // namespace

TruncEndo::TruncEndo(ContextPtr ctx, const mpz_class &residue, std::vector<Angle> images)
    : ctx_(std::move(ctx)), residue_(mod(residue, ctx_->modulus)), images_(std::move(images)) {
  if (images_.size() != ctx_->basis->size())
    throw ConfigError("endomorphism needs " + std::to_string(ctx_->basis->size()) +
                      " images, got " + std::to_string(images_.size()));
  for (std::size_t i = 0; i < images_.size(); ++i) {
    (void)common_basis(images_[i].basis(), ctx_->basis);
    if (!divides_modulus(images_[i], ctx_->modulus))
      throw ConfigError("image of " + ctx_->basis->name(i) + "/L! has a denominator not dividing " +
                        ctx_->modulus.get_str());
  }
}

TruncEndo TruncEndo::power(const mpz_class &n, const ContextPtr &ctx) {
  std::vector<Angle> images;
  images.reserve(ctx->basis->size());
  for (std::size_t i = 0; i < ctx->basis->size(); ++i)
    images.push_back(n * ctx->generator(i));
  return TruncEndo(Unchecked{}, ctx, mod(n, ctx->modulus), std::move(images));
}

bool TruncEndo::is_zero() const {
  if (residue_ != 0)
    return false;
  for (const auto &a : images_)
    if (!a.is_zero())
      return false;
  return true;
}

Angle TruncEndo::operator()(const Angle &a) const {
  (void)common_basis(a.basis(), ctx_->basis);
  const mpz_class &L = ctx_->modulus;
  if (!divides_modulus(a, L)) {
    const int need = level_absorbing(a.denominator_lcm());
    throw TruncationError("angle denominator " + a.denominator_lcm().get_str() +
                              " does not divide " + L.get_str() + " (level " +
                              std::to_string(ctx_->level) + "); level " +
                              std::to_string(need) + " is required",
                          need);
  }
  // a = p/L! + sum c_i * (b_i/L!)
  mpq_class p = a.rat() * L;
  Angle out(ctx_->basis, mpq_class(p.get_num() * residue_, L), {});
  for (const auto &[index, c] : a.coeffs()) {
    mpq_class ci = c * L;
    out += ci.get_num() * images_[index];
  }
  return out;
}

TruncEndo operator+(const TruncEndo &a, const TruncEndo &b) {
  if (!same_context(a.ctx_, b.ctx_))
    throw ConfigError("endomorphisms live in different truncation contexts");
  std::vector<Angle> images = a.images_;
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] += b.images_[i];
  return TruncEndo(TruncEndo::Unchecked{}, a.ctx_, mod(a.residue_ + b.residue_, a.ctx_->modulus),
                   std::move(images));
}

TruncEndo operator-(const TruncEndo &a) {
  std::vector<Angle> images;
  images.reserve(a.images_.size());
  for (const auto &x : a.images_)
    images.push_back(-x);
  return TruncEndo(TruncEndo::Unchecked{}, a.ctx_, mod(-a.residue_, a.ctx_->modulus),
                   std::move(images));
}

bool operator==(const TruncEndo &a, const TruncEndo &b) {
  if (!same_context(a.ctx_, b.ctx_))
    throw ConfigError("endomorphisms live in different truncation contexts");
  return a.residue_ == b.residue_ && a.images_ == b.images_;
}

TruncEndo compose(const TruncEndo &phi, const TruncEndo &psi) {
  if (!same_context(phi.ctx_, psi.ctx_))
    throw ConfigError("endomorphisms live in different truncation contexts");
  std::vector<Angle> images;
  images.reserve(psi.images_.size());
  for (const auto &x : psi.images_)
    images.push_back(phi(x));
  return TruncEndo(TruncEndo::Unchecked{}, phi.ctx_,
                   mod(phi.residue_ * psi.residue_, phi.ctx_->modulus), std::move(images));
}

} // namespace skewtorus
