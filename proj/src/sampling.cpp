#include "skewtorus/sampling.hpp"

#include "skewtorus/combinatorics.hpp"
#include "skewtorus/errors.hpp"

namespace skewtorus {

std::uint64_t case_seed(std::uint64_t seed, std::string_view id) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : id) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  // splitmix64 finaliser over the combination
  std::uint64_t z = seed ^ h;
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long Sampler::uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

bool Sampler::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

mpz_class Sampler::below(const mpz_class &n) {
  if (n <= 0)
    throw std::invalid_argument("Sampler::below needs a positive bound");
  if (n.fits_ulong_p())
    return mpz_class(std::uniform_int_distribution<unsigned long>(0, n.get_ui() - 1)(rng_));
  mpz_class r = 0;
  const std::size_t words = mpz_sizeinbase(n.get_mpz_t(), 2) / 64 + 2;
  for (std::size_t i = 0; i < words; ++i) {
    r <<= 64;
    r += mpz_class(std::to_string(rng_()));
  }
  return r % n;
}

Angle Sampler::torsion_angle() {
  const mpz_class &L = ctx_->modulus;
  return Angle(ctx_->basis, mpq_class(below(L), L), {});
}

Angle Sampler::angle() {
  const mpz_class &L = ctx_->modulus;
  const long lim = L.fits_slong_p() ? L.get_si() : 1000000L;
  Angle::Coeffs coeffs;
  for (std::size_t i = 0; i < ctx_->basis->size(); ++i) {
    if (coin(0.25))
      continue;
    coeffs[i] = mpq_class(mpz_class(uniform(-lim, lim)), L);
  }
  return Angle(ctx_->basis, mpq_class(below(L), L), std::move(coeffs));
}

TorusPoint Sampler::point(std::size_t n) {
  TorusPoint p;
  for (std::size_t i = 0; i < n; ++i)
    p.coords.push_back(angle());
  return p;
}

TruncEndo Sampler::endo_with_residue(const mpz_class &r) {
  std::vector<Angle> images;
  for (std::size_t i = 0; i < ctx_->basis->size(); ++i)
    images.push_back(angle());
  return TruncEndo(ctx_, r, std::move(images));
}

TruncEndo Sampler::endo() { return endo_with_residue(below(ctx_->modulus)); }

std::vector<mpz_class> Sampler::residues(int m, const mpz_class &r1, int zero_through) {
  const mpz_class &L = ctx_->modulus;
  std::vector<mpz_class> r(static_cast<std::size_t>(m) + 1);
  r[0] = 1;
  for (int k = 1; k <= m; ++k) {
    if (k <= zero_through)
      continue;
    if (k == 1) {
      r[1] = r1;
      continue;
    }
    const mpz_class kf = factorial(static_cast<unsigned long>(k));
    const mpz_class step = L / kf;
    mpz_class base;
    mpz_fdiv_r(base.get_mpz_t(), binom(r1, static_cast<unsigned long>(k)).get_mpz_t(),
               step.get_mpz_t());
    r[k] = base + below(kf) * step;
  }
  return r;
}

HmElement Sampler::element(int m) { return element_trivial_prefix(m, 0); }

HmElement Sampler::element_trivial_prefix(int m, int k) {
  const mpz_class r1 = k >= 1 ? mpz_class(0) : below(ctx_->modulus);
  const auto r = residues(m, r1, k);
  std::vector<TruncEndo> comps;
  comps.push_back(TruncEndo::power(1, ctx_));
  for (int j = 1; j <= m; ++j)
    comps.push_back(j <= k ? TruncEndo::power(0, ctx_) : endo_with_residue(r[j]));
  return HmElement::validate(std::move(comps), ctx_, m);
}

namespace {

TruncEndo with_image(const TruncEndo &e, std::size_t i, const Angle &value) {
  auto images = e.images();
  images[i] = value;
  return TruncEndo(e.context(), e.residue(), std::move(images));
}

} // namespace

HmElement Sampler::g1_element(const FactorConfig &cfg) {
  std::vector<TruncEndo> comps;
  comps.push_back(TruncEndo::power(1, ctx_));
  for (int k = 1; k <= cfg.m; ++k)
    comps.push_back(endo_with_residue(0));
  comps[1] = with_image(comps[1], cfg.x_index,
                        Angle(ctx_->basis, coin() ? mpq_class(1, 2) : mpq_class(0), {}));
  return HmElement::validate(std::move(comps), ctx_, cfg.m);
}

HmElement Sampler::g_element(const FactorConfig &cfg) {
  HmElement g = g1_element(cfg);
  auto comps = g.comps();
  comps[2] = with_image(comps[2], cfg.x_index, Angle(ctx_->basis, 0, {}));
  return HmElement::validate(std::move(comps), ctx_, cfg.m);
}

HmElement Sampler::kernel_element(int m, const KernelSpec &spec) {
  bool torsion_gen = false;
  std::vector<bool> killed(ctx_->basis->size(), false);
  for (const auto &g : spec.gamma) {
    if (g.rat() != 0)
      torsion_gen = true;
    for (const auto &[i, _] : g.coeffs())
      killed[i] = true;
  }
  const mpz_class r1 =
      spec.m > 1 || torsion_gen ? mpz_class(0) : below(ctx_->modulus);
  auto r = residues(m, r1, spec.m - 1);
  if (torsion_gen)
    r[static_cast<std::size_t>(spec.m)] = 0;
  std::vector<TruncEndo> comps;
  comps.push_back(TruncEndo::power(1, ctx_));
  for (int k = 1; k <= m; ++k) {
    if (k < spec.m) {
      comps.push_back(TruncEndo::power(0, ctx_));
      continue;
    }
    TruncEndo e = endo_with_residue(r[static_cast<std::size_t>(k)]);
    if (k == spec.m)
      for (std::size_t i = 0; i < killed.size(); ++i)
        if (killed[i])
          e = with_image(e, i, Angle(ctx_->basis, 0, {}));
    comps.push_back(std::move(e));
  }
  HmElement out = HmElement::validate(std::move(comps), ctx_, m);
  if (!kernel_member(out, spec))
    throw ConfigError("kernel spec generators are not of the supported form "
                      "(torsion angles or single basis terms)");
  return out;
}

} // namespace skewtorus
