#pragma once

#include "skewtorus/ellis.hpp"
#include "skewtorus/factor_lab.hpp"

#include <cstdint>
#include <random>

namespace skewtorus {

/// Random generators for the property suites. Everything drawn has
/// denominators dividing L!, so it stays inside the represented subgroup.
class Sampler {
public:
  Sampler(std::uint64_t seed, ContextPtr ctx) : rng_(seed), ctx_(std::move(ctx)) {}

  std::mt19937_64 &rng() noexcept { return rng_; }
  const ContextPtr &context() const noexcept { return ctx_; }

  long uniform(long lo, long hi);
  bool coin(double p = 0.5);
  /// Uniform in [0, n).
  mpz_class below(const mpz_class &n);

  /// c/L! + sum_i c_i b_i/L! with |c_i| <= L!; about a quarter of the
  /// symbol coefficients are zero.
  Angle angle();
  Angle torsion_angle();
  TorusPoint point(std::size_t n);

  TruncEndo endo();
  TruncEndo endo_with_residue(const mpz_class &r);

  /// Residues r_k = (C(r_1, k) mod L!/k!) + j L!/k!; images unconstrained.
  HmElement element(int m);
  /// Same, with phi_1 .. phi_k equal to 0^x.
  HmElement element_trivial_prefix(int m, int k);

  HmElement g1_element(const FactorConfig &cfg);
  HmElement g_element(const FactorConfig &cfg);

  /// Member of the kernel family described by spec, at length m.
  HmElement kernel_element(int m, const KernelSpec &spec);

private:
  std::vector<mpz_class> residues(int m, const mpz_class &r1, int zero_through);

  std::mt19937_64 rng_;
  ContextPtr ctx_;
};

/// Per-case stream: seed mixed with an FNV-1a hash of the case id.
std::uint64_t case_seed(std::uint64_t seed, std::string_view id);

} // namespace skewtorus
