#pragma once

#include "skewtorus/ellis.hpp"

#include <string>
#include <vector>

namespace skewtorus {

/// The fixed irrational x is x_sym / L!, a generator of the represented
/// subgroup, so every element can prescribe phi_k(x) freely.
struct FactorConfig {
  ContextPtr ctx;
  std::size_t x_index = 0;
  int m = 3;

  Angle x() const { return ctx->generator(x_index); }
  const std::string &x_name() const { return ctx->basis->name(x_index); }
};

/// Throws ConfigError when x_sym is not declared or m is outside [2, L].
FactorConfig make_factor_config(ContextPtr ctx, const std::string &x_sym, int m = 3);

struct KernelSpec {
  int m;
  std::vector<Angle> gamma;
};

/// phi_1(2x) == 0 and phi_1 ... phi_m kill the represented torsion.
bool g1_member(const HmElement &phi, const FactorConfig &cfg);
/// g1_member and phi_2(x) == 0.
bool g_member(const HmElement &phi, const FactorConfig &cfg);

/// (A): phi_1(2x) == psi_1(2x)
bool condition_a(const HmElement &phi, const HmElement &psi, const FactorConfig &cfg);
/// (B): the residues of phi_k and psi_k agree for 1 <= k <= m.
bool condition_b(const HmElement &phi, const HmElement &psi);

/// phi_1(phi_1(x) - psi_1(x)), an element of {0, 1/2}. Throws RelationError
/// unless (A) and (B) hold.
Angle alpha(const HmElement &phi, const HmElement &psi, const FactorConfig &cfg);

/// (A), (B) and phi_2(x) == psi_2(x) + alpha(phi, psi).
bool coset_equal(const HmElement &phi, const HmElement &psi, const FactorConfig &cfg);

/// v_1, v_2 in 2Z x + torsion, v_k torsion for k >= 3; v_0 arbitrary.
bool qef_coset_constant(const std::vector<Angle> &v, const FactorConfig &cfg);

/// (id, 0^x, phi_2, 0^x, ...) with phi_2 of residue 0 and phi_2(x) = value.
HmElement witness_element(const FactorConfig &cfg, const Angle &value_at_x);

struct WitnessReport {
  bool valid = false;
  bool cosets_distinct = false;
  std::size_t enumerated = 0;
  std::size_t coset_constant = 0;
  std::size_t agreeing = 0;
  std::vector<std::string> disagreements; ///< first few offending v, formatted
  bool control_separates = false;          ///< v = (0, 0, x)
  bool control_not_constant = false;
  bool zero_witness_is_identity = false; ///< phi_2(x) = 0 gives the identity coset
  bool pass = false;
};

/// Builds phi* (phi_2(x) = 1/2) and checks it against the identity over the
/// single-entry family: at each index 0..m, torsion c/L!, j*x with
/// 0 < |j| <= L!, and c * b/L! for every other symbol with 0 < |c| <= L!.
std::pair<HmElement, WitnessReport> nonseparation_witness(const FactorConfig &cfg);

/// phi_k trivial for 1 <= k < spec.m and phi_{spec.m} kills every generator.
bool kernel_member(const HmElement &phi, const KernelSpec &spec);

} // namespace skewtorus
