#include "skewtorus/factor_lab.hpp"

#include "skewtorus/dynamics.hpp"
#include "skewtorus/errors.hpp"
#include "skewtorus/syntax.hpp"

namespace skewtorus {

FactorConfig make_factor_config(ContextPtr ctx, const std::string &x_sym, int m) {
  auto idx = ctx->basis->index_of(x_sym);
  if (!idx)
    throw ConfigError("factor lab symbol '" + x_sym + "' is not in the basis");
  if (m < 2 || m > ctx->level)
    throw ConfigError("factor lab needs 2 <= m <= L, got m = " + std::to_string(m));
  return FactorConfig{std::move(ctx), *idx, m};
}

namespace {

void need_m2(const HmElement &phi) {
  if (phi.m() < 2)
    throw ConfigError("factor lab predicates need m >= 2");
}

bool kills_torsion(const HmElement &phi) {
  for (int k = 1; k <= phi.m(); ++k)
    if (phi[k].residue() != 0)
      return false;
  return true;
}

} // namespace

bool g1_member(const HmElement &phi, const FactorConfig &cfg) {
  need_m2(phi);
  return phi[1](2L * cfg.x()).is_zero() && kills_torsion(phi);
}

bool g_member(const HmElement &phi, const FactorConfig &cfg) {
  return g1_member(phi, cfg) && phi[2](cfg.x()).is_zero();
}

bool condition_a(const HmElement &phi, const HmElement &psi, const FactorConfig &cfg) {
  const Angle x2 = 2L * cfg.x();
  return phi[1](x2) == psi[1](x2);
}

bool condition_b(const HmElement &phi, const HmElement &psi) {
  if (phi.m() != psi.m())
    throw ConfigError("elements have different lengths");
  for (int k = 1; k <= phi.m(); ++k)
    if (phi[k].residue() != psi[k].residue())
      return false;
  return true;
}

Angle alpha(const HmElement &phi, const HmElement &psi, const FactorConfig &cfg) {
  need_m2(phi);
  if (!condition_a(phi, psi, cfg))
    throw RelationError("alpha: condition (A) fails, phi_1(x^2) != psi_1(x^2)");
  if (!condition_b(phi, psi))
    throw RelationError("alpha: condition (B) fails, the torsion residues differ");
  const Angle x = cfg.x();
  return phi[1](phi[1](x) - psi[1](x));
}

bool coset_equal(const HmElement &phi, const HmElement &psi, const FactorConfig &cfg) {
  need_m2(phi);
  if (!condition_a(phi, psi, cfg) || !condition_b(phi, psi))
    return false;
  const Angle x = cfg.x();
  return phi[2](x) == psi[2](x) + alpha(phi, psi, cfg);
}

bool qef_coset_constant(const std::vector<Angle> &v, const FactorConfig &cfg) {
  const mpz_class &L = cfg.ctx->modulus;
  for (std::size_t k = 1; k < v.size(); ++k) {
    const Angle &a = v[k];
    if (k >= 3) {
      if (!a.is_torsion())
        return false;
      continue;
    }
    for (const auto &[i, c] : a.coeffs()) {
      if (i != cfg.x_index)
        return false;
      // c * x_sym = (c * L!) x
      mpq_class j = c * L;
      if (j.get_den() != 1 || !mpz_even_p(j.get_num_mpz_t()))
        return false;
    }
  }
  return true;
}

HmElement witness_element(const FactorConfig &cfg, const Angle &value_at_x) {
  const auto &ctx = cfg.ctx;
  std::vector<TruncEndo> comps;
  comps.push_back(TruncEndo::power(1, ctx));
  for (int k = 1; k <= cfg.m; ++k) {
    if (k != 2) {
      comps.push_back(TruncEndo::power(0, ctx));
      continue;
    }
    std::vector<Angle> images(ctx->basis->size(), Angle(ctx->basis, 0, {}));
    images[cfg.x_index] = value_at_x;
    comps.emplace_back(ctx, mpz_class(0), std::move(images));
  }
  return HmElement::validate(std::move(comps), ctx, cfg.m);
}

std::pair<HmElement, WitnessReport> nonseparation_witness(const FactorConfig &cfg) {
  const auto &ctx = cfg.ctx;
  const auto &basis = ctx->basis;
  const mpz_class &L = ctx->modulus;
  WitnessReport rep;

  HmElement star_el = HmElement::identity(cfg.m, ctx);
  try {
    star_el = witness_element(cfg, Angle(mpq_class(1, 2)));
    rep.valid = true;
  } catch (const MembershipError &) {
    rep.valid = false;
  }
  const HmElement id = HmElement::identity(cfg.m, ctx);
  rep.cosets_distinct = !coset_equal(id, star_el, cfg);

  const long lim = L.get_si();
  auto check = [&](std::size_t k, const Angle &entry) {
    std::vector<Angle> v(static_cast<std::size_t>(cfg.m) + 1);
    v[k] = entry;
    ++rep.enumerated;
    if (!qef_coset_constant(v, cfg))
      return;
    ++rep.coset_constant;
    if (q_eval(v, star_el) == q_eval(v, id)) {
      ++rep.agreeing;
    } else if (rep.disagreements.size() < 8) {
      rep.disagreements.push_back("v_" + std::to_string(k) + " = " + format_angle(entry));
    }
  };
  for (std::size_t k = 0; k <= static_cast<std::size_t>(cfg.m); ++k) {
    for (long c = 1; c < lim; ++c)
      check(k, Angle(mpq_class(c, lim)));
    for (std::size_t i = 0; i < basis->size(); ++i)
      for (long c = -lim; c <= lim; ++c)
        if (c != 0)
          check(k, Angle::term(basis, i, mpq_class(c, lim)));
  }

  std::vector<Angle> control(static_cast<std::size_t>(cfg.m) + 1);
  control[2] = cfg.x();
  rep.control_not_constant = !qef_coset_constant(control, cfg);
  rep.control_separates = !(q_eval(control, star_el) == q_eval(control, id));
  rep.zero_witness_is_identity = coset_equal(id, witness_element(cfg, Angle()), cfg);

  rep.pass = rep.valid && rep.cosets_distinct && rep.coset_constant > 0 &&
             rep.agreeing == rep.coset_constant && rep.control_not_constant &&
             rep.control_separates && rep.zero_witness_is_identity;
  return {star_el, rep};
}

bool kernel_member(const HmElement &phi, const KernelSpec &spec) {
  if (spec.m < 1 || spec.m > phi.m())
    throw ConfigError("kernel spec m = " + std::to_string(spec.m) + " outside [1, " +
                      std::to_string(phi.m()) + "]");
  for (int k = 1; k < spec.m; ++k)
    if (!phi[k].is_zero())
      return false;
  for (const auto &g : spec.gamma)
    if (!phi[spec.m](g).is_zero())
      return false;
  return true;
}

} // namespace skewtorus
