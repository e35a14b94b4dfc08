#include "skewtorus/ellis.hpp"

#include "skewtorus/combinatorics.hpp"
#include "skewtorus/errors.hpp"

#include <stdexcept>
#include <string>

namespace skewtorus {

namespace {

void require_same(const HmElement &a, const HmElement &b) {
  if (!same_context(a.context(), b.context()))
    throw ConfigError("elements live in different truncation contexts");
  if (a.m() != b.m())
    throw ConfigError("elements have different lengths (m = " + std::to_string(a.m()) +
                      " and " + std::to_string(b.m()) + ")");
}

} // namespace

HmElement HmElement::validate(std::vector<TruncEndo> comps, const ContextPtr &ctx, int m) {
  if (m < 1 || m > ctx->level)
    throw ConfigError("m = " + std::to_string(m) + " must lie in [1, " +
                      std::to_string(ctx->level) + "]");
  if (comps.size() != static_cast<std::size_t>(m) + 1)
    throw ConfigError("expected " + std::to_string(m + 1) + " components, got " +
                      std::to_string(comps.size()));
  for (const auto &c : comps)
    if (!same_context(c.context(), ctx))
      throw ConfigError("component from a different truncation context");
  if (!(comps[0] == TruncEndo::power(1, ctx)))
    throw MembershipError("(H.0) fails: phi_0 is not the identity", 0);

  const mpz_class &L = ctx->modulus;
  const mpz_class &r1 = comps[1].residue();
  for (int k = 1; k <= m; ++k) {
    mpz_class rhs = 0;
    mpz_class pw = 1;
    for (int j = 1; j <= k; ++j) {
      pw *= r1;
      rhs += stirling1(static_cast<unsigned>(k), static_cast<unsigned>(j)) * pw;
    }
    mpz_class lhs = factorial(static_cast<unsigned long>(k)) * comps[k].residue();
    mpz_class diff = lhs - rhs;
    if (!mpz_divisible_p(diff.get_mpz_t(), L.get_mpz_t()))
      throw MembershipError("torsion congruence fails at k = " + std::to_string(k) + ": " +
                                std::to_string(k) + "! * " + comps[k].residue().get_str() +
                                " is not " + std::to_string(k) + "! * C(" + r1.get_str() + ", " +
                                std::to_string(k) + ") mod " + L.get_str(),
                            k);
  }
  return HmElement(Passkey{}, ctx, std::move(comps));
}

HmElement HmElement::tilde(const mpz_class &n, int m, const ContextPtr &ctx) {
  if (m < 1 || m > ctx->level)
    throw ConfigError("m = " + std::to_string(m) + " must lie in [1, " +
                      std::to_string(ctx->level) + "]");
  std::vector<TruncEndo> comps;
  comps.reserve(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k)
    comps.push_back(TruncEndo::power(binom(n, static_cast<unsigned long>(k)), ctx));
  return HmElement(Passkey{}, ctx, std::move(comps));
}

bool operator==(const HmElement &a, const HmElement &b) {
  require_same(a, b);
  return a.comps_ == b.comps_;
}

HmElement star(const HmElement &phi, const HmElement &psi) {
  require_same(phi, psi);
  const int m = phi.m();
  std::vector<TruncEndo> comps;
  comps.reserve(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) {
    TruncEndo acc = compose(phi[k], psi[0]);
    for (int j = 1; j <= k; ++j)
      acc = acc + compose(phi[k - j], psi[j]);
    comps.push_back(std::move(acc));
  }
  return HmElement(HmElement::Passkey{}, phi.context(), std::move(comps));
}

HmElement inverse(const HmElement &phi) {
  const int m = phi.m();
  std::vector<TruncEndo> xi;
  xi.reserve(static_cast<std::size_t>(m) + 1);
  xi.push_back(TruncEndo::power(1, phi.context()));
  for (int k = 1; k <= m; ++k) {
    TruncEndo acc = compose(phi[k], xi[0]);
    for (int j = 1; j < k; ++j)
      acc = acc + compose(phi[k - j], xi[j]);
    xi.push_back(-acc);
  }
  return HmElement(HmElement::Passkey{}, phi.context(), std::move(xi));
}

HmElement commutator(const HmElement &phi, const HmElement &psi) {
  return star(star(inverse(phi), inverse(psi)), star(phi, psi));
}

HmElement predicted_commutator(const HmElement &phi, const HmElement &psi, int k) {
  require_same(phi, psi);
  const int m = phi.m();
  if (k < 0)
    throw std::domain_error("predicted_commutator: k must be nonnegative");
  for (int j = 1; j <= std::min(k, m); ++j)
    if (!phi[j].is_zero())
      throw std::domain_error("predicted_commutator: phi_" + std::to_string(j) +
                              " is not trivial (k = " + std::to_string(k) + ")");
  const int top = std::min(m, k + 2);
  const auto &ctx = phi.context();
  std::vector<TruncEndo> comps;
  comps.push_back(TruncEndo::power(1, ctx));
  for (int j = 1; j <= top; ++j)
    comps.push_back(TruncEndo::power(0, ctx));
  if (k + 2 <= m)
    comps[static_cast<std::size_t>(k) + 2] =
        compose(phi[k + 1], psi[1]) - compose(psi[1], phi[k + 1]);
  return HmElement(HmElement::Passkey{}, ctx, std::move(comps));
}

HmElement project(const HmElement &phi, int j) {
  if (j < 1 || j > phi.m())
    throw ConfigError("projection index " + std::to_string(j) + " outside [1, " +
                      std::to_string(phi.m()) + "]");
  std::vector<TruncEndo> comps(phi.comps().begin(), phi.comps().begin() + j + 1);
  return HmElement(HmElement::Passkey{}, phi.context(), std::move(comps));
}

int central_level(const HmElement &phi) {
  int c = 0;
  while (c < phi.m() && phi[static_cast<std::size_t>(c) + 1].is_zero())
    ++c;
  return c;
}

std::optional<mpz_class> iterate_index(const HmElement &phi) {
  const auto &ctx = phi.context();
  if (ctx->basis->empty())
    throw ConfigError("iterate detection needs at least one basis symbol");
  mpq_class c = phi[1].image(0).coeff(0) * ctx->modulus;
  if (c.get_den() != 1)
    return std::nullopt;
  mpz_class n = c.get_num();
  if (phi == HmElement::tilde(n, phi.m(), ctx))
    return n;
  return std::nullopt;
}

TorusPoint act(const HmElement &phi, const TorusPoint &x) {
  const std::size_t m = static_cast<std::size_t>(phi.m());
  if (x.size() != m + 1)
    throw ConfigError("action needs a point with " + std::to_string(m + 1) +
                      " coordinates (indexed 0..m), got " + std::to_string(x.size()));
  TorusPoint out;
  out.coords.reserve(m + 1);
  for (std::size_t k = 0; k <= m; ++k) {
    Angle acc;
    for (std::size_t j = 0; j <= k; ++j)
      acc += phi[k - j](x[j]);
    out.coords.push_back(std::move(acc));
  }
  return out;
}

AstElement ast(const AstElement &a, const AstElement &b, const Angle &x0) {
  const int mm1 = a.phi.m();
  Angle y = a.y + b.y;
  for (int k = 1; k <= mm1; ++k)
    y += compose(a.phi[mm1 + 1 - k], b.phi[k])(x0);
  return {star(a.phi, b.phi), std::move(y)};
}

} // namespace skewtorus
