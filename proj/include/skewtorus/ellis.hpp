#pragma once

#include "skewtorus/endo.hpp"

#include <optional>
#include <vector>

namespace skewtorus {

/// Element (phi_0, ..., phi_m) of the truncated group H_m. Instances are
/// either validated on construction or produced by the group operations,
/// which preserve (H.0) and the torsion congruences.
class HmElement {
public:
  /// Checks (H.0) and, for 1 <= k <= m,
  ///   k! * r_k == sum_j s(k, j) * r_1^j   (mod L!)
  /// where r_k is the residue of phi_k. Throws MembershipError naming the
  /// first failing index, ConfigError on shape or context problems.
  static HmElement validate(std::vector<TruncEndo> comps, const ContextPtr &ctx, int m);

  /// n~ : phi_k = C(n, k)^x
  static HmElement tilde(const mpz_class &n, int m, const ContextPtr &ctx);
  static HmElement tilde(long n, int m, const ContextPtr &ctx) { return tilde(mpz_class(n), m, ctx); }
  static HmElement identity(int m, const ContextPtr &ctx) { return tilde(0L, m, ctx); }

  const ContextPtr &context() const noexcept { return ctx_; }
  int m() const noexcept { return static_cast<int>(comps_.size()) - 1; }
  const std::vector<TruncEndo> &comps() const noexcept { return comps_; }
  const TruncEndo &operator[](std::size_t k) const { return comps_.at(k); }

  friend bool operator==(const HmElement &a, const HmElement &b);

private:
  struct Passkey {};
  HmElement(Passkey, ContextPtr ctx, std::vector<TruncEndo> comps)
      : ctx_(std::move(ctx)), comps_(std::move(comps)) {}

  friend HmElement star(const HmElement &, const HmElement &);
  friend HmElement inverse(const HmElement &);
  friend HmElement project(const HmElement &, int);
  friend HmElement predicted_commutator(const HmElement &, const HmElement &, int);

  ContextPtr ctx_;
  std::vector<TruncEndo> comps_;
};

/// (phi * psi)_k = sum_j phi_{k-j} o psi_j
HmElement star(const HmElement &phi, const HmElement &psi);

/// Back-substitution: xi_k = -(sum_{j<k} phi_{k-j} o xi_j).
HmElement inverse(const HmElement &phi);

/// phi^-1 * psi^-1 * phi * psi
HmElement commutator(const HmElement &phi, const HmElement &psi);

/// Closed form of the commutator when phi_j is trivial for 1 <= j <= k:
/// coordinates 1..k+1 vanish and coordinate k+2 is
///   -(psi_1 o phi_{k+1}) + (phi_{k+1} o psi_1).
/// Only coordinates up to min(m, k+2) are determined, so the result lives in
/// H_{min(m, k+2)}. Throws std::domain_error if the precondition fails.
HmElement predicted_commutator(const HmElement &phi, const HmElement &psi, int k);

/// Truncation to the first j+1 coordinates (1 <= j <= m).
HmElement project(const HmElement &phi, int j);

/// Number of leading coordinates (after phi_0) equal to 0^x; m for the
/// identity, 0 when phi_1 is nontrivial.
int central_level(const HmElement &phi);

/// n if phi == n~, read from the coefficient of the first basis symbol in
/// phi_1(b_1/L!). Throws ConfigError when the basis is empty.
std::optional<mpz_class> iterate_index(const HmElement &phi);

/// a(x)_k = sum_j phi_{k-j}(x_j) on points indexed 0..m.
TorusPoint act(const HmElement &phi, const TorusPoint &x);

/// Pair (phi, y) in H_{m-1} x T with the twisted law
///   (phi, x) * (psi, y) = (phi * psi, x + y + sum_{k=1}^{m-1} (phi_{m-k} o psi_k)(x0)).
struct AstElement {
  HmElement phi;
  Angle y;

  friend bool operator==(const AstElement &, const AstElement &) = default;
};

AstElement ast(const AstElement &a, const AstElement &b, const Angle &x0);

} // namespace skewtorus
