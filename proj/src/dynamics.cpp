#include "skewtorus/dynamics.hpp"

#include "skewtorus/combinatorics.hpp"
#include "skewtorus/errors.hpp"

#include <string>

namespace skewtorus {

void check_system(const BasicSystem &sys) {
  if (sys.m < 1)
    throw ConfigError("system dimension m must be at least 1");
}

namespace {

void check_point(const BasicSystem &sys, const TorusPoint &x) {
  check_system(sys);
  if (x.size() != static_cast<std::size_t>(sys.m))
    throw ConfigError("point has " + std::to_string(x.size()) + " coordinates, system has m = " +
                      std::to_string(sys.m));
}

} // namespace

TorusPoint step(const BasicSystem &sys, const TorusPoint &x) {
  check_point(sys, x);
  TorusPoint out = x;
  out[0] = sys.x0 + x[0];
  for (std::size_t k = 1; k < x.size(); ++k)
    out[k] = x[k - 1] + x[k];
  return out;
}

TorusPoint inverse_step(const BasicSystem &sys, const TorusPoint &x) {
  check_point(sys, x);
  TorusPoint out = x;
  out[0] = x[0] - sys.x0;
  for (std::size_t k = 1; k < x.size(); ++k)
    out[k] = x[k] - out[k - 1];
  return out;
}

TorusPoint iterate_ambient(const TorusPoint &g, const mpz_class &n) {
  std::vector<mpz_class> c(g.size());
  for (std::size_t d = 0; d < g.size(); ++d)
    c[d] = binom(n, d);
  TorusPoint out;
  out.coords.reserve(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    Angle acc;
    for (std::size_t j = 0; j <= k; ++j)
      acc += c[k - j] * g[j];
    out.coords.push_back(std::move(acc));
  }
  return out;
}

TorusPoint iterate_closed(const BasicSystem &sys, const TorusPoint &x, const mpz_class &n) {
  check_point(sys, x);
  TorusPoint g;
  g.coords.reserve(x.size() + 1);
  g.coords.push_back(sys.x0);
  g.coords.insert(g.coords.end(), x.coords.begin(), x.coords.end());
  TorusPoint full = iterate_ambient(g, n);
  return TorusPoint(std::vector<Angle>(full.coords.begin() + 1, full.coords.end()));
}

TorusPoint iterate_stepping(const BasicSystem &sys, TorusPoint x, long n) {
  check_point(sys, x);
  for (long i = 0; i < n; ++i)
    x = step(sys, x);
  for (long i = 0; i > n; --i)
    x = inverse_step(sys, x);
  return x;
}

bool CharacterIndex::is_zero() const {
  for (const auto &[_, c] : v)
    if (c != 0)
      return false;
  return true;
}

int CharacterIndex::top() const {
  int t = 0;
  for (const auto &[k, c] : v)
    if (c != 0 && k > t)
      t = k;
  return t;
}

Angle character_eval(const CharacterIndex &v, const TorusPoint &x) {
  Angle acc;
  for (const auto &[k, c] : v.v) {
    if (c == 0)
      continue;
    if (k < 1 || static_cast<std::size_t>(k) > x.size())
      throw ConfigError("character index " + std::to_string(k) + " outside 1.." +
                        std::to_string(x.size()));
    acc += c * x[static_cast<std::size_t>(k) - 1];
  }
  return acc;
}

PolyAngle orbit_polynomial(const BasicSystem &sys, const CharacterIndex &v, const TorusPoint &x) {
  check_point(sys, x);
  if (v.top() > sys.m)
    throw ConfigError("character index exceeds m = " + std::to_string(sys.m));
  // coordinate k of the n-th iterate is sum_d C(n, d) g_{k-d}, g_0 = x0
  std::vector<const Angle *> g;
  g.push_back(&sys.x0);
  for (const auto &a : x.coords)
    g.push_back(&a);
  const std::size_t top = static_cast<std::size_t>(v.top());
  std::vector<Angle> c(top + 1);
  for (const auto &[k, vk] : v.v) {
    if (vk == 0)
      continue;
    if (k < 1)
      throw ConfigError("character index " + std::to_string(k) + " outside 1..m");
    for (std::size_t d = 0; d <= static_cast<std::size_t>(k); ++d)
      c[d] += vk * *g[static_cast<std::size_t>(k) - d];
  }
  return PolyAngle(std::move(c));
}

std::vector<CharacterIndex> diagonal_representation(const BasicSystem &sys,
                                                    const CharacterIndex &v) {
  check_system(sys);
  if (v.is_zero())
    return {};
  const int top = v.top();
  for (const auto &[k, c] : v.v)
    if (c != 0 && (k != top || c != 1))
      throw UnsupportedError("diagonal representation is built for generators e_k only; "
                             "compose general characters from generators");
  if (top > sys.m)
    throw ConfigError("character index exceeds m = " + std::to_string(sys.m));
  std::vector<CharacterIndex> chain;
  for (int k = 1; k <= top; ++k)
    chain.push_back(CharacterIndex::unit(k));
  return chain;
}

bool diagonal_relation_holds(const BasicSystem &sys, const std::vector<CharacterIndex> &chain,
                             const TorusPoint &x) {
  const TorusPoint sx = step(sys, x);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const Angle prev = i == 0 ? sys.x0 : character_eval(chain[i - 1], x);
    if (!(character_eval(chain[i], sx) == prev + character_eval(chain[i], x)))
      return false;
  }
  return true;
}

Angle q_eval(const std::vector<Angle> &v, const HmElement &phi) {
  if (v.size() > static_cast<std::size_t>(phi.m()) + 1)
    throw ConfigError("q-map index has support beyond m = " + std::to_string(phi.m()));
  Angle acc;
  for (std::size_t k = 0; k < v.size(); ++k)
    acc += phi[k](v[k]);
  return acc;
}

std::vector<Angle> shift(const std::vector<Angle> &v) {
  std::vector<Angle> out(v.size());
  for (std::size_t k = 0; k + 1 < v.size(); ++k)
    out[k] = v[k + 1];
  return out;
}

bool is_minimal(const BasicSystem &sys) { return !sys.x0.is_torsion(); }

} // namespace skewtorus
