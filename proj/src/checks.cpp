#include "skewtorus/checks.hpp"

#include "skewtorus/combinatorics.hpp"
#include "skewtorus/dynamics.hpp"
#include "skewtorus/errors.hpp"
#include "skewtorus/json_io.hpp"
#include "skewtorus/sampling.hpp"
#include "skewtorus/syntax.hpp"
#include "skewtorus/weyl.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <thread>

namespace skewtorus {

CheckEnv make_check_env(const Config &cfg) {
  auto ctx = cfg.context();
  const int m = std::min(3, ctx->level);
  return CheckEnv{ctx, make_factor_config(ctx, cfg.factor_symbol, m), cfg.shifts, cfg.tolerance,
                  cfg.threads};
}

namespace {

constexpr std::size_t kMaxNotes = 5;

struct Tally {
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> notes;
  nlohmann::json detail;

  template <class F> void expect(bool ok, F &&describe) {
    ++cases;
    if (ok)
      return;
    ++failures;
    if (notes.size() < kMaxNotes)
      notes.push_back(describe());
  }
};

using CheckFn = std::function<void(Sampler &, const CheckEnv &, Tally &)>;

std::string str(const Angle &a) { return format_angle(a); }
std::string str(const mpz_class &z) { return z.get_str(); }
std::string str(long n) { return std::to_string(n); }

int ellis_m(const CheckEnv &env) { return std::min(4, env.ctx->level); }

// ---------------------------------------------------------------- combinatorics

void comb_pascal(Sampler &, const CheckEnv &, Tally &t) {
  for (long n = -100; n <= 100; ++n)
    for (unsigned long k = 0; k <= 20; ++k)
      t.expect(binom(n, k) + binom(n, k + 1) == binom(n + 1, k + 1),
               [&] { return "n=" + str(n) + " k=" + str(long(k)); });
}

void comb_vandermonde(Sampler &s, const CheckEnv &, Tally &t) {
  for (int trial = 0; trial < 1000; ++trial) {
    const long a = s.uniform(-50, 50), b = s.uniform(-50, 50);
    for (unsigned long k = 0; k <= 12; ++k) {
      mpz_class sum = 0;
      for (unsigned long j = 0; j <= k; ++j)
        sum += binom(a, j) * binom(b, k - j);
      t.expect(sum == binom(a + b, k),
               [&] { return "m=" + str(a) + " n=" + str(b) + " k=" + str(long(k)); });
    }
  }
}

void comb_negation(Sampler &, const CheckEnv &, Tally &t) {
  for (long n = -50; n <= 0; ++n)
    for (unsigned long k = 0; k <= 12; ++k) {
      mpz_class rhs = binom(static_cast<long>(k) - n - 1, k);
      if (k % 2)
        rhs = -rhs;
      t.expect(binom(n, k) == rhs, [&] { return "n=" + str(n) + " k=" + str(long(k)); });
    }
}

void comb_stirling(Sampler &, const CheckEnv &, Tally &t) {
  for (long n = -30; n <= 30; ++n)
    for (unsigned k = 0; k <= 12; ++k) {
      mpz_class sum = 0, pw = 1;
      for (unsigned j = 0; j <= k; ++j) {
        sum += stirling1(k, j) * pw;
        pw *= n;
      }
      t.expect(factorial(k) * binom(n, k) == sum,
               [&] { return "n=" + str(n) + " k=" + str(long(k)); });
    }
}

// ---------------------------------------------------------------- circle

void circle_group(Sampler &s, const CheckEnv &, Tally &t) {
  const Angle zero;
  for (int i = 0; i < 10000; ++i) {
    const Angle a = s.angle(), b = s.angle(), c = s.angle();
    t.expect((a + b) + c == a + (b + c) && a + b == b + a && a + zero == a &&
                 (a + (-a)).is_zero(),
             [&] { return "a=" + str(a) + " b=" + str(b) + " c=" + str(c); });
  }
}

void circle_int_mul(Sampler &s, const CheckEnv &, Tally &t) {
  for (int i = 0; i < 1000; ++i) {
    const Angle a = s.angle();
    const long m = s.uniform(-1000, 1000), n = s.uniform(-1000, 1000);
    t.expect((m + n) * a == m * a + n * a && (m * n) * a == m * (n * a) && (0L * a).is_zero(),
             [&] { return "a=" + str(a) + " m=" + str(m) + " n=" + str(n); });
  }
}

void circle_torsion(Sampler &s, const CheckEnv &env, Tally &t) {
  for (int i = 0; i < 1000; ++i) {
    const long q = s.uniform(1, 200);
    const Angle a(mpq_class(s.uniform(0, q - 1), q));
    const auto ord = torsion_order(a);
    bool ok = ord.has_value() && (mpz_class(*ord) * a).is_zero();
    if (ok)
      for (long j = 1; j < ord->get_si(); ++j)
        if ((j * a).is_zero()) {
          ok = false;
          break;
        }
    t.expect(ok, [&] { return "a=" + str(a); });
  }
  if (!env.ctx->basis->empty())
    t.expect(!torsion_order(Angle::term(env.ctx->basis, 0, mpq_class(1, 2))).has_value(),
             [] { return std::string("irrational angle reported torsion"); });
}

void circle_unit(Sampler &s, const CheckEnv &, Tally &t) {
  for (int i = 0; i < 1000; ++i) {
    const Angle a = s.angle(), b = s.angle();
    const double err = std::abs(to_unit(a + b) - to_unit(a) * to_unit(b));
    t.expect(err < 1e-12, [&] { return "a=" + str(a) + " b=" + str(b) + " err=" + std::to_string(err); });
  }
}

// ---------------------------------------------------------------- endo

bool denominators_ok(const TruncEndo &e) {
  const auto &L = e.context()->modulus;
  if (e.residue() < 0 || e.residue() >= L)
    return false;
  for (const auto &a : e.images())
    if (!mpz_divisible_p(L.get_mpz_t(), a.denominator_lcm().get_mpz_t()))
      return false;
  return true;
}

void endo_homomorphism(Sampler &s, const CheckEnv &, Tally &t) {
  for (int i = 0; i < 500; ++i) {
    const TruncEndo phi = s.endo();
    const Angle a = s.angle(), b = s.angle();
    const long n = s.uniform(-50, 50);
    t.expect(phi(a + b) == phi(a) + phi(b) && phi(n * a) == n * phi(a) &&
                 TruncEndo::power(n, s.context())(a) == n * a,
             [&] { return "a=" + str(a) + " b=" + str(b); });
  }
}

void endo_composition(Sampler &s, const CheckEnv &, Tally &t) {
  const auto &ctx = s.context();
  const TruncEndo one = TruncEndo::power(1, ctx), zero = TruncEndo::power(0, ctx);
  for (int i = 0; i < 500; ++i) {
    const TruncEndo a = s.endo(), b = s.endo(), c = s.endo();
    const long n = s.uniform(-5, 5);
    TruncEndo nfold = zero;
    for (long j = 0; j < std::labs(n); ++j)
      nfold = nfold + a;
    if (n < 0)
      nfold = -nfold;
    const TruncEndo ab = compose(a, b), sum = a + b;
    t.expect(compose(compose(a, b), c) == compose(a, compose(b, c)) && compose(a, one) == a &&
                 compose(one, a) == a && compose(TruncEndo::power(n, ctx), a) == nfold &&
                 compose(a, TruncEndo::power(n, ctx)) == nfold && a + zero == a &&
                 (a - a) == zero && denominators_ok(ab) && denominators_ok(sum) &&
                 denominators_ok(-a),
             [&] { return "trial " + str(long(i)) + " n=" + str(n); });
  }
}

void endo_commutativity(Sampler &s, const CheckEnv &, Tally &t) {
  const auto &ctx = s.context();
  for (int i = 0; i < 500; ++i) {
    const TruncEndo a = s.endo(), b = s.endo();
    t.expect(compose(a, b).residue() == compose(b, a).residue(),
             [&] { return "residues " + str(a.residue()) + ", " + str(b.residue()); });
  }
  if (ctx->basis->empty())
    return;
  // alpha kills torsion and fixes b1/L!, beta sends b1/L! to 1/2.
  std::vector<Angle> ia(ctx->basis->size(), Angle(ctx->basis, 0, {}));
  std::vector<Angle> ib = ia;
  ia[0] = ctx->generator(0);
  ib[0] = Angle(ctx->basis, mpq_class(1, 2), {});
  const TruncEndo alpha(ctx, 0, ia), beta(ctx, 1, ib);
  t.expect(!(compose(alpha, beta) == compose(beta, alpha)),
           [] { return std::string("witness pair commutes"); });
}

// ---------------------------------------------------------------- ellis

void ellis_group_axioms(Sampler &s, const CheckEnv &env, Tally &t) {
  const int m = ellis_m(env);
  const HmElement id = HmElement::identity(m, s.context());
  for (int i = 0; i < 1000; ++i) {
    const HmElement a = s.element(m), b = s.element(m), c = s.element(m);
    const HmElement ai = inverse(a);
    t.expect(star(star(a, b), c) == star(a, star(b, c)) && star(a, id) == a && star(id, a) == a &&
                 star(a, ai) == id && star(ai, a) == id,
             [&] { return "triple " + str(long(i)); });
  }
}

void ellis_closure(Sampler &s, const CheckEnv &env, Tally &t) {
  const int m = ellis_m(env);
  for (int i = 0; i < 1000; ++i) {
    const HmElement a = s.element(m), b = s.element(m);
    const HmElement p = star(a, b), q = inverse(a);
    bool ok = true;
    std::string why;
    for (const HmElement *e : {&p, &q}) {
      try {
        (void)HmElement::validate(e->comps(), s.context(), m);
        for (const auto &c : e->comps())
          ok = ok && denominators_ok(c);
      } catch (const MembershipError &err) {
        ok = false;
        why = err.what();
      }
    }
    t.expect(ok, [&] { return "pair " + str(long(i)) + ": " + why; });
  }
}

void ellis_inverse_formula(Sampler &s, const CheckEnv &, Tally &t) {
  for (int i = 0; i < 200; ++i) {
    const HmElement psi = s.element(2);
    const HmElement xi = inverse(psi);
    t.expect(xi[1] == -psi[1] && xi[2] == -psi[2] + compose(psi[1], psi[1]),
             [&] { return "element " + str(long(i)); });
  }
}

void ellis_tilde(Sampler &s, const CheckEnv &env, Tally &t) {
  const int m = ellis_m(env);
  const auto &ctx = s.context();
  for (long a = -20; a <= 20; ++a) {
    const HmElement ta = HmElement::tilde(a, m, ctx);
    t.expect(inverse(ta) == HmElement::tilde(-a, m, ctx), [&] { return "inverse of " + str(a); });
    for (long b = -20; b <= 20; ++b)
      t.expect(star(ta, HmElement::tilde(b, m, ctx)) == HmElement::tilde(a + b, m, ctx),
               [&] { return "a=" + str(a) + " b=" + str(b); });
  }
}

void ellis_commutator(Sampler &s, const CheckEnv &env, Tally &t) {
  const int m = ellis_m(env);
  for (int k = 0; k <= 2; ++k)
    for (int i = 0; i < 200; ++i) {
      const HmElement phi = s.element_trivial_prefix(m, k), psi = s.element(m);
      const HmElement c = commutator(phi, psi);
      const HmElement pred = predicted_commutator(phi, psi, k);
      t.expect(project(c, pred.m()) == pred,
               [&] { return "k=" + str(long(k)) + " pair " + str(long(i)); });
    }
  for (int i = 0; i < 50; ++i) {
    const HmElement a = s.element(m);
    t.expect(commutator(a, a) == HmElement::identity(m, s.context()),
             [&] { return "self-commutator " + str(long(i)); });
  }
}

void ellis_central_series(Sampler &s, const CheckEnv &env, Tally &t) {
  const int m = ellis_m(env);
  for (int n = 1; n <= m; ++n)
    for (int i = 0; i < 200; ++i) {
      const HmElement phi = s.element_trivial_prefix(m, n), psi = s.element(m);
      const int lvl = central_level(commutator(phi, psi));
      t.expect(central_level(phi) >= n && lvl >= std::min(m, n + 1),
               [&] { return "n=" + str(long(n)) + " got " + str(long(lvl)); });
    }
}

void ellis_iterate(Sampler &s, const CheckEnv &env, Tally &t) {
  const int m = ellis_m(env);
  const auto &ctx = s.context();
  for (long a = -20; a <= 20; ++a)
    for (long b = -20; b <= 20; ++b) {
      const auto idx = iterate_index(star(HmElement::tilde(a, m, ctx), HmElement::tilde(b, m, ctx)));
      t.expect(idx && *idx == a + b, [&] { return "a=" + str(a) + " b=" + str(b); });
    }
  for (int i = 0; i < 200; ++i) {
    const HmElement e = s.element(m);
    const auto idx = iterate_index(e);
    t.expect(!idx || e == HmElement::tilde(*idx, m, ctx), [&] { return "sample " + str(long(i)); });
  }
}

void ellis_action(Sampler &s, const CheckEnv &env, Tally &t) {
  const int m = ellis_m(env);
  const auto &ctx = s.context();
  const HmElement id = HmElement::identity(m, ctx);
  for (int i = 0; i < 500; ++i) {
    const HmElement a = s.element(m), b = s.element(m);
    const TorusPoint x = s.point(static_cast<std::size_t>(m) + 1);
    const long n = s.uniform(-30, 30);
    t.expect(act(star(a, b), x) == act(a, act(b, x)) && act(id, x) == x &&
                 act(HmElement::tilde(n, m, ctx), x) == iterate_ambient(x, n),
             [&] { return "case " + str(long(i)) + " n=" + str(n); });
  }
}

void ellis_ast(Sampler &s, const CheckEnv &env, Tally &t) {
  const int m = ellis_m(env);
  const auto &ctx = s.context();
  const AstElement e{HmElement::identity(m - 1, ctx), Angle()};
  for (int i = 0; i < 500; ++i) {
    const Angle x0 = s.angle();
    const AstElement a{s.element(m - 1), s.angle()}, b{s.element(m - 1), s.angle()},
        c{s.element(m - 1), s.angle()};
    t.expect(ast(ast(a, b, x0), c, x0) == ast(a, ast(b, c, x0), x0) && ast(a, e, x0) == a &&
                 ast(e, a, x0) == a,
             [&] { return "triple " + str(long(i)); });
  }
  const Angle x = s.angle(), y = s.angle();
  const AstElement r = ast({e.phi, x}, {e.phi, y}, s.angle());
  t.expect(r.phi == e.phi && r.y == x + y, [] { return std::string("(0~, x) * (0~, y)"); });
}

// ---------------------------------------------------------------- dynamics

BasicSystem random_system(Sampler &s, int m) { return BasicSystem{m, s.angle()}; }

void dyn_oracle(Sampler &s, const CheckEnv &, Tally &t) {
  for (int i = 0; i < 100; ++i) {
    const int m = static_cast<int>(s.uniform(1, 5));
    const BasicSystem sys = random_system(s, m);
    const TorusPoint x = s.point(static_cast<std::size_t>(m));
    std::vector<TorusPoint> fwd{x}, back{x};
    for (int n = 1; n <= 50; ++n) {
      fwd.push_back(step(sys, fwd.back()));
      back.push_back(inverse_step(sys, back.back()));
    }
    for (long n = -50; n <= 50; ++n) {
      const TorusPoint &oracle = n >= 0 ? fwd[static_cast<std::size_t>(n)]
                                        : back[static_cast<std::size_t>(-n)];
      t.expect(iterate_closed(sys, x, n) == oracle,
               [&] { return "system " + str(long(i)) + " n=" + str(n); });
    }
  }
}

void dyn_cocycle(Sampler &s, const CheckEnv &, Tally &t) {
  for (int i = 0; i < 200; ++i) {
    const int m = static_cast<int>(s.uniform(1, 5));
    const BasicSystem sys = random_system(s, m);
    const TorusPoint x = s.point(static_cast<std::size_t>(m));
    const long a = s.uniform(-30, 30), b = s.uniform(-30, 30);
    t.expect(iterate_closed(sys, x, a + b) == iterate_closed(sys, iterate_closed(sys, x, b), a) &&
                 iterate_closed(sys, x, 0) == x,
             [&] { return "a=" + str(a) + " b=" + str(b); });
  }
}

void dyn_distality(Sampler &s, const CheckEnv &, Tally &t) {
  for (int i = 0; i < 200; ++i) {
    const int m = static_cast<int>(s.uniform(1, 5));
    const BasicSystem sys = random_system(s, m);
    const TorusPoint x = s.point(static_cast<std::size_t>(m));
    TorusPoint y = x;
    const std::size_t k = static_cast<std::size_t>(s.uniform(0, m - 1));
    for (std::size_t j = k; j < y.size(); ++j)
      y[j] = s.angle();
    if (y[k] == x[k])
      y[k] += Angle(mpq_class(1, 2));
    for (long n = -20; n <= 20; ++n)
      t.expect(iterate_closed(sys, x, n)[k] - iterate_closed(sys, y, n)[k] == x[k] - y[k],
               [&] { return "case " + str(long(i)) + " n=" + str(n); });
  }
}

CharacterIndex random_character(Sampler &s, int m) {
  CharacterIndex v;
  for (int k = 1; k <= m; ++k) {
    const long c = s.uniform(-3, 3);
    if (c)
      v.v[k] = c;
  }
  return v;
}

void dyn_orbit_polynomial(Sampler &s, const CheckEnv &, Tally &t) {
  for (int i = 0; i < 100; ++i) {
    const int m = static_cast<int>(s.uniform(1, 5));
    const BasicSystem sys = random_system(s, m);
    const TorusPoint x = s.point(static_cast<std::size_t>(m));
    const CharacterIndex v = random_character(s, m);
    const PolyAngle p = orbit_polynomial(sys, v, x);
    t.expect(p.degree() <= static_cast<std::size_t>(v.top()), [&] { return "degree bound"; });
    for (long n = -20; n <= 20; ++n)
      t.expect(p(n) == character_eval(v, iterate_closed(sys, x, n)),
               [&] { return "case " + str(long(i)) + " n=" + str(n); });
  }
}

void dyn_degree_law(Sampler &s, const CheckEnv &, Tally &t) {
  for (int i = 0; i < 200; ++i) {
    const int m = static_cast<int>(s.uniform(1, 5));
    const BasicSystem sys = random_system(s, m);
    const TorusPoint x = s.point(static_cast<std::size_t>(m));
    const PolyAngle p = orbit_polynomial(sys, random_character(s, m), x);
    const PolyAngle q = p.difference();
    bool ok = p.degree() == 0 ? q.is_zero() : q.degree() == p.degree() - 1;
    for (long n = -10; n <= 10 && ok; ++n)
      ok = q(n) == p(n + 1) - p(n);
    t.expect(ok, [&] { return "poly " + format_poly(p); });
  }
}

void dyn_diagonal(Sampler &s, const CheckEnv &, Tally &t) {
  for (int m = 1; m <= 5; ++m)
    for (int top = 0; top <= m; ++top)
      for (int i = 0; i < 10; ++i) {
        const BasicSystem sys = random_system(s, m);
        const CharacterIndex v = top ? CharacterIndex::unit(top) : CharacterIndex{};
        const auto chain = diagonal_representation(sys, v);
        t.expect(chain.size() == static_cast<std::size_t>(top) &&
                     diagonal_relation_holds(sys, chain, s.point(static_cast<std::size_t>(m))),
                 [&] { return "m=" + str(long(m)) + " top=" + str(long(top)); });
      }
  bool threw = false;
  try {
    CharacterIndex v;
    v.v[1] = 2;
    (void)diagonal_representation(BasicSystem{2, Angle()}, v);
  } catch (const UnsupportedError &) {
    threw = true;
  }
  t.expect(threw, [] { return std::string("2 e_1 accepted as a generator"); });
}

std::vector<Angle> random_v(Sampler &s, int m) {
  std::vector<Angle> v;
  for (int k = 0; k <= m; ++k)
    v.push_back(s.angle());
  return v;
}

void dyn_q_shift(Sampler &s, const CheckEnv &env, Tally &t) {
  const int m = ellis_m(env);
  const auto &ctx = s.context();
  const HmElement one = HmElement::tilde(1L, m, ctx);
  for (int i = 0; i < 100; ++i) {
    const std::vector<Angle> v = random_v(s, m), w = random_v(s, m);
    const HmElement phi = s.element(m);
    std::vector<Angle> vs = shift(v), vw(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
      vs[k] += v[k];
      vw[k] = v[k] + w[k];
    }
    const long n = s.uniform(-20, 20);
    Angle expect_n;
    for (std::size_t k = 0; k < v.size(); ++k)
      expect_n += binom(n, k) * v[k];
    t.expect(q_eval(v, star(one, phi)) == q_eval(vs, phi) &&
                 q_eval(vw, phi) == q_eval(v, phi) + q_eval(w, phi) &&
                 q_eval(v, HmElement::tilde(n, m, ctx)) == expect_n &&
                 q_eval({v[0]}, phi) == v[0],
             [&] { return "case " + str(long(i)); });
  }
}

void dyn_q_injective(Sampler &s, const CheckEnv &env, Tally &t) {
  const int m = ellis_m(env);
  const auto &ctx = s.context();
  for (int i = 0; i < 100; ++i) {
    std::vector<Angle> v(static_cast<std::size_t>(m) + 1);
    // sparse nonzero v so that low-order cancellations get exercised
    const std::size_t k = static_cast<std::size_t>(s.uniform(0, m));
    v[k] = s.coin() ? s.torsion_angle() : s.angle();
    if (v[k].is_zero())
      v[k] = Angle(mpq_class(1, 2));
    if (s.coin())
      v[static_cast<std::size_t>(s.uniform(0, m))] += s.angle();
    bool all_zero = true;
    for (const auto &a : v)
      all_zero = all_zero && a.is_zero();
    if (all_zero)
      continue;
    bool separated = false;
    for (long n = 0; n <= m && !separated; ++n)
      separated = !q_eval(v, HmElement::tilde(n, m, ctx)).is_zero();
    t.expect(separated, [&] { return "v_" + str(long(k)) + " = " + str(v[k]); });
  }
}

// ---------------------------------------------------------------- weyl

PolyAngle quadratic_b1(const CheckEnv &env) {
  const auto &b = env.ctx->basis;
  return PolyAngle({Angle(), Angle(), Angle::term(b, 0, 1)});
}

void weyl_quadratic(Sampler &, const CheckEnv &env, Tally &t) {
  if (env.ctx->basis->empty())
    throw ConfigError("weyl checks need a basis symbol");
  const auto rep = equidistribution_report(quadratic_b1(env), 200000, env.shifts, env.tol, env.threads);
  const auto lin = equidistribution_report(PolyAngle({Angle(), Angle::term(env.ctx->basis, 0, 1)}),
                                           200000, env.shifts, env.tol, env.threads);
  t.detail = {{"quadratic", report_to_json(rep)}, {"linear", report_to_json(lin)}};
  t.expect(rep.pass, [&] { return "quadratic max_abs " + std::to_string(rep.max_abs); });
  t.expect(lin.pass, [&] { return "linear max_abs " + std::to_string(lin.max_abs); });
}

void weyl_monotone(Sampler &, const CheckEnv &env, Tally &t) {
  const PolyAngle p = quadratic_b1(env);
  const auto small = equidistribution_report(p, 1000, env.shifts, 1.0, env.threads);
  const auto large = equidistribution_report(p, 200000, env.shifts, 1.0, env.threads);
  t.detail = {{"max_abs_1e3", small.max_abs}, {"max_abs_2e5", large.max_abs}};
  t.expect(large.max_abs < small.max_abs, [&] {
    return std::to_string(large.max_abs) + " >= " + std::to_string(small.max_abs);
  });
}

PolyAngle random_poly(Sampler &s, std::size_t deg, bool torsion_only) {
  std::vector<Angle> c;
  for (std::size_t d = 0; d <= deg; ++d) {
    if (torsion_only) {
      const long q = s.uniform(1, 12);
      c.emplace_back(mpq_class(s.uniform(0, q - 1), q));
    } else {
      c.push_back(s.angle());
    }
  }
  return PolyAngle(std::move(c));
}

void weyl_shift(Sampler &s, const CheckEnv &env, Tally &t) {
  for (int i = 0; i < 20; ++i) {
    const PolyAngle p = random_poly(s, static_cast<std::size_t>(s.uniform(0, 3)), s.coin(0.3));
    mpz_class k = s.below(mpz_class(1000000000)) + 1;
    const auto a = weyl_average(p, 5000, k, env.threads);
    const auto b = weyl_average(p.shifted(k), 5000, 0, env.threads);
    t.expect(std::abs(a - b) < 1e-12, [&] {
      return format_poly(p) + " k=" + k.get_str() + " diff=" + std::to_string(std::abs(a - b));
    });
  }
}

void weyl_rational(Sampler &s, const CheckEnv &env, Tally &t) {
  {
    const PolyAngle p({Angle(), Angle(mpq_class(1, 3))});
    const auto a = weyl_average(p, 300000, 0, env.threads);
    t.expect(std::abs(a) < 1e-10, [&] { return "1/3 linear |avg| = " + std::to_string(std::abs(a)); });
  }
  for (int i = 0; i < 40; ++i) {
    const PolyAngle p = random_poly(s, static_cast<std::size_t>(s.uniform(1, 3)), true);
    const mpz_class period = rational_period(p);
    if (period > 200000)
      continue;
    const std::uint64_t N = period.get_ui() * static_cast<std::uint64_t>(s.uniform(1, 3));
    const mpz_class k = s.below(mpz_class(1000000));
    const auto a = weyl_average(p, N, k, env.threads);
    const auto target = limit_average(p);
    t.expect(std::abs(a - target) < 1e-10, [&] {
      return format_poly(p) + " N=" + std::to_string(N) + " diff=" + std::to_string(std::abs(a - target));
    });
  }
}

void weyl_determinism(Sampler &s, const CheckEnv &, Tally &t) {
  for (int i = 0; i < 5; ++i) {
    const PolyAngle p = random_poly(s, 2, false);
    const mpz_class k = s.below(mpz_class(1000000000));
    const auto a = weyl_average(p, 20000, k, 1);
    const auto b = weyl_average(p, 20000, k, 1);
    const auto c = weyl_average(p, 20000, k, 3);
    t.expect(a == b && a == c, [&] { return "poly " + format_poly(p); });
  }
}

// ---------------------------------------------------------------- factor

void factor_subgroups(Sampler &s, const CheckEnv &env, Tally &t) {
  const auto &cfg = env.factor;
  const HmElement id = HmElement::identity(cfg.m, s.context());
  t.expect(g_member(id, cfg) && g1_member(id, cfg), [] { return std::string("identity"); });
  t.expect(!g1_member(HmElement::tilde(1L, cfg.m, s.context()), cfg),
           [] { return std::string("1~ reported in G1"); });
  for (int i = 0; i < 500; ++i) {
    const HmElement a = s.g1_element(cfg), b = s.g1_element(cfg);
    t.expect(g1_member(a, cfg) && g1_member(star(a, b), cfg) && g1_member(inverse(a), cfg),
             [&] { return "G1 pair " + str(long(i)); });
    const HmElement c = s.g_element(cfg), d = s.g_element(cfg);
    t.expect(g_member(c, cfg) && g_member(star(c, d), cfg) && g_member(inverse(c), cfg),
             [&] { return "G pair " + str(long(i)); });
  }
}

void factor_cosets(Sampler &s, const CheckEnv &env, Tally &t) {
  const auto &cfg = env.factor;
  for (int i = 0; i < 200; ++i) {
    const HmElement phi = s.g1_element(cfg), psi = s.g1_element(cfg);
    const HmElement g = s.g_element(cfg), h = s.g_element(cfg);
    const HmElement pg = star(phi, g), pgh = star(pg, h);
    const bool eq = coset_equal(phi, psi, cfg);
    t.expect(coset_equal(phi, phi, cfg), [&] { return "reflexivity " + str(long(i)); });
    t.expect(coset_equal(phi, pg, cfg) && coset_equal(pg, phi, cfg),
             [&] { return "right multiplication " + str(long(i)); });
    t.expect(coset_equal(pg, pgh, cfg) && coset_equal(phi, pgh, cfg),
             [&] { return "transitivity " + str(long(i)); });
    t.expect(eq == coset_equal(psi, phi, cfg), [&] { return "symmetry " + str(long(i)); });
    t.expect(eq == g_member(star(inverse(phi), psi), cfg),
             [&] { return "quotient agreement " + str(long(i)); });
  }
}

void factor_alpha(Sampler &s, const CheckEnv &env, Tally &t) {
  const auto &cfg = env.factor;
  const Angle half(mpq_class(1, 2));
  for (int i = 0; i < 200; ++i) {
    const HmElement phi = s.g1_element(cfg), psi = s.g1_element(cfg);
    const Angle a = alpha(phi, psi, cfg);
    t.expect((a.is_zero() || a == half) && alpha(phi, phi, cfg).is_zero(),
             [&] { return "alpha = " + str(a); });
  }
  bool threw = false;
  try {
    (void)alpha(HmElement::identity(cfg.m, s.context()), HmElement::tilde(1L, cfg.m, s.context()), cfg);
  } catch (const RelationError &) {
    threw = true;
  }
  t.expect(threw, [] { return std::string("alpha accepted a pair violating (A)/(B)"); });
}

std::vector<Angle> coset_constant_v(Sampler &s, const FactorConfig &cfg) {
  std::vector<Angle> v(static_cast<std::size_t>(cfg.m) + 1);
  v[0] = s.angle();
  for (std::size_t k = 1; k < v.size(); ++k) {
    v[k] = s.torsion_angle();
    if (k <= 2)
      v[k] += (2 * s.uniform(-50, 50)) * cfg.x();
  }
  return v;
}

void factor_qef(Sampler &s, const CheckEnv &env, Tally &t) {
  const auto &cfg = env.factor;
  for (int i = 0; i < 200; ++i) {
    const auto v = coset_constant_v(s, cfg);
    const HmElement phi = s.element(cfg.m), g = s.g_element(cfg);
    t.expect(qef_coset_constant(v, cfg) && q_eval(v, star(phi, g)) == q_eval(v, phi),
             [&] { return "case " + str(long(i)); });
  }
  std::vector<Angle> odd(static_cast<std::size_t>(cfg.m) + 1);
  odd[2] = cfg.x();
  t.expect(!qef_coset_constant(odd, cfg), [] { return std::string("v_2 = x accepted"); });
  if (cfg.ctx->basis->size() > 1 && cfg.m >= 3) {
    std::vector<Angle> irr(static_cast<std::size_t>(cfg.m) + 1);
    irr[3] = Angle::term(cfg.ctx->basis, cfg.x_index == 0 ? 1 : 0, 1);
    t.expect(!qef_coset_constant(irr, cfg), [] { return std::string("irrational v_3 accepted"); });
  }
}

void factor_nonseparation(Sampler &, const CheckEnv &env, Tally &t) {
  const auto [phi, rep] = nonseparation_witness(env.factor);
  t.detail = {{"witness", element_to_json(phi)}, {"report", witness_to_json(rep)}};
  t.expect(rep.pass, [&] { return witness_to_json(rep).dump(); });
}

std::vector<KernelSpec> kernel_specs(const CheckEnv &env) {
  const auto &ctx = env.ctx;
  const Angle tors(ctx->basis, mpq_class(mpz_class(1), ctx->modulus), {});
  std::vector<KernelSpec> specs{{1, {tors}}};
  if (!ctx->basis->empty()) {
    specs.push_back({2, {ctx->generator(0)}});
    specs.push_back({3, {tors, ctx->generator(0)}});
  }
  return specs;
}

void factor_kernel(Sampler &s, const CheckEnv &env, Tally &t) {
  const int m = std::max(3, env.factor.m);
  const HmElement id = HmElement::identity(m, s.context());
  for (const auto &spec : kernel_specs(env)) {
    t.expect(kernel_member(id, spec), [&] { return "identity, spec m=" + str(long(spec.m)); });
    for (int i = 0; i < 200; ++i) {
      const HmElement kappa = s.kernel_element(m, spec), psi = s.element(m);
      const HmElement other = s.kernel_element(m, spec);
      t.expect(kernel_member(star(inverse(psi), star(kappa, psi)), spec) &&
                   kernel_member(star(kappa, other), spec) && kernel_member(inverse(kappa), spec),
               [&] { return "spec m=" + str(long(spec.m)) + " case " + str(long(i)); });
    }
  }
}

// ---------------------------------------------------------------- io

void io_round_trip(Sampler &s, const CheckEnv &env, Tally &t) {
  const auto &ctx = s.context();
  for (int i = 0; i < 200; ++i) {
    const HmElement e = s.element(ellis_m(env));
    const auto text = element_to_json(e).dump();
    t.expect(element_from_json(nlohmann::json::parse(text), ctx) == e,
             [&] { return "element " + str(long(i)); });
  }
  for (int i = 0; i < 1000; ++i) {
    const Angle a = s.angle();
    t.expect(parse_angle(format_angle(a), ctx->basis) == a, [&] { return format_angle(a); });
  }
  for (int i = 0; i < 200; ++i) {
    const PolyAngle p = random_poly(s, static_cast<std::size_t>(s.uniform(0, 4)), false);
    t.expect(parse_poly(format_poly(p), ctx->basis) == p, [&] { return format_poly(p); });
  }
}

const std::vector<std::pair<std::string, CheckFn>> &registry() {
  static const std::vector<std::pair<std::string, CheckFn>> r = [] {
    std::vector<std::pair<std::string, CheckFn>> v{
        {"combinatorics.pascal", comb_pascal},
        {"combinatorics.vandermonde", comb_vandermonde},
        {"combinatorics.negation", comb_negation},
        {"combinatorics.stirling", comb_stirling},
        {"circle.group", circle_group},
        {"circle.int-mul", circle_int_mul},
        {"circle.torsion-order", circle_torsion},
        {"circle.unit-homomorphism", circle_unit},
        {"endo.homomorphism", endo_homomorphism},
        {"endo.composition", endo_composition},
        {"endo.commutativity", endo_commutativity},
        {"ellis.group-axioms", ellis_group_axioms},
        {"ellis.closure", ellis_closure},
        {"ellis.inverse-formula", ellis_inverse_formula},
        {"ellis.tilde-homomorphism", ellis_tilde},
        {"ellis.commutator", ellis_commutator},
        {"ellis.central-series", ellis_central_series},
        {"ellis.iterate", ellis_iterate},
        {"ellis.action", ellis_action},
        {"ellis.ast", ellis_ast},
        {"dynamics.iterate-oracle", dyn_oracle},
        {"dynamics.cocycle", dyn_cocycle},
        {"dynamics.distality", dyn_distality},
        {"dynamics.orbit-polynomial", dyn_orbit_polynomial},
        {"dynamics.degree-law", dyn_degree_law},
        {"dynamics.diagonal", dyn_diagonal},
        {"dynamics.q-shift", dyn_q_shift},
        {"dynamics.q-injective", dyn_q_injective},
        {"weyl.quadratic", weyl_quadratic},
        {"weyl.monotone", weyl_monotone},
        {"weyl.shift-consistency", weyl_shift},
        {"weyl.rational", weyl_rational},
        {"weyl.determinism", weyl_determinism},
        {"factor.subgroups", factor_subgroups},
        {"factor.cosets", factor_cosets},
        {"factor.alpha", factor_alpha},
        {"factor.qef-constant", factor_qef},
        {"factor.nonseparation", factor_nonseparation},
        {"factor.kernel-normality", factor_kernel},
        {"io.round-trip", io_round_trip},
    };
    std::sort(v.begin(), v.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    return v;
  }();
  return r;
}

} // namespace

std::vector<std::string> check_ids() {
  std::vector<std::string> ids;
  for (const auto &[id, _] : registry())
    ids.push_back(id);
  return ids;
}

std::vector<CheckResult> run_checks(const std::string &selector, std::uint64_t seed,
                                    const CheckEnv &env, unsigned threads) {
  std::vector<const std::pair<std::string, CheckFn> *> chosen;
  for (const auto &entry : registry()) {
    const auto &id = entry.first;
    if (selector == "all" || selector == id ||
        (id.size() > selector.size() && id.compare(0, selector.size(), selector) == 0 &&
         id[selector.size()] == '.'))
      chosen.push_back(&entry);
  }
  if (chosen.empty())
    throw ConfigError("no property suite matches '" + selector + "'");

  std::vector<CheckResult> results(chosen.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < chosen.size(); i = next++) {
      const auto &[id, fn] = *chosen[i];
      Sampler sampler(case_seed(seed, id), env.ctx);
      Tally tally;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        fn(sampler, env, tally);
      } catch (const std::exception &e) {
        ++tally.failures;
        tally.notes.push_back(std::string("exception: ") + e.what());
      }
      const auto t1 = std::chrono::steady_clock::now();
      CheckResult &r = results[i];
      r.id = id;
      r.cases = tally.cases;
      r.failures = tally.failures;
      r.notes = std::move(tally.notes);
      r.detail = std::move(tally.detail);
      r.pass = tally.failures == 0 && tally.cases > 0;
      r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(chosen.size())));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back(work);
    for (auto &th : pool)
      th.join();
  }
  return results;
}

nlohmann::json result_to_json(const CheckResult &r, bool with_timing) {
  nlohmann::json j = {{"id", r.id},
                      {"pass", r.pass},
                      {"cases", r.cases},
                      {"failures", r.failures},
                      {"notes", r.notes}};
  if (!r.detail.is_null())
    j["detail"] = r.detail;
  if (with_timing)
    j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

} // namespace skewtorus
