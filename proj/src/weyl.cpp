#include "skewtorus/weyl.hpp"

#include "skewtorus/bigfloat.hpp"
#include "skewtorus/combinatorics.hpp"
#include "skewtorus/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <numbers>
#include <thread>

namespace skewtorus {

namespace {

using cplx = std::complex<double>;

cplx pairwise(const cplx *v, std::size_t n) {
  if (n == 0)
    return {};
  if (n == 1)
    return v[0];
  if (n == 2)
    return v[0] + v[1];
  const std::size_t h = n / 2;
  return pairwise(v, h) + pairwise(v + h, n - h);
}

cplx unit_of_phase(double t) {
  const double a = 2.0 * std::numbers::pi * t;
  return {std::cos(a), std::sin(a)};
}

// p written over integers: component 0 is the rational part scaled by D,
// component 1+i is the b_i coefficient scaled by D_i.
struct Compiled {
  std::size_t r = 0;              // basis size
  mpz_class D;                    // rational denominator
  std::vector<mpz_class> Di;      // per-symbol denominators
  std::vector<std::vector<mpz_class>> u; // u[d][component]
  std::vector<detail::BigFloat> w;       // value_i / D_i
};

Compiled compile(const PolyAngle &p) {
  Compiled c;
  BasisPtr basis;
  for (const auto &a : p.coeffs())
    basis = common_basis(basis, a.basis());
  c.r = basis ? basis->size() : 0;
  c.D = 1;
  c.Di.assign(c.r, mpz_class(1));
  for (const auto &a : p.coeffs()) {
    mpz_lcm(c.D.get_mpz_t(), c.D.get_mpz_t(), a.rat().get_den_mpz_t());
    for (const auto &[i, q] : a.coeffs())
      mpz_lcm(c.Di[i].get_mpz_t(), c.Di[i].get_mpz_t(), q.get_den_mpz_t());
  }
  for (const auto &a : p.coeffs()) {
    std::vector<mpz_class> row(1 + c.r);
    row[0] = mpq_class(a.rat() * c.D).get_num();
    for (const auto &[i, q] : a.coeffs())
      row[1 + i] = mpq_class(q * c.Di[i]).get_num();
    c.u.push_back(std::move(row));
  }
  c.w.resize(c.r);
  for (std::size_t i = 0; i < c.r; ++i) {
    mpfr_div_z(c.w[i].get(), basis->numeric(i), c.Di[i].get_mpz_t(), MPFR_RNDN);
  }
  return c;
}

// Sum of e(p(n)) for n in [n0, n0 + len), by exact forward differences.
cplx chunk_sum(const Compiled &c, const mpz_class &n0, std::size_t len, std::vector<cplx> &buf) {
  const std::size_t deg = c.u.size() - 1;
  const std::size_t comps = 1 + c.r;
  // diff[j] = Delta^j p(n0) = sum_d C(n0, d - j) u_d
  std::vector<std::vector<mpz_class>> diff(deg + 1, std::vector<mpz_class>(comps));
  std::vector<mpz_class> b(deg + 1);
  for (std::size_t d = 0; d <= deg; ++d)
    b[d] = binom(n0, d);
  for (std::size_t j = 0; j <= deg; ++j)
    for (std::size_t d = j; d <= deg; ++d)
      for (std::size_t q = 0; q < comps; ++q)
        if (c.u[d][q] != 0)
          diff[j][q] += b[d - j] * c.u[d][q];
  for (std::size_t j = 0; j <= deg; ++j)
    mpz_fdiv_r(diff[j][0].get_mpz_t(), diff[j][0].get_mpz_t(), c.D.get_mpz_t());

  buf.resize(len);
  detail::BigFloat acc, t;
  for (std::size_t s = 0; s < len; ++s) {
    mpfr_set_z(acc.get(), diff[0][0].get_mpz_t(), MPFR_RNDN);
    mpfr_div_z(acc.get(), acc.get(), c.D.get_mpz_t(), MPFR_RNDN);
    for (std::size_t i = 0; i < c.r; ++i) {
      if (diff[0][1 + i] == 0)
        continue;
      mpfr_mul_z(t.get(), c.w[i].get(), diff[0][1 + i].get_mpz_t(), MPFR_RNDN);
      mpfr_add(acc.get(), acc.get(), t.get(), MPFR_RNDN);
    }
    buf[s] = unit_of_phase(detail::frac_to_double(acc.get()));
    for (std::size_t j = 0; j < deg; ++j) {
      for (std::size_t q = 0; q < comps; ++q)
        diff[j][q] += diff[j + 1][q];
      if (diff[j][0] >= c.D)
        diff[j][0] -= c.D;
    }
  }
  return pairwise(buf.data(), len);
}

} // namespace

cplx weyl_average(const PolyAngle &p, std::uint64_t N, const mpz_class &k, unsigned threads) {
  if (N == 0)
    throw ConfigError("Weyl average needs N >= 1");
  const Compiled c = compile(p);
  const std::size_t chunks = static_cast<std::size_t>((N + kWeylChunk - 1) / kWeylChunk);
  std::vector<cplx> sums(chunks);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    std::vector<cplx> buf;
    for (std::size_t i = next++; i < chunks; i = next++) {
      const std::uint64_t first = static_cast<std::uint64_t>(i) * kWeylChunk;
      const std::size_t len =
          static_cast<std::size_t>(std::min<std::uint64_t>(kWeylChunk, N - first));
      mpz_class n0 = k + 1;
      n0 += mpz_class(std::to_string(first));
      sums[i] = chunk_sum(c, n0, len, buf);
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(chunks)));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back(work);
    for (auto &th : pool)
      th.join();
  }
  return pairwise(sums.data(), sums.size()) / static_cast<double>(N);
}

mpz_class rational_period(const PolyAngle &p) {
  mpz_class t = 1;
  for (std::size_t d = 1; d < p.coeffs().size(); ++d) {
    const Angle &c = p.coeff(d);
    if (!c.is_torsion())
      throw UnsupportedError("coefficient of C(n," + std::to_string(d) + ") is irrational");
    if (c.rat() == 0)
      continue;
    mpz_class q = mpz_class(c.rat().get_den()) * factorial(d);
    mpz_lcm(t.get_mpz_t(), t.get_mpz_t(), q.get_mpz_t());
  }
  return t;
}

cplx limit_average(const PolyAngle &p) {
  const auto &cs = p.coeffs();
  for (std::size_t d = 1; d < cs.size(); ++d)
    if (!cs[d].is_torsion())
      return {0.0, 0.0};
  if (cs.size() == 2 && cs[1].rat() != 0)
    return {0.0, 0.0};
  const mpz_class t = rational_period(p);
  if (t > kMaxPeriod)
    throw UnsupportedError("period " + t.get_str() + " exceeds the exact-average cap");
  const long period = t.get_si();
  // Count phases exactly over one period: the rational part of p(n) - c_0.
  mpz_class D = 1;
  for (std::size_t d = 1; d < cs.size(); ++d)
    mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), cs[d].rat().get_den_mpz_t());
  std::vector<mpz_class> u(cs.size());
  for (std::size_t d = 1; d < cs.size(); ++d)
    u[d] = mpq_class(cs[d].rat() * D).get_num();
  // forward differences from n = 0: Delta^j p(0) = u_j
  std::vector<mpz_class> diff = u;
  diff[0] = 0;
  std::map<mpz_class, long> counts;
  for (long n = 0; n < period; ++n) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), diff[0].get_mpz_t(), D.get_mpz_t());
    ++counts[r];
    for (std::size_t j = 0; j + 1 < diff.size(); ++j) {
      diff[j] += diff[j + 1];
      mpz_fdiv_r(diff[j].get_mpz_t(), diff[j].get_mpz_t(), D.get_mpz_t());
    }
  }
  std::vector<cplx> terms;
  terms.reserve(counts.size());
  for (const auto &[r, cnt] : counts)
    terms.push_back(static_cast<double>(cnt) * to_unit(Angle(mpq_class(r, D))));
  cplx mean = pairwise(terms.data(), terms.size()) / static_cast<double>(period);
  return mean * to_unit(cs[0]);
}

WeylReport equidistribution_report(const PolyAngle &p, std::uint64_t N,
                                   const std::vector<mpz_class> &shifts, double tol,
                                   unsigned threads) {
  if (!(tol > 0))
    throw ConfigError("tolerance must be positive");
  if (N == 0)
    throw ConfigError("N must be at least 1");
  WeylReport rep;
  rep.N = N;
  rep.shifts = shifts;
  rep.tol = tol;
  rep.target = limit_average(p);
  for (const auto &k : shifts) {
    if (k < 0)
      throw ConfigError("shifts must be nonnegative");
    const cplx a = weyl_average(p, N, k, threads);
    rep.averages.push_back(a);
    rep.max_abs = std::max(rep.max_abs, std::abs(a - rep.target));
  }
  rep.pass = rep.max_abs < tol;
  return rep;
}

WeylReport unique_ergodicity_check(const BasicSystem &sys, const CharacterIndex &v,
                                   const TorusPoint &x, std::uint64_t N,
                                   const std::vector<mpz_class> &shifts, double tol,
                                   unsigned threads) {
  if (v.is_zero())
    throw DegenerateError("character v = 0 is constant; its average is trivially e(0)");
  return equidistribution_report(orbit_polynomial(sys, v, x), N, shifts, tol, threads);
}

} // namespace skewtorus
