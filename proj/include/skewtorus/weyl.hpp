#pragma once

#include "skewtorus/dynamics.hpp"
#include "skewtorus/poly_angle.hpp"

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <vector>

namespace skewtorus {

inline constexpr std::size_t kWeylChunk = 4096;
inline constexpr std::int64_t kMaxPeriod = 10'000'000;
inline constexpr double kDefaultWeylTol = 0.02;

struct WeylReport {
  std::uint64_t N = 0;
  std::vector<mpz_class> shifts;
  std::vector<std::complex<double>> averages;
  double max_abs = 0;
  std::complex<double> target;
  double tol = 0;
  bool pass = false;
};

/// (1/N) sum_{n=1}^{N} e(p(n + k)). Terms are summed pairwise inside chunks
/// of 4096 and the chunk sums pairwise again, so the result is bit-identical
/// for any thread count.
std::complex<double> weyl_average(const PolyAngle &p, std::uint64_t N, const mpz_class &k,
                                  unsigned threads = 1);

/// Smallest t (a multiple of the true period) with p(n + t) - p(n) constant
/// mod 1 when every nonconstant coefficient is torsion: lcm of den(c_d) * d!.
/// Throws UnsupportedError when some nonconstant coefficient is irrational.
mpz_class rational_period(const PolyAngle &p);

/// Limit of the Weyl averages: 0 when equidistributed, otherwise the exact
/// mean over one period times e(c_0's irrational part). Throws
/// UnsupportedError if the period exceeds kMaxPeriod.
std::complex<double> limit_average(const PolyAngle &p);

/// Throws ConfigError for tol <= 0 or N == 0.
WeylReport equidistribution_report(const PolyAngle &p, std::uint64_t N,
                                   const std::vector<mpz_class> &shifts, double tol,
                                   unsigned threads = 1);

/// Weyl report for the character v along the orbit of x. Throws
/// DegenerateError for v == 0.
WeylReport unique_ergodicity_check(const BasicSystem &sys, const CharacterIndex &v,
                                   const TorusPoint &x, std::uint64_t N,
                                   const std::vector<mpz_class> &shifts, double tol,
                                   unsigned threads = 1);

} // namespace skewtorus
