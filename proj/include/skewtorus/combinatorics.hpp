#pragma once

#include <gmpxx.h>

namespace skewtorus {

/// Generalized binomial coefficient n(n-1)...(n-k+1)/k! for any integer n.
/// binom(n, 0) == 1 for every n.
mpz_class binom(const mpz_class &n, unsigned long k);
mpz_class binom(long n, unsigned long k);

/// Signed Stirling numbers of the first kind, defined by
///   k! * binom(n, k) == sum_{j=0..k} stirling1(k, j) * n^j.
/// Throws std::domain_error when j > k. Rows are memoized; safe to call from
/// several threads.
mpz_class stirling1(unsigned k, unsigned j);

mpz_class factorial(unsigned long k);

} // namespace skewtorus
