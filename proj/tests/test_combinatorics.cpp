#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewtorus/combinatorics.hpp"

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

using namespace skewtorus;

namespace {

mpz_class gmp_binom(long n, unsigned long k) {
  mpz_class r;
  mpz_bin_ui(r.get_mpz_t(), mpz_class(n).get_mpz_t(), k);
  return r;
}

// Coefficients of n(n-1)...(n-k+1) in the monomial basis, by direct
// polynomial multiplication.
std::vector<mpz_class> falling_factorial_coeffs(unsigned k) {
  std::vector<mpz_class> c{1};
  for (unsigned i = 0; i < k; ++i) {
    std::vector<mpz_class> next(c.size() + 1, 0);
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j + 1] += c[j];
      next[j] -= mpz_class(i) * c[j];
    }
    c = std::move(next);
  }
  return c;
}

} // namespace

TEST_CASE("binomial small values") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(-1, 3) == -1);
  CHECK(binom(-3, 2) == 6);
  CHECK(binom(7, 0) == 1);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(0, 3) == 0);
  CHECK(binom(3, 5) == 0);
}

TEST_CASE("binomial agrees with gmp over a grid") {
  for (long n = -40; n <= 40; ++n)
    for (unsigned long k = 0; k <= 25; ++k)
      CHECK(binom(n, k) == gmp_binom(n, k));
}

TEST_CASE("binomial at large arguments") {
  const mpz_class big("1000000000000");
  mpz_class want;
  mpz_bin_ui(want.get_mpz_t(), big.get_mpz_t(), 7);
  CHECK(binom(big, 7) == want);
  mpz_bin_ui(want.get_mpz_t(), mpz_class(-big).get_mpz_t(), 7);
  CHECK(binom(mpz_class(-big), 7) == want);
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(factorial(20) == mpz_class("2432902008176640000"));
}

TEST_CASE("stirling numbers of the first kind") {
  CHECK(stirling1(0, 0) == 1);
  CHECK(stirling1(3, 0) == 0);
  CHECK(stirling1(3, 2) == -3);
  CHECK(stirling1(3, 3) == 1);
  CHECK(stirling1(4, 1) == -6);
  CHECK_THROWS_AS(stirling1(2, 3), std::domain_error);
}

TEST_CASE("stirling rows match the expanded falling factorial") {
  for (unsigned k = 0; k <= 20; ++k) {
    const auto c = falling_factorial_coeffs(k);
    for (unsigned j = 0; j <= k; ++j)
      CHECK(stirling1(k, j) == c[j]);
  }
}
