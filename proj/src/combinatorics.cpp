#include "skewtorus/combinatorics.hpp"

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewtorus {

mpz_class binom(const mpz_class &n, unsigned long k) {
  // r holds binom(n, i) after i steps; each division is exact.
  mpz_class r = 1;
  mpz_class factor;
  for (unsigned long i = 0; i < k; ++i) {
    factor = n - i;
    r *= factor;
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), i + 1);
  }
  return r;
}

mpz_class binom(long n, unsigned long k) { return binom(mpz_class(n), k); }

mpz_class factorial(unsigned long k) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

namespace {

struct StirlingTable {
  std::mutex mutex;
  std::vector<std::vector<mpz_class>> rows{{mpz_class(1)}};
};

StirlingTable &stirling_table() {
  static StirlingTable table;
  return table;
}

} // namespace

mpz_class stirling1(unsigned k, unsigned j) {
  if (j > k)
    throw std::domain_error("stirling1: j = " + std::to_string(j) +
                            " exceeds k = " + std::to_string(k));
  auto &table = stirling_table();
  std::lock_guard lock(table.mutex);
  auto &rows = table.rows;
  // s(k+1, j) = s(k, j-1) - k * s(k, j)
  while (rows.size() <= k) {
    const auto prev_k = static_cast<unsigned long>(rows.size() - 1);
    const auto &prev = rows.back();
    std::vector<mpz_class> next(prev.size() + 1);
    for (std::size_t col = 0; col < next.size(); ++col) {
      mpz_class value = 0;
      if (col >= 1)
        value += prev[col - 1];
      if (col < prev.size())
        value -= prev_k * prev[col];
      next[col] = value;
    }
    rows.push_back(std::move(next));
  }
  return rows[k][j];
}

} // namespace skewtorus
