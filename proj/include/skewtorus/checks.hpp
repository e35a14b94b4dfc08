#pragma once

#include "skewtorus/config.hpp"
#include "skewtorus/factor_lab.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace skewtorus {

struct CheckEnv {
  ContextPtr ctx;
  FactorConfig factor;
  std::vector<mpz_class> shifts;
  double tol = 0.02;
  unsigned threads = 1;
};

CheckEnv make_check_env(const Config &cfg);

struct CheckResult {
  std::string id;
  bool pass = false;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> notes; ///< first few failure descriptions
  nlohmann::json detail;          ///< suite-specific payload, may be null
  double elapsed_ms = 0;
};

/// All registered property-suite identifiers, sorted.
std::vector<std::string> check_ids();

/// Runs every suite matching `selector` ("all", a module prefix such as
/// "ellis", or a full id). Each suite draws from its own stream seeded by
/// case_seed(seed, id); results come back sorted by id regardless of
/// `threads`. Throws ConfigError for a selector that matches nothing.
std::vector<CheckResult> run_checks(const std::string &selector, std::uint64_t seed,
                                    const CheckEnv &env, unsigned threads = 1);

nlohmann::json result_to_json(const CheckResult &r, bool with_timing);

} // namespace skewtorus
