#pragma once

#include "skewtorus/dynamics.hpp"
#include "skewtorus/endo.hpp"

#include <gmpxx.h>
#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace skewtorus {

/// Runtime configuration. Every field has a default; a JSON file may
/// override any subset:
///
///   {"level": 6,
///    "basis": [{"name": "b1", "value": "0.4142..."}],
///    "system": {"m": 2, "x0": "1*b1"},
///    "seed": 42, "shifts": [0, 1000], "tolerance": 0.02,
///    "factor_symbol": "b1", "threads": 1}
///
/// The basis symbols together with 1 are assumed linearly independent over
/// the rationals. Nothing checks this.
struct Config {
  int level = kDefaultLevel;
  std::vector<BasisDecl::Symbol> basis = default_basis();
  int system_m = 2;
  std::string x0 = "1*b1";
  std::optional<std::uint64_t> seed;
  std::vector<mpz_class> shifts = {0, 1000, 1000000, 1000000000};
  double tolerance = 0.02;
  std::string factor_symbol = "b1";
  unsigned threads = 1;

  static std::vector<BasisDecl::Symbol> default_basis();

  /// Builds the truncation context; throws ConfigError on invalid values.
  ContextPtr context() const;
};

/// Minimum number of significant digits for basis values.
inline constexpr int kMinBasisDigits = 30;

Config config_from_json(const nlohmann::json &j);
Config load_config_file(const std::string &path);

/// Resolution order: explicit path, then $SKEWTORUS_CONFIG, then defaults.
Config resolve_config(const std::optional<std::string> &path);

void validate(const Config &cfg);

} // namespace skewtorus
