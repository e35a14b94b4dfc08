#include "skewtorus/config.hpp"

#include "skewtorus/errors.hpp"
#include "skewtorus/syntax.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>

namespace skewtorus {

std::vector<BasisDecl::Symbol> Config::default_basis() {
  return {
      {"b1", "0.4142135623730950488016887242096980785696718753769481"}, // sqrt(2) - 1
      {"b2", "0.7320508075688772935274463415058723669428052538103806"}, // sqrt(3) - 1
  };
}

namespace {

int significant_digits(const std::string &s) {
  int n = 0;
  bool leading = true;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      continue;
    if (leading && c == '0')
      continue;
    leading = false;
    ++n;
  }
  return n;
}

mpz_class json_integer(const nlohmann::json &j, const char *what) {
  if (j.is_number_integer())
    return j.is_number_unsigned() ? mpz_class(std::to_string(j.get<std::uint64_t>()))
                                  : mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) == 0)
      return z;
  }
  throw ConfigError(std::string(what) + " must be an integer");
}

} // namespace

void validate(const Config &cfg) {
  if (cfg.level < 2)
    throw ConfigError("level must be at least 2");
  for (const auto &s : cfg.basis)
    if (significant_digits(s.value) < kMinBasisDigits)
      throw ConfigError("basis symbol '" + s.name + "' needs at least " +
                        std::to_string(kMinBasisDigits) + " significant digits");
  if (cfg.system_m < 1)
    throw ConfigError("system.m must be at least 1");
  if (!(cfg.tolerance > 0))
    throw ConfigError("tolerance must be positive");
  if (cfg.threads < 1)
    throw ConfigError("threads must be at least 1");
  for (const auto &k : cfg.shifts)
    if (k < 0)
      throw ConfigError("shifts must be nonnegative");
}

ContextPtr Config::context() const {
  validate(*this);
  auto ctx = make_context(level, make_basis(basis));
  (void)parse_angle(x0, ctx->basis);
  return ctx;
}

Config config_from_json(const nlohmann::json &j) {
  if (!j.is_object())
    throw ConfigError("config must be a JSON object");
  Config cfg;
  try {
    if (j.contains("level"))
      cfg.level = j.at("level").get<int>();
    if (j.contains("basis")) {
      cfg.basis.clear();
      for (const auto &s : j.at("basis"))
        cfg.basis.push_back({s.at("name").get<std::string>(), s.at("value").get<std::string>()});
    }
    if (j.contains("system")) {
      const auto &s = j.at("system");
      if (s.contains("m"))
        cfg.system_m = s.at("m").get<int>();
      if (s.contains("x0"))
        cfg.x0 = s.at("x0").get<std::string>();
    }
    if (j.contains("seed"))
      cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("shifts")) {
      cfg.shifts.clear();
      for (const auto &k : j.at("shifts"))
        cfg.shifts.push_back(json_integer(k, "shift"));
    }
    if (j.contains("tolerance"))
      cfg.tolerance = j.at("tolerance").get<double>();
    if (j.contains("factor_symbol"))
      cfg.factor_symbol = j.at("factor_symbol").get<std::string>();
    if (j.contains("threads"))
      cfg.threads = j.at("threads").get<unsigned>();
  } catch (const nlohmann::json::exception &e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  validate(cfg);
  return cfg;
}

Config load_config_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception &e) {
    throw ConfigError("config file '" + path + "': " + e.what());
  }
  return config_from_json(j);
}

Config resolve_config(const std::optional<std::string> &path) {
  if (path)
    return load_config_file(*path);
  if (const char *env = std::getenv("SKEWTORUS_CONFIG"); env && *env)
    return load_config_file(env);
  return Config{};
}

} // namespace skewtorus
