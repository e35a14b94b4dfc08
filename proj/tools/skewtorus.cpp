// skewtorus: command-line front end. JSON Lines on stdout, diagnostics on
// stderr. Exit codes: 0 all pass, 2 property failure, 3 configuration,
// parse, truncation or membership error.

#include "skewtorus/checks.hpp"
#include "skewtorus/config.hpp"
#include "skewtorus/dynamics.hpp"
#include "skewtorus/ellis.hpp"
#include "skewtorus/errors.hpp"
#include "skewtorus/factor_lab.hpp"
#include "skewtorus/json_io.hpp"
#include "skewtorus/syntax.hpp"
#include "skewtorus/weyl.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace skewtorus;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 2;
constexpr int kExitError = 3;

void emit(const json &j) { std::cout << j.dump() << '\n'; }

mpz_class parse_integer(const std::string &s, const char *what) {
  mpz_class z;
  std::string t = s;
  if (!t.empty() && t[0] == '+')
    t.erase(0, 1);
  if (t.empty() || z.set_str(t, 10) != 0)
    throw ConfigError(std::string(what) + ": '" + s + "' is not an integer");
  return z;
}

std::vector<mpz_class> parse_shifts(const std::string &s) {
  std::vector<mpz_class> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw ConfigError("empty entry in --shifts");
    out.push_back(parse_integer(item.substr(b, e - b + 1), "shift"));
  }
  return out;
}

std::string read_text(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json_text(const std::string &text, const std::string &origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError(origin + ": " + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
}

// "tilde:N", inline JSON, or a path to a JSON file.
HmElement load_operand(const std::string &spec, int m, const ContextPtr &ctx) {
  if (spec.rfind("tilde:", 0) == 0)
    return HmElement::tilde(parse_integer(spec.substr(6), "tilde index"), m, ctx);
  const auto first = spec.find_first_not_of(" \t\n");
  if (first != std::string::npos && spec[first] == '{')
    return element_from_json(parse_json_text(spec, "inline element"), ctx);
  return element_from_json(parse_json_text(read_text(spec), spec), ctx);
}

std::string timestamp() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

struct Options {
  std::optional<std::string> config_path;

  // iterate
  std::optional<int> it_m;
  std::optional<std::string> it_x0;
  std::optional<std::string> it_point;
  std::string it_n;
  bool it_oracle = false;
  std::optional<std::string> it_json;

  // weyl
  std::string w_poly;
  std::uint64_t w_N = 200000;
  std::optional<std::string> w_shifts;
  std::optional<double> w_tol;
  std::string w_format = "json";
  std::optional<unsigned> w_threads;

  // ellis
  int e_m = 2;
  std::vector<std::string> e_operands;
  std::optional<int> e_k;
  std::string e_point;

  // check
  std::string c_selector = "all";
  std::optional<std::uint64_t> c_seed;
  bool c_reproducible = false;
  bool c_list = false;
  std::optional<unsigned> c_threads;

  // factor-lab
  std::string f_symbol;
  int f_m = 3;
  int k_m = 1;
  std::string k_gamma;
  std::string k_element = "tilde:0";
  int k_elem_m = 3;
};

int cmd_iterate(const Options &o, const Config &cfg) {
  auto ctx = cfg.context();
  int m = o.it_m.value_or(cfg.system_m);
  std::string x0_text = o.it_x0.value_or(cfg.x0);
  std::optional<TorusPoint> point;
  std::string n_text = o.it_n;
  if (o.it_json) {
    const std::string &src = *o.it_json;
    const auto first = src.find_first_not_of(" \t\n");
    json req = parse_json_text(first != std::string::npos && src[first] == '{' ? src : read_text(src),
                               "iterate request");
    if (req.contains("system")) {
      const auto &s = req.at("system");
      if (s.contains("m"))
        m = s.at("m").get<int>();
      if (s.contains("x0"))
        x0_text = s.at("x0").get<std::string>();
    }
    if (req.contains("point"))
      point = point_from_json(req.at("point"), ctx->basis);
    if (req.contains("n"))
      n_text = req.at("n").is_string() ? req.at("n").get<std::string>()
                                       : std::to_string(req.at("n").get<long long>());
  }
  if (n_text.empty())
    throw ConfigError("iterate needs --n");
  const BasicSystem sys{m, parse_angle(x0_text, ctx->basis)};
  check_system(sys);
  if (!point) {
    if (o.it_point)
      point = parse_point(*o.it_point, ctx->basis);
    else
      point = TorusPoint(std::vector<Angle>(static_cast<std::size_t>(m), Angle()));
  }
  const mpz_class n = parse_integer(n_text, "--n");
  const TorusPoint result = iterate_closed(sys, *point, n);
  json out = {{"command", "iterate"},
              {"system", {{"m", m}, {"x0", format_angle(sys.x0)}}},
              {"n", n.fits_slong_p() ? json(n.get_si()) : json(n.get_str())},
              {"minimal", is_minimal(sys)},
              {"point", point_to_json(result)}};
  bool agrees = true;
  if (o.it_oracle) {
    if (!n.fits_slong_p() || abs(n) > 1000000)
      throw ConfigError("--oracle steps explicitly; |n| must be at most 1e6");
    const TorusPoint oracle = iterate_stepping(sys, *point, n.get_si());
    agrees = oracle == result;
    out["oracle"] = point_to_json(oracle);
    out["agrees"] = agrees;
  }
  emit(out);
  return agrees ? kExitPass : kExitFail;
}

int cmd_weyl(const Options &o, const Config &cfg) {
  auto ctx = cfg.context();
  const PolyAngle p = parse_poly(o.w_poly, ctx->basis);
  const auto shifts = o.w_shifts ? parse_shifts(*o.w_shifts) : cfg.shifts;
  const double tol = o.w_tol.value_or(cfg.tolerance);
  const auto rep = equidistribution_report(p, o.w_N, shifts, tol, o.w_threads.value_or(cfg.threads));
  if (o.w_format == "csv") {
    std::cout << report_to_csv(rep);
  } else {
    json out = report_to_json(rep);
    out["command"] = "weyl";
    out["poly"] = format_poly(p);
    emit(out);
  }
  return rep.pass ? kExitPass : kExitFail;
}

int cmd_ellis(const std::string &sub, const Options &o, const Config &cfg) {
  auto ctx = cfg.context();
  const auto &ops = o.e_operands;
  auto need = [&](std::size_t n) {
    if (ops.size() != n)
      throw ConfigError("ellis " + sub + " takes " + std::to_string(n) + " operand(s)");
  };
  json out = {{"command", "ellis " + sub}};
  int code = kExitPass;
  if (sub == "star") {
    need(2);
    out["result"] = element_to_json(star(load_operand(ops[0], o.e_m, ctx), load_operand(ops[1], o.e_m, ctx)));
  } else if (sub == "inv") {
    need(1);
    out["result"] = element_to_json(inverse(load_operand(ops[0], o.e_m, ctx)));
  } else if (sub == "comm") {
    need(2);
    const HmElement a = load_operand(ops[0], o.e_m, ctx), b = load_operand(ops[1], o.e_m, ctx);
    const HmElement c = commutator(a, b);
    const int k = o.e_k.value_or(central_level(a));
    const HmElement pred = predicted_commutator(a, b, k);
    const bool agrees = project(c, pred.m()) == pred;
    out["result"] = element_to_json(c);
    out["central_level"] = central_level(c);
    out["k"] = k;
    out["predicted"] = element_to_json(pred);
    out["agrees"] = agrees;
    code = agrees ? kExitPass : kExitFail;
  } else if (sub == "act") {
    need(1);
    const HmElement a = load_operand(ops[0], o.e_m, ctx);
    out["point"] = point_to_json(act(a, parse_point(o.e_point, ctx->basis)));
  } else if (sub == "is-iterate") {
    need(1);
    const auto n = iterate_index(load_operand(ops[0], o.e_m, ctx));
    out["iterate"] = n ? (n->fits_slong_p() ? json(n->get_si()) : json(n->get_str())) : json(nullptr);
  }
  emit(out);
  return code;
}

int cmd_check(const Options &o, const Config &cfg) {
  if (o.c_list) {
    for (const auto &id : check_ids())
      emit({{"id", id}});
    return kExitPass;
  }
  const auto seed = o.c_seed ? o.c_seed : cfg.seed;
  if (!seed)
    throw ConfigError("property suites need --seed (or \"seed\" in the config)");
  const auto t0 = std::chrono::steady_clock::now();
  CheckEnv env = make_check_env(cfg);
  const auto results = run_checks(o.c_selector, *seed, env, o.c_threads.value_or(cfg.threads));
  std::size_t failed = 0;
  for (const auto &r : results) {
    emit(result_to_json(r, !o.c_reproducible));
    if (!r.pass) {
      ++failed;
      std::cerr << "FAIL " << r.id;
      if (!r.notes.empty())
        std::cerr << ": " << r.notes.front();
      std::cerr << '\n';
    }
  }
  json summary = {{"summary",
                   {{"selector", o.c_selector},
                    {"seed", *seed},
                    {"suites", results.size()},
                    {"passed", results.size() - failed},
                    {"failed", failed},
                    {"pass", failed == 0}}}};
  if (!o.c_reproducible) {
    summary["timestamp"] = timestamp();
    summary["elapsed_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
  emit(summary);
  return failed == 0 ? kExitPass : kExitFail;
}

int cmd_factor_demo(const Options &o, const Config &cfg) {
  auto ctx = cfg.context();
  const auto fcfg = make_factor_config(ctx, o.f_symbol.empty() ? cfg.factor_symbol : o.f_symbol, o.f_m);
  const auto [phi, rep] = nonseparation_witness(fcfg);
  emit({{"command", "factor-lab demo"},
        {"x", format_angle(fcfg.x())},
        {"witness", element_to_json(phi)},
        {"report", witness_to_json(rep)}});
  return rep.pass ? kExitPass : kExitFail;
}

int cmd_factor_kernel(const Options &o, const Config &cfg) {
  auto ctx = cfg.context();
  KernelSpec spec{o.k_m, parse_point(o.k_gamma, ctx->basis).coords};
  const HmElement phi = load_operand(o.k_element, o.k_elem_m, ctx);
  json gamma = json::array();
  for (const auto &g : spec.gamma)
    gamma.push_back(format_angle(g));
  emit({{"command", "factor-lab kernel"},
        {"m", spec.m},
        {"gamma", gamma},
        {"member", kernel_member(phi, spec)}});
  return kExitPass;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"skewtorus: exact Ellis-group algebra of skew-product torus systems"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--config", o.config_path, "JSON config file (default: $SKEWTORUS_CONFIG)");

  auto *it = app.add_subcommand("iterate", "closed-form iterate of an (m, x0)-system");
  it->add_option("--m", o.it_m, "system dimension");
  it->add_option("--x0", o.it_x0, "rotation angle, e.g. \"1*b1\"");
  it->add_option("--point", o.it_point, "comma separated start point (default all zero)");
  it->add_option("--n", o.it_n, "iterate index (any integer)");
  it->add_flag("--oracle", o.it_oracle, "also step |n| times and report agreement");
  it->add_option("--json", o.it_json, "request {\"system\":{...},\"point\":[...],\"n\":...} inline or as a file");

  auto *wy = app.add_subcommand("weyl", "Weyl averages of a binomial-basis polynomial");
  wy->add_option("--poly", o.w_poly, "e.g. \"b1*C(n,2)\"")->required();
  wy->add_option("--N", o.w_N, "sample length")->check(CLI::PositiveNumber);
  wy->add_option("--shifts", o.w_shifts, "comma separated shifts k");
  wy->add_option("--tol", o.w_tol, "pass threshold on max |average - target|");
  wy->add_option("--format", o.w_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  wy->add_option("--threads", o.w_threads, "worker threads (result does not depend on this)");

  auto *el = app.add_subcommand("ellis", "group operations in H_m");
  el->require_subcommand(1);
  std::string ellis_sub;
  for (const char *name : {"star", "inv", "comm", "act", "is-iterate"}) {
    auto *s = el->add_subcommand(name);
    s->add_option("operands", o.e_operands, "tilde:N, inline JSON or a JSON file")->required();
    s->add_option("--m", o.e_m, "length used for tilde:N operands");
    if (std::string(name) == "comm")
      s->add_option("--k", o.e_k, "precondition index for the predicted form (default: central level of the first operand)");
    if (std::string(name) == "act")
      s->add_option("--point", o.e_point, "point indexed 0..m")->required();
    s->callback([&ellis_sub, name] { ellis_sub = name; });
  }

  auto *ck = app.add_subcommand("check", "run property suites");
  ck->add_option("selector", o.c_selector, "all, a module (e.g. ellis) or a suite id");
  ck->add_option("--seed", o.c_seed, "RNG seed");
  ck->add_flag("--reproducible", o.c_reproducible, "omit timestamps and timings");
  ck->add_flag("--list", o.c_list, "list suite ids");
  ck->add_option("--threads", o.c_threads, "worker threads");

  auto *fl = app.add_subcommand("factor-lab", "the G/G1 coset example and kernel forms");
  fl->require_subcommand(1);
  auto *demo = fl->add_subcommand("demo", "non-separation witness report");
  demo->add_option("--symbol", o.f_symbol, "basis symbol standing for the fixed irrational");
  demo->add_option("--m", o.f_m, "working dimension");
  auto *kern = fl->add_subcommand("kernel", "kernel membership query");
  kern->add_option("--m", o.k_m, "level of the kernel family")->required();
  kern->add_option("--gamma", o.k_gamma, "comma separated generators of Gamma")->required();
  kern->add_option("--element", o.k_element, "tilde:N, inline JSON or a JSON file");
  kern->add_option("--element-m", o.k_elem_m, "length used for tilde:N");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitError;
  }

  try {
    const Config cfg = resolve_config(o.config_path);
    if (it->parsed())
      return cmd_iterate(o, cfg);
    if (wy->parsed())
      return cmd_weyl(o, cfg);
    if (el->parsed())
      return cmd_ellis(ellis_sub, o, cfg);
    if (ck->parsed())
      return cmd_check(o, cfg);
    if (demo->parsed())
      return cmd_factor_demo(o, cfg);
    if (kern->parsed())
      return cmd_factor_kernel(o, cfg);
  } catch (const MembershipError &e) {
    std::cerr << "membership error (index " << e.index() << "): " << e.what() << '\n';
    return kExitError;
  } catch (const TruncationError &e) {
    std::cerr << "truncation error: " << e.what() << '\n';
    return kExitError;
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitError;
  } catch (const ConfigError &e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
