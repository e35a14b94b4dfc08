#include "skewtorus/json_io.hpp"

#include "skewtorus/errors.hpp"
#include "skewtorus/syntax.hpp"

#include <cstdio>

namespace skewtorus {

namespace {

json integer_json(const mpz_class &z) {
  if (z.fits_slong_p())
    return z.get_si();
  return z.get_str();
}

mpz_class integer_from(const json &j, const char *what) {
  if (j.is_number_integer())
    return j.is_number_unsigned() ? mpz_class(std::to_string(j.get<std::uint64_t>()))
                                  : mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) == 0)
      return z;
  }
  throw ConfigError(std::string(what) + " must be an integer or a decimal string");
}

} // namespace

json context_to_json(const TruncationContext &ctx) {
  json basis = json::array();
  for (const auto &s : ctx.basis->symbols())
    basis.push_back({{"name", s.name}, {"value", s.value}});
  return {{"level", ctx.level}, {"basis", basis}};
}

ContextPtr context_from_json(const json &j) {
  try {
    std::vector<BasisDecl::Symbol> symbols;
    for (const auto &s : j.at("basis"))
      symbols.push_back({s.at("name").get<std::string>(), s.at("value").get<std::string>()});
    return make_context(j.at("level").get<int>(), make_basis(std::move(symbols)));
  } catch (const json::exception &e) {
    throw ConfigError(std::string("context: ") + e.what());
  }
}

json endo_to_json(const TruncEndo &e) {
  json images = json::object();
  const auto &basis = e.context()->basis;
  for (std::size_t i = 0; i < basis->size(); ++i)
    images[basis->name(i)] = format_angle(e.image(i));
  return {{"residue", integer_json(e.residue())}, {"images", images}};
}

TruncEndo endo_from_json(const json &j, const ContextPtr &ctx) {
  try {
    const auto &basis = ctx->basis;
    const mpz_class residue = integer_from(j.at("residue"), "residue");
    // Symbols without an explicit image follow the power map residue^x.
    std::vector<Angle> images = TruncEndo::power(residue, ctx).images();
    if (j.contains("images")) {
      for (const auto &[name, value] : j.at("images").items()) {
        auto idx = basis->index_of(name);
        if (!idx)
          throw ConfigError("image for undeclared symbol '" + name + "'");
        images[*idx] = parse_angle(value.get<std::string>(), basis);
      }
    }
    return TruncEndo(ctx, residue, std::move(images));
  } catch (const json::exception &e) {
    throw ConfigError(std::string("endomorphism: ") + e.what());
  }
}

json element_to_json(const HmElement &phi) {
  json comps = json::array();
  for (const auto &c : phi.comps())
    comps.push_back(endo_to_json(c));
  return {{"context", context_to_json(*phi.context())}, {"m", phi.m()}, {"comps", comps}};
}

HmElement element_from_json(const json &j, const ContextPtr &fallback) {
  try {
    ContextPtr ctx = j.contains("context") ? context_from_json(j.at("context")) : fallback;
    if (fallback && same_context(ctx, fallback))
      ctx = fallback;
    std::vector<TruncEndo> comps;
    for (const auto &c : j.at("comps"))
      comps.push_back(endo_from_json(c, ctx));
    const int m = j.contains("m") ? j.at("m").get<int>() : static_cast<int>(comps.size()) - 1;
    return HmElement::validate(std::move(comps), ctx, m);
  } catch (const json::exception &e) {
    throw ConfigError(std::string("element: ") + e.what());
  }
}

json point_to_json(const TorusPoint &p) {
  json out = json::array();
  for (const auto &a : p.coords)
    out.push_back(format_angle(a));
  return out;
}

TorusPoint point_from_json(const json &j, const BasisPtr &basis) {
  if (j.is_string())
    return parse_point(j.get<std::string>(), basis);
  TorusPoint p;
  for (const auto &a : j)
    p.coords.push_back(parse_angle(a.get<std::string>(), basis));
  return p;
}

json complex_to_json(const std::complex<double> &z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json report_to_json(const WeylReport &r) {
  json shifts = json::array();
  json averages = json::array();
  for (std::size_t i = 0; i < r.shifts.size(); ++i) {
    shifts.push_back(integer_json(r.shifts[i]));
    json a = complex_to_json(r.averages[i]);
    a["k"] = integer_json(r.shifts[i]);
    a["abs"] = std::abs(r.averages[i]);
    averages.push_back(a);
  }
  return {{"N", r.N},
          {"shifts", shifts},
          {"averages", averages},
          {"max_abs", r.max_abs},
          {"target", complex_to_json(r.target)},
          {"tol", r.tol},
          {"pass", r.pass}};
}

std::string report_to_csv(const WeylReport &r) {
  std::string out = "N,k,re,im,abs\n";
  char buf[128];
  for (std::size_t i = 0; i < r.shifts.size(); ++i) {
    const auto &a = r.averages[i];
    std::snprintf(buf, sizeof buf, ",%.17g,%.17g,%.17g\n", a.real(), a.imag(), std::abs(a));
    out += std::to_string(r.N) + "," + r.shifts[i].get_str() + buf;
  }
  return out;
}

json witness_to_json(const WitnessReport &r) {
  return {{"valid", r.valid},
          {"cosets_distinct", r.cosets_distinct},
          {"enumerated", r.enumerated},
          {"coset_constant", r.coset_constant},
          {"agreeing", r.agreeing},
          {"disagreements", r.disagreements},
          {"control_not_constant", r.control_not_constant},
          {"control_separates", r.control_separates},
          {"zero_witness_is_identity", r.zero_witness_is_identity},
          {"pass", r.pass}};
}

} // namespace skewtorus
