#pragma once

#include "skewtorus/ellis.hpp"
#include "skewtorus/factor_lab.hpp"
#include "skewtorus/weyl.hpp"

#include <json.hpp>

#include <string>

namespace skewtorus {

using nlohmann::json;

json context_to_json(const TruncationContext &ctx);
/// {"level": L, "basis": [{"name", "value"}, ...]}
ContextPtr context_from_json(const json &j);

json endo_to_json(const TruncEndo &e);
TruncEndo endo_from_json(const json &j, const ContextPtr &ctx);

/// {"context": {...}, "m": m, "comps": [{"residue": r, "images": {"b1": "..."}}, ...]}
json element_to_json(const HmElement &phi);
/// Uses the embedded context when present, `fallback` otherwise. The result
/// is validated.
HmElement element_from_json(const json &j, const ContextPtr &fallback);

json point_to_json(const TorusPoint &p);
TorusPoint point_from_json(const json &j, const BasisPtr &basis);

json complex_to_json(const std::complex<double> &z);
json report_to_json(const WeylReport &r);
/// Header "N,k,re,im,abs" then one row per shift.
std::string report_to_csv(const WeylReport &r);

json witness_to_json(const WitnessReport &r);

} // namespace skewtorus
