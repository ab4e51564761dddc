#pragma once

#include "shalika/orbital.hpp"
#include "shalika/qtdeform.hpp"

#include <json.hpp>

namespace shalika {

using nlohmann::json;

// Malformed input raises ParseError naming the offending field.
json to_json(const QPoly& p);
QPoly qpoly_from_json(const json& j);

json to_json(const SymFun& f);
SymFun symfun_from_json(const json& j);

json to_json(const BranchSpec& b);
BranchSpec branch_from_json(const json& j);
json to_json(const GammaSpec& g);
GammaSpec gamma_from_json(const json& j);

json to_json(const OrbitalReport& r);
OrbitalReport report_from_json(const json& j);

json to_json(const QTRatFun& f);
QTRatFun qtratfun_from_json(const json& j);
json to_json(const QTCoeffMap& f);
QTCoeffMap qtmap_from_json(const json& j);

}  // namespace shalika
