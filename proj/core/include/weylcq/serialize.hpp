#pragma once

#include <json.hpp>

#include "weylcq/alcove.hpp"
#include "weylcq/charquasi.hpp"
#include "weylcq/quasipoly.hpp"
#include "weylcq/rootsystem.hpp"

namespace weylcq {

/* Rationals serialize as JSON integers when they are integral and fit a
 * double-safe range, as "num/den" strings otherwise. */
nlohmann::json to_json(const Rat& r);

/* {"num": [...], "den": [...], "string": "t^2 - 6*t + 11"} */
nlohmann::json to_json(const Poly& p, const std::string& var = "t");

/* {"period": N, "constituents": [...], "validFrom": q0, "gcdProperty": b} */
nlohmann::json to_json(const QuasiPoly& f, const std::string& var = "t");

nlohmann::json to_json(const RootSystem& rs);

nlohmann::json to_json(const RootSystem& rs, const AlcoveKey& key);

/* {"type": ..., "interval": [a,b], "period": N, "constituents": [...],
 *  "charPoly": ..., "route": ..., "agreement": ...} */
nlohmann::json to_json(const RootSystem& rs, const CharQuasi& cq);

}  // namespace weylcq
