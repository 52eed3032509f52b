#pragma once

#include <json.hpp>

#include "fibchar/laurent.hpp"
#include "fibchar/report.hpp"

namespace fibchar {

// Report objects carry the IdentityReport fields verbatim; series serialize
// as arrays of [zExp, qExp, coeffString] with decimal-string coefficients,
// sorted by (qExp, zExp). withTimings = false pins elapsedMillis to 0 so
// identical inputs yield byte-identical output.
nlohmann::json report_to_json(const IdentityReport& rep, bool withTimings = false);
IdentityReport report_from_json(const nlohmann::json& j);

nlohmann::json poly_to_json(const LaurentPoly& p);
nlohmann::json series_to_json(const QSeries& s);

}  // namespace fibchar
