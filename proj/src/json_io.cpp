#include "fibchar/json_io.hpp"

#include <algorithm>
#include <vector>

namespace fibchar {

using nlohmann::json;

json report_to_json(const IdentityReport& rep, bool withTimings) {
  json j;
  j["identity"] = rep.id;
  json params = json::object();
  for (const auto& [k, v] : rep.params) params[k] = v;
  j["params"] = params;
  j["order"] = rep.order;
  j["zmin"] = rep.zMin;
  j["zmax"] = rep.zMax;
  j["match"] = rep.match;
  if (rep.firstMismatch.has_value()) {
    const auto& mm = *rep.firstMismatch;
    j["firstMismatch"] = {{"z", mm.zExp},
                          {"q", mm.qExp},
                          {"lhs", std::to_string(mm.lhs)},
                          {"rhs", std::to_string(mm.rhs)}};
  } else {
    j["firstMismatch"] = nullptr;
  }
  j["elapsedMillis"] = withTimings ? rep.elapsedMillis : 0;
  return j;
}

IdentityReport report_from_json(const json& j) {
  IdentityReport rep;
  rep.id = j.at("identity").get<std::string>();
  for (const auto& [k, v] : j.at("params").items())
    rep.params.push_back({k, v.get<long long>()});
  // JSON objects iterate alphabetically; keep the canonical order stable.
  std::sort(rep.params.begin(), rep.params.end());
  rep.order = j.at("order").get<int>();
  rep.zMin = j.at("zmin").get<int>();
  rep.zMax = j.at("zmax").get<int>();
  rep.match = j.at("match").get<bool>();
  if (!j.at("firstMismatch").is_null()) {
    const auto& mm = j.at("firstMismatch");
    rep.firstMismatch =
        Mismatch{mm.at("z").get<int>(), mm.at("q").get<int>(),
                 std::stoll(mm.at("lhs").get<std::string>()),
                 std::stoll(mm.at("rhs").get<std::string>())};
  }
  rep.elapsedMillis = j.at("elapsedMillis").get<long long>();
  return rep;
}

namespace {

json terms_sorted_by_q_then_z(
    const std::vector<std::pair<std::pair<int, int>, long long>>& terms) {
  auto sorted = terms;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return std::pair{a.first.second, a.first.first} <
           std::pair{b.first.second, b.first.first};
  });
  json arr = json::array();
  for (const auto& [key, c] : sorted)
    arr.push_back({key.first, key.second, std::to_string(c)});
  return arr;
}

}  // namespace

json poly_to_json(const LaurentPoly& p) {
  std::vector<std::pair<std::pair<int, int>, long long>> terms(p.terms().begin(),
                                                               p.terms().end());
  json j;
  j["terms"] = terms_sorted_by_q_then_z(terms);
  return j;
}

json series_to_json(const QSeries& s) {
  std::vector<std::pair<std::pair<int, int>, long long>> terms(s.terms().begin(),
                                                               s.terms().end());
  json j;
  j["order"] = s.order();
  j["zmin"] = s.z_min();
  j["zmax"] = s.z_max();
  j["terms"] = terms_sorted_by_q_then_z(terms);
  return j;
}

}  // namespace fibchar
