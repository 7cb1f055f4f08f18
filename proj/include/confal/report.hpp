#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

#include "json.hpp"

#include "confal/growth.hpp"
#include "confal/structure.hpp"

namespace confal {

using json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "confal/1";

/// 64-bit FNV-1a of the input text, as "fnv1a64:<hex>".
inline std::string input_digest(std::string_view text)
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

inline json report_envelope(const std::string& command, std::string_view input)
{
  json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  j["input_digest"] = input_digest(input);
  j["results"] = json::array();
  return j;
}

inline json to_json(const CheckReport& r)
{
  json j{{"pass", r.pass}, {"checked", r.checked}};
  if (!r.pass) j["witness"] = r.witness;
  return j;
}

template <ConformalModel M>
json locality_json(const M& m)
{
  json rows = json::array();
  for (const auto& row : locality_matrix(m)) {
    json r = json::array();
    for (const auto& n : row) r.push_back(n.is_all_zero() ? json("AllZero") : json(n.value()));
    rows.push_back(r);
  }
  return json{{"generators", m.generator_names()}, {"matrix", rows}, {"order_bound", generator_order_bound(m)}};
}

template <ConformalModel M>
json identity_json(const M& m, const typename M::element_type& e, const IdentityReport& r)
{
  return json{{"element", m.to_string(e)},
              {"pass", r.pass},
              {"left_unit", r.left_unit},
              {"self_locality", r.self_locality.to_string()},
              {"self_locality_is_one", r.self_locality_is_one},
              {"failures", r.failures}};
}

inline json growth_json(const GrowthReport& g)
{
  json rows = json::array();
  for (const auto& r : g.rows) {
    json row{{"r", r.r}, {"gamma", r.gamma}};
    row["delta1"] = r.delta1 ? json(*r.delta1) : json(nullptr);
    row["delta2"] = r.delta2 ? json(*r.delta2) : json(nullptr);
    if (r.coeff_dim) {
      row["coeff_dim"] = *r.coeff_dim;
      row["bound_rhs"] = *r.bound_rhs;
      row["bound_ok"] = *r.bound_ok;
      row["literal_rhs"] = *r.literal_rhs;
      row["literal_ok"] = *r.literal_ok;
    }
    rows.push_back(row);
  }
  json j{{"order_bound", g.order_bound}, {"rows", rows}, {"verdict", g.verdict}};
  j["degree"] = g.degree ? json(*g.degree) : json(nullptr);
  j["loglog_slope"] = g.loglog_slope;
  if (!g.rows.empty() && g.rows.front().coeff_dim) {
    j["window"] = {g.window_minus, g.window_plus};
    j["bound_holds"] = g.bound_holds;
  }
  return j;
}

inline std::string growth_csv(const GrowthReport& g)
{
  auto opt = [](const auto& o) { return o ? std::to_string(*o) : std::string(); };
  std::string out = "r,gamma,delta1,delta2,coeff_dim,bound_rhs,bound_ok\n";
  for (const auto& r : g.rows)
    out += std::to_string(r.r) + "," + std::to_string(r.gamma) + "," + opt(r.delta1) + "," + opt(r.delta2) + "," +
           opt(r.coeff_dim) + "," + opt(r.bound_rhs) + "," +
           (r.bound_ok ? std::string(*r.bound_ok ? "true" : "false") : std::string()) + "\n";
  return out;
}

template <ConformalModel M>
json recognition_json(const M& m, const RecognitionResult<M>& r, const CheckReport& roundtrip)
{
  json gens = json::array();
  for (std::size_t s = 0; s < r.normalized.size(); ++s)
    gens.push_back({{"name", r.normalized_names[s]}, {"element", m.to_string(r.normalized[s])}});
  json closure = json::array();
  for (std::size_t i = 0; i < r.closure.size(); ++i) {
    json c{{"label", r.closure_labels[i]}, {"phi", coeff_to_string(m, r.closure_images[i])},
           {"delta", coeff_to_string(m, r.delta_images[i])}};
    c["delta_coords"] = r.delta[i] ? json(r.coords_to_string(*r.delta[i])) : json(nullptr);
    closure.push_back(c);
  }
  json table = json::array();
  for (const auto& [ij, v] : r.table)
    table.push_back({{"left", r.closure_labels[static_cast<std::size_t>(ij.first)]},
                     {"right", r.closure_labels[static_cast<std::size_t>(ij.second)]},
                     {"product", r.coords_to_string(v)}});
  return json{{"identity", m.to_string(r.identity)},
              {"normalized_generators", gens},
              {"closure", closure},
              {"table", table},
              {"fitted_degree", r.fitted_degree},
              {"locality_with_identity", r.locality_with_identity},
              {"fit_ok", r.fit_ok},
              {"leibniz", to_json(r.leibniz)},
              {"delta_powers", to_json(r.delta_powers)},
              {"roundtrip", to_json(roundtrip)},
              {"log", r.log}};
}

} // namespace confal
