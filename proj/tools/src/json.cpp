#include <map>

#include "nsmm/cli.hpp"

namespace nsmm::cli {

using nlohmann::json;

json to_json(const DiffOpSystem& sys) {
  json out;
  out["unknowns"] = json::array();
  for (const auto& q : sys.unknowns) out["unknowns"].push_back(q.name());
  out["equations"] = json::array();
  for (std::size_t r = 0; r < sys.equations.size(); ++r) {
    std::map<Component, json> by_unknown;
    for (const auto& [t, f] : sys.equations[r]) {
      json op{{"d_z1", t.i},
              {"d_z2", t.j},
              {"numerator", f.numerator().to_string("z1", "z2")},
              {"denominator", f.pole_order() ? "(z1 - z2)^" + std::to_string(f.pole_order()) : "1"}};
      by_unknown[t.q].push_back(std::move(op));
    }
    json eq = json::array();
    for (auto& [q, ops] : by_unknown) eq.push_back({{"unknown", q.name()}, {"operator", std::move(ops)}});
    out["equations"].push_back({{"row", sys.rows[r].name()}, {"terms", std::move(eq)}});
  }
  return out;
}

json to_json(const OdeSystem& sys) {
  const OdeSystem d = to_derivative_form(sys);
  json out{{"variable", "z"}, {"unknowns", d.unknowns}, {"equations", json::array()}};
  for (const auto& eq : d.equations) {
    std::map<std::size_t, json> by_unknown;
    for (auto it = eq.rbegin(); it != eq.rend(); ++it)
      by_unknown[it->first.first].push_back({{"order", it->first.second},
                                             {"numerator", it->second.num().to_string("z")},
                                             {"denominator", it->second.den().to_string("z")}});
    json row = json::array();
    for (auto& [u, ops] : by_unknown) row.push_back({{"unknown", d.unknowns[u]}, {"operator", std::move(ops)}});
    out["equations"].push_back(std::move(row));
  }
  return out;
}

json to_json(const RegularSingularSystem& sys) {
  json out{{"variable", "z"}, {"size", sys.size()}, {"labels", sys.labels}, {"entries", json::array()}};
  for (std::size_t i = 0; i < sys.size(); ++i)
    for (std::size_t j = 0; j < sys.size(); ++j)
      if (!sys.a[i][j].is_zero())
        out["entries"].push_back({{"row", i},
                                  {"column", j},
                                  {"numerator", sys.a[i][j].num().to_string("z")},
                                  {"denominator", sys.a[i][j].den().to_string("z")}});
  return out;
}

json to_json(const SeriesSolution& sol) {
  json coeffs = json::array();
  for (const auto& c : sol.coefficients) {
    json v = json::array();
    for (const auto& x : c) v.push_back(to_string(x));
    coeffs.push_back(std::move(v));
  }
  return {{"exponent", to_string(sol.exponent)}, {"coefficients", std::move(coeffs)}, {"order", sol.order()}};
}

json to_json(const DiffEntry& e) {
  json out{{"equation", e.equation},
           {"term", e.term},
           {"reference", e.reference.to_string()},
           {"derived", e.derived.to_string()},
           {"match", e.match}};
  out["ratio"] = e.ratio ? json(to_string(*e.ratio)) : json(nullptr);
  return out;
}

json to_json(const FusionRow& row) {
  return {{"h1", to_string(row.h1)},
          {"h2", to_string(row.h2)},
          {"h3", to_string(row.h3)},
          {"even", row.count.even},
          {"odd", row.count.odd},
          {"total", row.count.total}};
}

}  // namespace nsmm::cli
