// Copyright 2026 The sextic-index Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sextic_cli/report_json.hpp"

#include <string>

namespace sextic::cli {

namespace {

Json point(const LatticePoint& p) { return Json::array({p.x, p.y}); }

Json quadruple(const ValuationQuadruple& q) {
  Json j = Json::object();
  j["u"] = to_json(q.u);
  j["v"] = to_json(q.v);
  j["mu"] = to_json(q.mu);
  j["tau"] = to_json(q.tau);
  return j;
}

Json side_json(const SideReport& s) {
  Json j = Json::object();
  j["start"] = point(s.side.start);
  j["end"] = point(s.side.end);
  j["slope"] = s.side.slope_string();
  j["degree"] = s.side.degree();
  j["residual"] = s.residual.to_string();
  Json factors = Json::array();
  for (const auto& f : s.factors) {
    factors.push_back({{"factor", f.factor.to_string()}, {"multiplicity", f.multiplicity}});
  }
  j["factors"] = std::move(factors);
  j["separable"] = s.separable;
  return j;
}

}  // namespace

Json to_json(const Valuation& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

Json to_json(const SplittingType& s) {
  Json entries = Json::array();
  for (const auto& e : s.entries) entries.push_back(Json::array({e.e, e.f}));
  return entries;
}

Json to_json(const PhiReport& r) {
  Json j = Json::object();
  j["factor"] = r.factor.to_string();
  j["multiplicity"] = r.multiplicity;
  j["phi"] = r.phi.to_string();
  Json shifts = Json::array();
  for (const auto& s : r.shift_history) shifts.push_back(s.get_str());
  j["shift_history"] = std::move(shifts);
  Json vals = Json::array();
  for (const auto& v : r.valuations) vals.push_back(to_json(v));
  j["valuations"] = std::move(vals);
  j["vertices"] = r.polygon.vertex_string();
  Json sides = Json::array();
  for (const auto& s : r.sides) sides.push_back(side_json(s));
  j["sides"] = std::move(sides);
  j["ind_phi"] = r.index;
  j["regular"] = r.regular;
  return j;
}

Json to_json(const OreOutcome& o) {
  Json j = Json::object();
  j["determined"] = o.splitting.determined;
  j["entries"] = o.splitting.determined ? to_json(o.splitting) : Json::array();
  Json cands = Json::array();
  for (const auto& c : o.candidates) cands.push_back(to_json(c));
  j["candidates"] = std::move(cands);
  j["index_lower_bound"] = o.index_lower_bound;
  j["regular"] = o.regular;
  return j;
}

Json to_json(const oracle::OracleVerdict& v) {
  Json j = Json::object();
  j["context"] = v.context;
  j["fast_value"] = v.fast_value;
  j["oracle_value"] = v.oracle_value;
  j["agrees"] = v.agrees;
  return j;
}

Json to_json(const IndexReport& report, bool explain) {
  Json j = Json::object();
  // Decimal strings: inputs are arbitrary precision.
  j["input"] = {{"a", report.input.a().get_str()},
                {"b", report.input.b().get_str()},
                {"polynomial", report.input.polynomial().to_string()}};
  j["nu2"] = report.nu2;
  j["nu3"] = report.nu3;
  j["nu5"] = report.nu5;
  j["index"] = report.index;
  Json rules = Json::array();
  for (const auto& r : report.matched_rules) {
    rules.push_back({{"theorem", r.theorem}, {"case", r.case_id}, {"label", r.label()}});
  }
  j["matched_rules"] = std::move(rules);
  Json split = Json::object();
  for (const auto& [p, o] : report.splitting_at) split[std::to_string(p)] = to_json(o);
  j["splitting_at"] = std::move(split);
  j["maximal_order_is_Zalpha"] = report.maximal_order_is_Zalpha;
  j["monogenic_obstruction"] = report.monogenic_obstruction;
  if (!explain) return j;

  Json ex = Json::object();
  ex["discriminant"] = discriminant(report.input).get_str();
  ex["maximality_conditions_violated"] = report.theorem1.violated;
  ex["valuations_at_2"] = quadruple(report.at2);
  ex["valuations_at_3"] = quadruple(report.at3);
  Json polys = Json::object();
  for (const auto& [p, o] : report.splitting_at) {
    Json list = Json::array();
    for (const auto& r : o.diagnostics) list.push_back(to_json(r));
    polys[std::to_string(p)] = std::move(list);
  }
  ex["polygons"] = std::move(polys);
  j["explain"] = std::move(ex);
  return j;
}

}  // namespace sextic::cli
