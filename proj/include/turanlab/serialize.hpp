#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "turanlab/checkers.hpp"
#include "turanlab/search.hpp"
#include "turanlab/stability.hpp"

// JSON views of the library's reports. Field order is fixed (ordered_json) so
// identical inputs give byte-identical output; wall-clock data is left out.

namespace turanlab {

using Json = nlohmann::ordered_json;

template <std::size_t W>
Json to_json(const BasicVertexSet<W>& s) {
  Json out = Json::array();
  s.for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

template <std::size_t W>
Json to_json(const BasicHypergraph<W>& h) {
  Json edges = Json::array();
  for (const auto& e : h.edges()) edges.push_back(to_json(e));
  return Json{{"n", h.n()}, {"r", h.r()}, {"edge_count", h.size()}, {"edges", std::move(edges)}};
}

template <std::size_t W>
Json to_json(const BasicPartition<W>& p) {
  Json out = Json::array();
  for (const auto& b : p.blocks) out.push_back(to_json(b));
  return out;
}

inline Json rational_json(const Rational& q) {
  return Json{{"value", q.convert_to<double>()}, {"exact", q.str()}};
}

inline Json to_json(const CertificateReport& rep) {
  Json qs = Json::array();
  for (const auto& q : rep.quantities) {
    Json j{{"name", q.name}, {"value", q.value}};
    if (!q.exact.empty()) j["exact"] = q.exact;
    qs.push_back(std::move(j));
  }
  Json cs = Json::array();
  for (const auto& c : rep.checks) {
    Json j{{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}};
    if (!c.lhs_exact.empty()) j["lhs_exact"] = c.lhs_exact;
    if (!c.rhs_exact.empty()) j["rhs_exact"] = c.rhs_exact;
    j["holds"] = c.holds;
    cs.push_back(std::move(j));
  }
  Json out{{"certificate", rep.name}, {"holds", rep.holds}, {"vacuous", rep.vacuous}};
  out["quantities"] = std::move(qs);
  out["checks"] = std::move(cs);
  out["witness"] = rep.witness ? Json(*rep.witness) : Json(nullptr);
  return out;
}

inline Json to_json(const ExtremalRecord& rec, bool include_witnesses = true) {
  Json out{{"n", rec.n},
           {"r", rec.r},
           {"predicate", rec.predicate},
           {"complete", rec.complete},
           {"value", rec.value},
           {"extremal_classes", rec.extremal_classes},
           {"witness_cap_hit", rec.witness_cap_hit},
           {"nodes_explored", rec.nodes_explored},
           {"initial_upper_bound", rec.initial_upper_bound}};
  if (include_witnesses) {
    Json ws = Json::array();
    for (const auto& w : rec.witnesses) ws.push_back(to_json(w));
    out["witnesses"] = std::move(ws);
  }
  return out;
}

template <std::size_t W>
Json to_json(const BasicStabilityReport<W>& rep) {
  Json inv = Json::array();
  for (const auto& c : rep.invariants) inv.push_back(Json{{"name", c.name}, {"holds", c.holds}});
  Json out{{"method", rep.method},
           {"n", rep.n},
           {"r", rep.r},
           {"ell", rep.ell},
           {"edges", rep.edges},
           {"target", rep.target},
           {"epsilon", rational_json(rep.epsilon)},
           {"delta", rational_json(rep.delta)},
           {"delta_exponent", rep.delta_exponent},
           {"bad_edges", rep.bad_edges},
           {"partition", to_json(rep.partition)},
           {"exact_cut", rep.exact_cut},
           {"crossing", rep.crossing}};
  if (rep.method == "generalized") {
    out["removed_edges"] = rep.removed_edges;
    out["clique_count"] = rep.clique_count;
  }
  if (rep.witness_chain) {
    const auto& w = *rep.witness_chain;
    out["degenerate"] = rep.degenerate;
    out["witness_chain"] = Json{{"T", to_json(w.t)},
                                {"degree_T", w.degree_t},
                                {"N_T", to_json(w.n_t)},
                                {"score", rational_json(w.score)},
                                {"pair", Json::array({w.pair.first, w.pair.second})},
                                {"link_size", w.link_size},
                                {"pair_ratio", rational_json(w.pair_ratio)},
                                {"edge", Json::array({w.x, w.y})},
                                {"V2", to_json(w.v2)},
                                {"V3", to_json(w.v3)}};
  }
  out["invariants"] = std::move(inv);
  return out;
}

template <std::size_t W>
Json to_json(const BipartiteDistanceReport<W>& rep) {
  auto edge_list = [](const std::vector<BasicVertexSet<W>>& es) {
    Json out = Json::array();
    for (const auto& e : es) out.push_back(to_json(e));
    return out;
  };
  Json ineq = Json::array();
  for (const auto& c : rep.inequalities)
    ineq.push_back(Json{{"name", c.name}, {"lhs", c.lhs_exact}, {"rhs", c.rhs_exact}, {"holds", c.holds}});
  return Json{{"n", rep.n},
              {"edges", rep.edges},
              {"partition", to_json(rep.partition)},
              {"exact_cut", rep.exact_cut},
              {"bad_edges", rep.bad.size()},
              {"bad", edge_list(rep.bad)},
              {"bad_in_V1", rep.bad1.size()},
              {"missing", rep.missing},
              {"max_internal_degree", rep.max_internal_degree},
              {"max_degree_vertex", rep.delta_vertex},
              {"case", rep.case_taken},
              {"matching", edge_list(rep.matching)},
              {"epsilon", rational_json(rep.epsilon)},
              {"delta", rational_json(rep.delta)},
              {"case1_readings",
               Json{{"|M| >= Delta^2", rep.squared_case1_reading}, {"|M| >= (Delta n)^2", rep.literal_case1_reading}}},
              {"inequalities", std::move(ineq)},
              {"all_hold", rep.all_hold()}};
}

template <std::size_t W>
Json to_json(const MaxDegreeSumEdge<W>& p) {
  return Json{{"x", p.x},
              {"y", p.y},
              {"N_x", to_json(p.nx)},
              {"N_y", to_json(p.ny)},
              {"degree_sum", p.degree_sum},
              {"edges", p.edges},
              {"disjoint", p.disjoint},
              {"averaging_bound", p.averaging_bound}};
}

}  // namespace turanlab
