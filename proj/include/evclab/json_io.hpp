// Copyright 2026 The evclab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "evclab/contraction.hpp"
#include "evclab/elementary.hpp"
#include "evclab/game/certificates.hpp"
#include "evclab/game/simulate.hpp"
#include "evclab/graph.hpp"
#include "evclab/matching.hpp"
#include "evclab/nevc.hpp"

namespace evclab {

inline Json to_json(const Edge& e) { return Json::array({e.u, e.v}); }

inline Json to_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(to_json(e));
  return out;
}

inline Json to_json(const Graph& g) {
  Json out{{"n", g.order()}, {"edges", to_json(g.edges())}};
  bool custom = false;
  for (Vertex v = 0; v < g.order(); ++v) custom = custom || g.label(v) != std::to_string(v);
  if (custom) out["labels"] = g.labels();
  return out;
}

inline Json to_json(const BipartiteGraph& g) {
  return {{"A", g.part_a()}, {"B", g.part_b()}};
}

inline Json to_json(const Matching& m) { return to_json(m.edges()); }

inline Json to_json(const SpartanVerdict& v) {
  Json out{{"spartan", v.is_spartan}, {"mvc", v.mvc}};
  out["evc"] = v.evc ? Json(*v.evc) : Json(nullptr);
  out["evc_bounds"] = {v.evc_lower, v.evc_upper};
  Json w{{"kind", to_string(v.obstruction)}};
  if (v.edge) w["edge"] = to_json(*v.edge);
  if (v.obstruction == Obstruction::NoPerfectMatching) w["exposed"] = v.exposed;
  if (v.component >= 0) w["component"] = v.components.components[v.component].vertices;
  out["witness"] = w;
  Json comps = Json::array();
  for (const auto& c : v.components.components) {
    Json cj{{"vertices", c.vertices},
            {"perfect_matching", c.has_perfect_matching},
            {"elementary", c.verdict.elementary}};
    if (c.verdict.non_allowed) cj["non_allowed"] = to_json(*c.verdict.non_allowed);
    comps.push_back(cj);
  }
  out["components"] = comps;
  return out;
}

inline Json to_json(const NevcVerdict& v) {
  return {{"mvc", v.mvc},
          {"nevc", v.nevc},
          {"degree_one", v.degree_one},
          {"blocking_leaves", v.blocking_leaves},
          {"blocked_components", v.blocked_components}};
}

// Steps with labels in ids of the graph the trace was built from; `original`
// optionally maps those ids further (e.g. component -> whole graph).
inline Json to_json(const ContractionTrace& t, const std::vector<Vertex>* original = nullptr) {
  auto lift = [&](const std::vector<Vertex>& vs) {
    std::vector<Vertex> out;
    for (Vertex v : vs) out.push_back(original ? (*original)[v] : v);
    std::sort(out.begin(), out.end());
    return out;
  };
  auto labels_json = [&](const LabelMap& labels) {
    Json out = Json::array();
    for (const auto& l : labels) out.push_back(lift(l));
    return out;
  };
  Json steps = Json::array();
  LabelMap before_labels = identity_labels(t.original->order());
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const ContractionStep& s = t.steps[i];
    Json pairs = Json::array();
    std::vector<Vertex> merged;
    for (const auto& p : s.subset.pairs) {
      pairs.push_back({p.a, p.b});
      merged.insert(merged.end(), before_labels[p.a].begin(), before_labels[p.a].end());
      merged.insert(merged.end(), before_labels[p.b].begin(), before_labels[p.b].end());
    }
    steps.push_back({{"step", i + 1},
                     {"subset", pairs},
                     {"merged", lift(merged)},
                     {"alpha", s.alpha},
                     {"beta", s.beta},
                     {"graph", to_json(s.after->graph())},
                     {"matching", to_json(s.after_matching)},
                     {"labels", labels_json(s.labels)}});
    before_labels = s.labels;
  }
  Json fin{{"graph", to_json(t.final_graph->graph())},
           {"matching", to_json(t.final_matching)},
           {"labels", labels_json(t.final_labels)},
           {"single_edge", t.final_is_edge()},
           {"degree_one", t.final_degree_one()}};
  Json orig{{"graph", to_json(t.original->graph())}, {"matching", to_json(t.original_matching)}};
  if (original) orig["vertices"] = *original;
  return {{"original", orig}, {"steps", steps}, {"final", fin}};
}

inline Json to_json(const AttackerCertificate& c) {
  Json rules = Json::array();
  rules.push_back({{"when", "some edge is uncovered"}, {"attack", "least uncovered edge"}});
  switch (c.kind) {
    case AttackCase::NoPerfectMatching:
      rules.push_back({{"when", "otherwise"}, {"attack", to_json(Edge(c.exposed, c.exposed_neighbor))}});
      break;
    case AttackCase::DegreeOne:
      rules.push_back({{"when", "guard on " + std::to_string(c.leaf)},
                       {"attack", to_json(Edge(c.other, c.stem))}});
      rules.push_back({{"when", "otherwise"}, {"attack", to_json(Edge(c.leaf, c.stem))}});
      break;
    case AttackCase::Contraction:
      rules.push_back({{"when", "guards on all of partner label"},
                       {"attack", to_json(c.matched_edges.front())}});
      rules.push_back({{"when", "guards on all of leaf label"}, {"attack", to_json(c.bridges.front())}});
      rules.push_back({{"when", "otherwise"}, {"attack", to_json(c.matched_edges.front())}});
      break;
  }
  Json out{{"kind", "attacker"},
           {"case", to_string(c.kind)},
           {"component", c.component},
           {"max_attacks", c.max_attacks()},
           {"rules", rules}};
  if (c.kind == AttackCase::NoPerfectMatching) out["exposed"] = c.exposed;
  if (c.kind == AttackCase::DegreeOne) {
    out["leaf"] = c.leaf;
    out["stem"] = c.stem;
    out["other"] = c.other;
  }
  if (c.kind == AttackCase::Contraction) {
    out["leaf_label"] = c.leaf_label;
    out["partner_label"] = c.partner_label;
    out["bridges"] = to_json(c.bridges);
    if (c.trace) out["trace"] = to_json(*c.trace, &c.trace_original);
  }
  return out;
}

inline Json to_json(const ElementaryDefender& d) {
  Json comps = Json::array();
  for (const auto& c : d.components()) {
    Json responses = Json::array();
    for (const auto& [e, m] : c.matching) responses.push_back({{"edge", to_json(e)}, {"matching", to_json(m)}});
    comps.push_back({{"vertices", c.vertices}, {"A", c.side_a}, {"B", c.side_b}, {"responses", responses}});
  }
  return {{"kind", "defender"}, {"policy", "elementary"}, {"guards", d.guards()}, {"components", comps}};
}

inline Json to_json(const std::vector<PolicyEntry>& table) {
  Json out = Json::array();
  for (const auto& p : table)
    out.push_back({{"from", p.from.positions()}, {"edge", to_json(p.attacked)}, {"to", p.to.positions()}});
  return out;
}

}  // namespace evclab
