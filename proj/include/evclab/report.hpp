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

#include <sstream>
#include <string>
#include <vector>

#include "evclab/contraction.hpp"
#include "evclab/elementary.hpp"
#include "evclab/game/solver.hpp"
#include "evclab/json_io.hpp"
#include "evclab/nevc.hpp"
#include "evclab/vertex_cover.hpp"

namespace evclab {

struct AnalyzeOptions {
  bool require_bipartite = false;  // throw NotBipartite instead of reporting
  bool exact = false;              // refine non-Spartan evc with the exact solver
  std::uint64_t budget = default_budget();
};

struct Analysis {
  Json json;
  std::vector<std::string> lines;

  std::string text() const {
    std::string out;
    for (const auto& l : lines) out += l + '\n';
    return out;
  }
};

namespace detail {

inline std::string set_string(const std::vector<Vertex>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s + "}";
}

}  // namespace detail

inline Analysis analyze(const Graph& g, const AnalyzeOptions& opt = {}) {
  Analysis a;
  a.json["graph"] = to_json(g);
  a.lines.push_back("graph: n = " + std::to_string(g.order()) + ", m = " + std::to_string(g.size()));
  auto bip = bipartition(g);
  if (auto* walk = std::get_if<OddWalk>(&bip)) {
    if (opt.require_bipartite) throw NotBipartite(*walk);
    a.json["bipartite"] = false;
    a.json["odd_walk"] = walk->walk;
    a.lines.push_back("bipartite: no, odd closed walk " + detail::set_string(walk->walk));
    const int mvc = static_cast<int>(min_vertex_cover_exhaustive(g).size());
    a.json["mvc"] = mvc;
    a.lines.push_back("Spartan: unknown (not bipartite), mvc = " + std::to_string(mvc));
    const NevcVerdict nv = nevc_general_small(g, 64);
    a.json["nevc"] = to_json(nv);
    a.lines.push_back("nevc = " + std::to_string(nv.nevc) +
                      (nv.blocking_leaves.empty() ? "" : ", blocking leaves " + detail::set_string(nv.blocking_leaves)));
    return a;
  }
  const BipartiteGraph& bg = std::get<BipartiteGraph>(bip);
  a.json["bipartite"] = true;
  a.json["bipartition"] = to_json(bg);
  a.lines.push_back("bipartition: A = " + detail::set_string(bg.part_a()) +
                    ", B = " + detail::set_string(bg.part_b()));

  ExactEvc exact;
  if (opt.exact) exact = [&](const Graph& h) { return evc_exact(h, Variant::OnePerVertex, opt.budget); };
  const SpartanVerdict sv = spartan_verdict(bg, exact);
  const NevcVerdict nv = nevc_bipartite(bg);
  a.json["spartan"] = to_json(sv);
  a.json["nevc"] = to_json(nv);
  const std::string mvc = std::to_string(sv.mvc);
  const std::string nevc = std::to_string(nv.nevc);
  if (sv.is_spartan) {
    a.lines.push_back("Spartan: yes, evc = mvc = " + mvc);
  } else {
    std::string why;
    if (sv.obstruction == Obstruction::NoPerfectMatching) {
      why = "no perfect matching, vertex " + std::to_string(sv.exposed) + " exposed";
    } else {
      why = "edge " + to_string(*sv.edge) + " not allowed";
    }
    a.lines.push_back("Spartan: no (" + why + "), mvc = " + mvc + ", nevc = " + nevc);
    if (sv.evc) {
      a.lines.push_back("evc = " + std::to_string(*sv.evc) + " (exact)");
    } else {
      a.lines.push_back("evc in [" + std::to_string(sv.evc_lower) + ", " + std::to_string(sv.evc_upper) + "]");
    }
  }
  a.lines.push_back("nevc: " + nevc + (nv.blocking_leaves.empty()
                                           ? " (no blocking leaf)"
                                           : " (blocking leaves " + detail::set_string(nv.blocking_leaves) + ")"));

  Json traces = Json::array();
  for (const auto& cv : sv.components.components) {
    if (cv.vertices.size() < 2) continue;
    const std::string where = "contraction " + detail::set_string(cv.vertices) + ": ";
    if (!cv.has_perfect_matching) {
      traces.push_back({{"component", cv.vertices}, {"skipped", "no perfect matching"}});
      a.lines.push_back(where + "skipped (no perfect matching)");
      continue;
    }
    const InducedBipartite sub = induced_subgraph(bg, cv.vertices);
    const ContractionTrace t = maximal_contraction(sub.graph);
    Json tj = to_json(t, &sub.original);
    tj["component"] = cv.vertices;
    traces.push_back(tj);
    std::string fin;
    if (t.final_is_edge()) {
      fin = "single edge";
    } else {
      std::vector<Vertex> leaves;
      for (Vertex v : t.final_degree_one()) leaves.push_back(v);
      fin = std::to_string(t.final_graph->order()) + " vertices, degree-1 vertices " +
            detail::set_string(leaves);
    }
    a.lines.push_back(where + std::to_string(t.steps.size()) + " step" +
                      (t.steps.size() == 1 ? "" : "s") + ", final graph " + fin);
  }
  a.json["contraction"] = traces;
  return a;
}

}  // namespace evclab
