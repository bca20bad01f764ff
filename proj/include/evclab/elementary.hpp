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

#include <functional>
#include <optional>
#include <vector>

#include "evclab/graph.hpp"
#include "evclab/matching.hpp"

namespace evclab {

struct ElementaryVerdict {
  bool elementary = false;
  std::optional<Edge> non_allowed;  // lexicographically least edge in no perfect matching
};

// Connected and every edge allowed. A single vertex is elementary vacuously.
inline ElementaryVerdict is_elementary(const BipartiteGraph& g) {
  if (!is_connected(g.graph())) throw GraphError("is_elementary expects a connected graph");
  const AllowedEdges oracle(g);
  for (const Edge& e : g.graph().edges()) {
    if (!oracle.allowed(e)) return {false, e};
  }
  return {true, std::nullopt};
}

struct ComponentVerdict {
  std::vector<Vertex> vertices;
  bool has_perfect_matching = false;
  ElementaryVerdict verdict;  // edges in original ids
  Vertex exposed = -1;        // some unmatched vertex when there is no perfect matching
};

struct EssentialVerdict {
  bool essentially_elementary = true;
  std::vector<ComponentVerdict> components;
};

inline EssentialVerdict is_essentially_elementary(const BipartiteGraph& g) {
  EssentialVerdict out;
  for (auto& comp : connected_components(g.graph())) {
    const InducedBipartite sub = induced_subgraph(g, comp);
    ComponentVerdict cv;
    const Matching m = maximum_matching(sub.graph);
    cv.has_perfect_matching = m.is_perfect();
    if (!cv.has_perfect_matching) {
      for (Vertex v = 0; v < sub.graph.order(); ++v) {
        if (!m.matched(v)) {
          cv.exposed = sub.original[v];
          break;
        }
      }
    }
    cv.verdict = is_elementary(sub.graph);
    if (cv.verdict.non_allowed) {
      const Edge e = *cv.verdict.non_allowed;
      cv.verdict.non_allowed = Edge(sub.original[e.u], sub.original[e.v]);
    }
    out.essentially_elementary = out.essentially_elementary && cv.verdict.elementary;
    cv.vertices = std::move(comp);
    out.components.push_back(std::move(cv));
  }
  return out;
}

enum class Obstruction { None, NonAllowedEdge, NoPerfectMatching };

inline const char* to_string(Obstruction o) {
  switch (o) {
    case Obstruction::None: return "none";
    case Obstruction::NonAllowedEdge: return "non-allowed-edge";
    case Obstruction::NoPerfectMatching: return "no-perfect-matching";
  }
  return "?";
}

struct SpartanVerdict {
  bool is_spartan = false;
  int mvc = 0;
  std::optional<int> evc;  // exact, when known
  int evc_lower = 0;
  int evc_upper = 0;
  Obstruction obstruction = Obstruction::None;
  int component = -1;        // index into components
  std::optional<Edge> edge;  // least non-allowed edge
  Vertex exposed = -1;       // for NoPerfectMatching
  EssentialVerdict components;
};

// Exact evc of one connected component, used to refine non-Spartan bounds.
using ExactEvc = std::function<int(const Graph&)>;

inline SpartanVerdict spartan_verdict(const BipartiteGraph& g, const ExactEvc& exact = {}) {
  SpartanVerdict out;
  out.components = is_essentially_elementary(g);
  out.is_spartan = out.components.essentially_elementary;
  out.mvc = maximum_matching(g).size();
  if (out.is_spartan) {
    out.evc = out.mvc;
    out.evc_lower = out.evc_upper = out.mvc;
    return out;
  }
  for (std::size_t i = 0; i < out.components.components.size(); ++i) {
    const auto& cv = out.components.components[i];
    if (cv.verdict.elementary) continue;
    if (!out.edge || *cv.verdict.non_allowed < *out.edge) {
      out.edge = cv.verdict.non_allowed;
      out.component = static_cast<int>(i);
      out.obstruction =
          cv.has_perfect_matching ? Obstruction::NonAllowedEdge : Obstruction::NoPerfectMatching;
      out.exposed = cv.exposed;
    }
  }
  out.evc_lower = out.mvc + 1;
  out.evc_upper = 2 * out.mvc;
  if (exact) {
    // evc is additive over components; elementary ones contribute their mvc.
    int total = 0;
    for (const auto& cv : out.components.components) {
      const InducedBipartite sub = induced_subgraph(g, cv.vertices);
      total += cv.verdict.elementary ? maximum_matching(sub.graph).size() : exact(sub.graph.graph());
    }
    out.evc = total;
  }
  return out;
}

}  // namespace evclab
