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

#include <algorithm>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "evclab/elementary.hpp"
#include "evclab/graph.hpp"
#include "evclab/matching.hpp"

namespace evclab {

class ContractionError : public GraphError {
 public:
  using GraphError::GraphError;
};

struct MatchedPair {
  Vertex a = 0;  // part A endpoint
  Vertex b = 0;  // part B endpoint
  friend auto operator<=>(const MatchedPair&, const MatchedPair&) = default;
};

// Endpoints of at least two edges of a fixed perfect matching.
struct SpecialSubset {
  std::vector<MatchedPair> pairs;

  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    for (const auto& p : pairs) {
      out.push_back(p.a);
      out.push_back(p.b);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

// Builds the special subset whose vertex set is `vs`; vs must be closed under
// the matching.
inline SpecialSubset special_subset(const BipartiteGraph& g, const Matching& m,
                                    std::span<const Vertex> vs) {
  std::set<Vertex> set(vs.begin(), vs.end());
  SpecialSubset s;
  for (Vertex v : set) {
    if (!g.graph().contains(v)) throw ContractionError("unknown vertex " + std::to_string(v));
    if (!g.in_a(v)) continue;
    const Vertex w = m.partner(v);
    if (w == -1 || !set.count(w)) {
      throw ContractionError("subset is not special: vertex " + std::to_string(v) +
                             " lacks its matched partner");
    }
    s.pairs.push_back({v, w});
  }
  if (2 * s.pairs.size() != set.size()) {
    throw ContractionError("subset is not special: not a union of matched pairs");
  }
  if (s.pairs.size() < 2) throw ContractionError("subset is not special: fewer than two pairs");
  return s;
}

// Alternating cycle a0 b0 a1 b1 ... a_{k-1} b_{k-1} (a0): a_i b_i are matched,
// b_i a_{i+1} and the closing edge b_{k-1} a0 are not.
struct AlternatingCycle {
  std::vector<Vertex> vertices;
  int pairs() const { return static_cast<int>(vertices.size()) / 2; }
};

namespace detail {

inline void require_perfect(const BipartiteGraph& g, const Matching& m) {
  if (!is_matching_of(g.graph(), m)) throw ContractionError("not a matching of the graph");
  if (!m.is_perfect()) throw ContractionError("matching is not perfect");
}

}  // namespace detail

// Depth-first search on the digraph a -> a' (a' adjacent to the partner of a,
// a' != a). A directed cycle there is exactly an alternating cycle. Roots are
// taken in matched-edge order and neighbours in ascending id.
inline std::optional<AlternatingCycle> find_alternating_cycle(const BipartiteGraph& g,
                                                              const Matching& m) {
  detail::require_perfect(g, m);
  const int n = g.order();
  enum : char { kWhite, kGrey, kBlack };
  std::vector<char> colour(n, kWhite);
  std::vector<std::size_t> cursor(n, 0);
  for (const Edge& root_edge : m.edges()) {
    const Vertex root = g.in_a(root_edge.u) ? root_edge.u : root_edge.v;
    if (colour[root] != kWhite) continue;
    std::vector<Vertex> stack{root};
    colour[root] = kGrey;
    while (!stack.empty()) {
      const Vertex a = stack.back();
      const auto nbrs = g.graph().neighbors(m.partner(a));
      bool pushed = false;
      while (cursor[a] < nbrs.size()) {
        const Vertex next = nbrs[cursor[a]++];
        if (next == a) continue;
        if (colour[next] == kGrey) {
          AlternatingCycle cycle;
          auto it = std::find(stack.begin(), stack.end(), next);
          for (; it != stack.end(); ++it) {
            cycle.vertices.push_back(*it);
            cycle.vertices.push_back(m.partner(*it));
          }
          return cycle;
        }
        if (colour[next] == kWhite) {
          colour[next] = kGrey;
          stack.push_back(next);
          pushed = true;
          break;
        }
      }
      if (!pushed) {
        colour[a] = kBlack;
        stack.pop_back();
      }
    }
  }
  return std::nullopt;
}

using LabelMap = std::vector<std::vector<Vertex>>;  // vertex -> original vertices

inline LabelMap identity_labels(int n) {
  LabelMap labels(n);
  for (Vertex v = 0; v < n; ++v) labels[v] = {v};
  return labels;
}

struct ContractionStep {
  std::shared_ptr<const BipartiteGraph> before;
  Matching before_matching;
  SpecialSubset subset;  // ids of `before`
  std::shared_ptr<const BipartiteGraph> after;
  Matching after_matching;
  Vertex alpha = -1;  // A-side vertex of `after` replacing A n S
  Vertex beta = -1;   // B-side vertex of `after` replacing B n S
  std::vector<Vertex> old_to_new;
  LabelMap labels;  // after id -> original vertices, cumulative
};

// Matching contraction: A n S collapses to alpha, B n S to beta, alpha-beta is
// added and parallel edges are merged. Surviving vertices keep their relative
// order; alpha and beta take the two highest ids.
inline ContractionStep contract(std::shared_ptr<const BipartiteGraph> g, const Matching& m,
                                const SpecialSubset& s, const LabelMap* labels = nullptr) {
  const BipartiteGraph& bg = *g;
  if (!is_connected(bg.graph())) throw ContractionError("graph must be connected");
  detail::require_perfect(bg, m);
  if (s.pairs.size() < 2) throw ContractionError("subset is not special: fewer than two pairs");
  std::vector<char> in_s(bg.order(), 0);
  for (const auto& p : s.pairs) {
    if (!bg.graph().contains(p.a) || !bg.graph().contains(p.b) || !bg.in_a(p.a) ||
        m.partner(p.a) != p.b || in_s[p.a]) {
      throw ContractionError("subset is not special: pair " + std::to_string(p.a) + "-" +
                             std::to_string(p.b) + " is not a distinct matched pair");
    }
    in_s[p.a] = in_s[p.b] = 1;
  }
  const std::vector<Vertex> members = s.vertices();
  {
    const InducedBipartite sub = induced_subgraph(bg, members);
    if (!is_connected(sub.graph.graph()) || !is_elementary(sub.graph).elementary) {
      throw ContractionError("induced subgraph is not elementary");
    }
  }

  ContractionStep step;
  step.before = g;
  step.before_matching = m;
  step.subset = s;
  step.old_to_new.assign(bg.order(), -1);
  Vertex next = 0;
  std::vector<Side> sides;
  for (Vertex v = 0; v < bg.order(); ++v) {
    if (!in_s[v]) {
      step.old_to_new[v] = next++;
      sides.push_back(bg.side(v));
    }
  }
  step.alpha = next++;
  step.beta = next++;
  sides.push_back(Side::A);
  sides.push_back(Side::B);
  for (Vertex v : members) step.old_to_new[v] = bg.in_a(v) ? step.alpha : step.beta;

  std::set<Edge> edges{Edge(step.alpha, step.beta)};
  for (const Edge& e : bg.graph().edges()) {
    edges.emplace(step.old_to_new[e.u], step.old_to_new[e.v]);
  }
  Graph contracted(next, std::vector<Edge>(edges.begin(), edges.end()));

  const LabelMap base = labels ? *labels : identity_labels(bg.order());
  step.labels.assign(next, {});
  for (Vertex v = 0; v < bg.order(); ++v) {
    auto& dst = step.labels[step.old_to_new[v]];
    dst.insert(dst.end(), base.at(v).begin(), base.at(v).end());
  }
  for (auto& l : step.labels) std::sort(l.begin(), l.end());
  std::vector<std::string> names;
  for (const auto& l : step.labels) {
    std::string name;
    for (std::size_t i = 0; i < l.size(); ++i) name += (i ? "+" : "") + std::to_string(l[i]);
    names.push_back(std::move(name));
  }
  contracted.set_labels(std::move(names));

  step.after_matching = Matching(next);
  for (const Edge& e : m.edges()) {
    if (in_s[e.u]) continue;
    step.after_matching.mate[step.old_to_new[e.u]] = step.old_to_new[e.v];
    step.after_matching.mate[step.old_to_new[e.v]] = step.old_to_new[e.u];
  }
  step.after_matching.mate[step.alpha] = step.beta;
  step.after_matching.mate[step.beta] = step.alpha;
  step.after = std::make_shared<const BipartiteGraph>(std::move(contracted), std::move(sides));
  return step;
}

inline ContractionStep contract(const BipartiteGraph& g, const Matching& m, const SpecialSubset& s,
                                const LabelMap* labels = nullptr) {
  return contract(std::make_shared<const BipartiteGraph>(g), m, s, labels);
}

struct ContractionTrace {
  std::shared_ptr<const BipartiteGraph> original;
  Matching original_matching;
  std::vector<ContractionStep> steps;
  std::shared_ptr<const BipartiteGraph> final_graph;
  Matching final_matching;
  LabelMap final_labels;

  bool final_is_edge() const { return final_graph->order() == 2 && final_graph->size() == 1; }
  std::vector<Vertex> final_degree_one() const { return degree_one_vertices(final_graph->graph()); }
};

// Contract alternating cycles until none is left. The result admits no
// special elementary subset: it is a single edge or has a degree-1 vertex.
inline ContractionTrace maximal_contraction(const BipartiteGraph& g, const Matching& m) {
  if (!is_connected(g.graph())) throw ContractionError("graph must be connected");
  detail::require_perfect(g, m);
  ContractionTrace trace;
  trace.original = std::make_shared<const BipartiteGraph>(g);
  trace.original_matching = m;
  std::shared_ptr<const BipartiteGraph> current = trace.original;
  Matching matching = m;
  LabelMap labels = identity_labels(g.order());
  while (auto cycle = find_alternating_cycle(*current, matching)) {
    const SpecialSubset s = special_subset(*current, matching, cycle->vertices);
    ContractionStep step = contract(current, matching, s, &labels);
    current = step.after;
    matching = step.after_matching;
    labels = step.labels;
    trace.steps.push_back(std::move(step));
  }
  trace.final_graph = current;
  trace.final_matching = std::move(matching);
  trace.final_labels = std::move(labels);
  if (!trace.final_is_edge() && trace.final_degree_one().empty()) {
    throw std::logic_error("maximal contraction ended without a degree-1 vertex");
  }
  return trace;
}

inline ContractionTrace maximal_contraction(const BipartiteGraph& g) {
  const Matching m = maximum_matching(g);
  if (!m.is_perfect()) throw ContractionError("graph has no perfect matching");
  return maximal_contraction(g, m);
}

}  // namespace evclab
