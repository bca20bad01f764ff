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
#include <optional>
#include <string>
#include <vector>

#include "evclab/game/config.hpp"
#include "evclab/game/moves.hpp"
#include "evclab/game/strategy.hpp"
#include "evclab/graph.hpp"
#include "evclab/matching.hpp"
#include "evclab/vertex_cover.hpp"

namespace evclab {

struct NevcVerdict {
  int mvc = 0;
  int nevc = 0;
  std::vector<Vertex> degree_one;
  std::vector<Vertex> blocking_leaves;  // degree-1 vertices in no minimum vertex cover
  int blocked_components = 0;           // components holding a blocking leaf
};

namespace detail {

inline NevcVerdict finish_verdict(const Graph& g, NevcVerdict v) {
  std::vector<int> comp_of(g.order(), -1);
  const auto comps = connected_components(g);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (Vertex x : comps[c]) comp_of[x] = static_cast<int>(c);
  std::vector<char> blocked(comps.size(), 0);
  for (Vertex x : v.blocking_leaves) blocked[comp_of[x]] = 1;
  v.blocked_components = static_cast<int>(std::count(blocked.begin(), blocked.end(), 1));
  // the extra guard is needed per component: guards never change component
  v.nevc = v.mvc + v.blocked_components;
  return v;
}

}  // namespace detail

// A leaf v lies in some minimum cover iff mvc(G - v) = mvc(G) - 1.
inline NevcVerdict nevc_bipartite(const BipartiteGraph& g) {
  NevcVerdict out;
  const Matching base = maximum_matching(g);
  out.mvc = base.size();
  out.degree_one = degree_one_vertices(g.graph());
  std::vector<char> removed(g.order(), 0);
  for (Vertex v : out.degree_one) {
    removed[v] = 1;
    const int without = maximum_matching(g, removed, base).size();
    removed[v] = 0;
    if (without != out.mvc - 1) out.blocking_leaves.push_back(v);
  }
  return detail::finish_verdict(g.graph(), std::move(out));
}

// Same characterization with exhaustive covers; any graph up to `bound` vertices.
inline NevcVerdict nevc_general_small(const Graph& g, int bound = kDefaultOracleBound) {
  if (g.order() > bound) {
    throw LimitExceeded("exhaustive cover bound is " + std::to_string(bound) + " vertices, got " +
                        std::to_string(g.order()));
  }
  NevcVerdict out;
  out.mvc = static_cast<int>(min_vertex_cover_exhaustive(g).size());
  out.degree_one = degree_one_vertices(g);
  for (Vertex v : out.degree_one) {
    const Vertex drop[] = {v};
    const int without = static_cast<int>(min_vertex_cover_exhaustive(remove_vertices(g, drop).graph).size());
    if (without != out.mvc - 1) out.blocking_leaves.push_back(v);
  }
  return detail::finish_verdict(g, std::move(out));
}

inline NevcVerdict nevc_verdict(const Graph& g) {
  if (auto bip = bipartition(g); auto* bg = std::get_if<BipartiteGraph>(&bip)) return nevc_bipartite(*bg);
  return nevc_general_small(g, 64);
}

namespace detail {

inline std::vector<Vertex> any_min_cover(const Graph& g) {
  if (auto bip = bipartition(g); auto* bg = std::get_if<BipartiteGraph>(&bip))
    return min_vertex_cover(*bg).vertices;
  return min_vertex_cover_exhaustive(g);
}

// A minimum cover of g containing v, if one exists.
inline std::optional<std::vector<Vertex>> min_cover_containing(const Graph& g, Vertex v, int k) {
  const Vertex drop[] = {v};
  const InducedSubgraph rest = remove_vertices(g, drop);
  std::vector<Vertex> cover = any_min_cover(rest.graph);
  if (static_cast<int>(cover.size()) != k - 1) return std::nullopt;
  for (Vertex& x : cover) x = rest.original[x];
  cover.push_back(v);
  std::sort(cover.begin(), cover.end());
  return cover;
}

}  // namespace detail

// Two-step defender. Invariant: the guards sit on a minimum cover S, plus one
// floater outside S when some leaf blocks. An attack across S and V \ S is
// answered by shifting guards so that S (or a cover through a leaf) is
// occupied again; the concrete guard routes are found by the trail matching
// in check_defense.
class NevcDefender : public Defender {
 public:
  explicit NevcDefender(const Graph& g) : g_(g) {
    if (!is_connected(g_)) throw GraphError("the two-step defender expects a connected graph");
    if (g_.size() == 0) throw GraphError("the two-step defender needs at least one edge");
    verdict_ = nevc_verdict(g_);
    floater_ = verdict_.nevc > verdict_.mvc;
    spec_ = GameSpec{verdict_.nevc, Variant::OnePerVertex, 2};
  }

  const NevcVerdict& verdict() const { return verdict_; }
  const GameSpec& spec() const { return spec_; }
  std::string name() const override { return "two-step certificate"; }

  GuardConfig place() override {
    const std::vector<Vertex> s = detail::any_min_cover(g_);
    GuardConfig c = GuardConfig::from_positions(g_.order(), s);
    if (floater_) c.count[initial_floater(s)] = 1;
    return c;
  }

  std::optional<GuardConfig> defend(const GuardConfig& current, const Edge& e) override {
    if (!current.occupied(e.u) && !current.occupied(e.v)) return std::nullopt;
    if (current.occupied(e.u) && current.occupied(e.v)) return current;  // swap
    const Vertex u = current.occupied(e.u) ? e.u : e.v;
    const Vertex v = e.other(u);
    std::vector<GuardConfig> targets;
    if (floater_) {
      // current = S + {f}; S is current minus a vertex whose removal keeps the cover
      GuardConfig to_v = current;
      ++to_v.count[v];
      for (Vertex f : current.support()) {
        if (f == u) continue;
        GuardConfig s = current;
        --s.count[f];
        if (!covers(g_, s)) continue;
        targets.push_back(s);
        ++targets.back().count[v];
      }
      targets.push_back(current);
    } else if (g_.degree(v) >= 2) {
      targets.push_back(current);
    } else if (auto sv = detail::min_cover_containing(g_, v, verdict_.mvc)) {
      targets.push_back(GuardConfig::from_positions(g_.order(), *sv));
    }
    for (const GuardConfig& t : targets)
      if (covers(g_, t) && check_defense(g_, spec_, current, e, t).ok()) return t;
    return std::nullopt;
  }

 private:
  // Lowest-id vertex outside S adjacent to the largest component of G[S].
  Vertex initial_floater(const std::vector<Vertex>& s) const {
    const InducedSubgraph gs = induced_subgraph(g_, s);
    const auto comps = connected_components(gs.graph);
    std::size_t best = 0;
    for (std::size_t i = 1; i < comps.size(); ++i)
      if (comps[i].size() > comps[best].size()) best = i;
    std::vector<char> in_s(g_.order(), 0), near(g_.order(), 0);
    for (Vertex x : s) in_s[x] = 1;
    for (Vertex x : comps[best])
      for (Vertex w : g_.neighbors(gs.original[x])) near[w] = 1;
    for (Vertex v = 0; v < g_.order(); ++v)
      if (!in_s[v] && near[v]) return v;
    for (Vertex v = 0; v < g_.order(); ++v)
      if (!in_s[v]) return v;
    throw std::logic_error("minimum cover spans every vertex");
  }

  Graph g_;
  NevcVerdict verdict_;
  bool floater_ = false;
  GameSpec spec_;
};

inline NevcDefender defender_certificate_nevc(const Graph& g) { return NevcDefender(g); }

struct StarReduction {
  Graph graph;
  Vertex star = -1;
};

// Adds a universal vertex; g has a cover of size k iff the new graph is
// defended by k + 1 guards in the two-step game (for k < n - 1).
inline StarReduction star_reduction(const Graph& g, int k) {
  const int n = g.order();
  if (k < 0 || k >= n - 1) {
    throw std::invalid_argument("k must satisfy 0 <= k < n - 1 (got k = " + std::to_string(k) +
                                ", n = " + std::to_string(n) + ")");
  }
  std::vector<Edge> edges(g.edges());
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, n);
  StarReduction out{Graph(n + 1, edges), n};
  std::vector<std::string> labels = g.labels();
  labels.push_back("*");
  out.graph.set_labels(std::move(labels));
  return out;
}

}  // namespace evclab
