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
#include <initializer_list>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <vector>

#include "evclab/graph.hpp"

namespace evclab {

// Set of pairwise disjoint edges, stored as a partner table.
struct Matching {
  std::vector<Vertex> mate;  // -1 when unmatched

  Matching() = default;
  explicit Matching(int n) : mate(n, -1) {}

  static Matching from_edges(int n, std::span<const Edge> edges) {
    Matching m(n);
    for (const Edge& e : edges) {
      if (m.mate.at(e.u) != -1 || m.mate.at(e.v) != -1) {
        throw GraphError("edges of a matching must be vertex-disjoint");
      }
      m.mate[e.u] = e.v;
      m.mate[e.v] = e.u;
    }
    return m;
  }
  static Matching from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return static_cast<int>(mate.size()); }
  Vertex partner(Vertex v) const { return mate.at(v); }
  bool matched(Vertex v) const { return mate.at(v) != -1; }
  bool contains(const Edge& e) const { return mate.at(e.u) == e.v; }

  int size() const {
    int c = 0;
    for (Vertex v = 0; v < order(); ++v) c += mate[v] > v;
    return c;
  }
  bool is_perfect() const {
    return std::none_of(mate.begin(), mate.end(), [](Vertex m) { return m == -1; });
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex v = 0; v < order(); ++v) {
      if (mate[v] > v) out.emplace_back(v, mate[v]);
    }
    return out;
  }

  friend bool operator==(const Matching&, const Matching&) = default;
};

inline bool is_matching_of(const Graph& g, const Matching& m) {
  if (m.order() != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    const Vertex w = m.mate[v];
    if (w == -1) continue;
    if (!g.contains(w) || m.mate[w] != v || !g.has_edge(v, w)) return false;
  }
  return true;
}

struct VertexCover {
  std::vector<Vertex> vertices;  // sorted
  int size() const { return static_cast<int>(vertices.size()); }
};

namespace detail {

// Hopcroft-Karp phases over the A side. Vertices flagged in `removed` are
// invisible. `mate` may hold a warm-start matching. Ties follow ascending id.
class HopcroftKarp {
 public:
  HopcroftKarp(const BipartiteGraph& g, std::vector<Vertex>& mate, const std::vector<char>* removed)
      : g_(g), mate_(mate), removed_(removed), dist_(g.order(), kInf) {}

  void run() {
    while (layer()) {
      for (Vertex a : g_.part_a()) {
        if (alive(a) && mate_[a] == -1) augment(a);
      }
    }
  }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  bool alive(Vertex v) const { return removed_ == nullptr || !(*removed_)[v]; }

  bool layer() {
    std::queue<Vertex> queue;
    for (Vertex a : g_.part_a()) {
      if (alive(a) && mate_[a] == -1) {
        dist_[a] = 0;
        queue.push(a);
      } else {
        dist_[a] = kInf;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      const Vertex a = queue.front();
      queue.pop();
      for (Vertex b : g_.graph().neighbors(a)) {
        if (!alive(b)) continue;
        const Vertex next = mate_[b];
        if (next == -1) {
          found = true;
        } else if (dist_[next] == kInf) {
          dist_[next] = dist_[a] + 1;
          queue.push(next);
        }
      }
    }
    return found;
  }

  bool augment(Vertex a) {
    for (Vertex b : g_.graph().neighbors(a)) {
      if (!alive(b)) continue;
      const Vertex next = mate_[b];
      if (next == -1 || (dist_[next] == dist_[a] + 1 && augment(next))) {
        mate_[a] = b;
        mate_[b] = a;
        return true;
      }
    }
    dist_[a] = kInf;
    return false;
  }

  const BipartiteGraph& g_;
  std::vector<Vertex>& mate_;
  const std::vector<char>* removed_;
  std::vector<int> dist_;
};

}  // namespace detail

inline Matching maximum_matching(const BipartiteGraph& g) {
  Matching m(g.order());
  detail::HopcroftKarp(g, m.mate, nullptr).run();
  return m;
}

// Maximum matching of g minus the flagged vertices (ids are kept).
inline Matching maximum_matching(const BipartiteGraph& g, const std::vector<char>& removed,
                                 std::optional<Matching> warm_start = std::nullopt) {
  Matching m = warm_start ? std::move(*warm_start) : Matching(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (removed.at(v) && m.mate[v] != -1) {
      m.mate[m.mate[v]] = -1;
      m.mate[v] = -1;
    }
  }
  detail::HopcroftKarp(g, m.mate, &removed).run();
  return m;
}

// Koenig's construction: Z is everything reachable from free A vertices by
// alternating paths; the cover is (A \ Z) + (B n Z).
inline VertexCover koenig_cover(const BipartiteGraph& g, const Matching& m,
                                const std::vector<char>* removed = nullptr) {
  const int n = g.order();
  auto alive = [&](Vertex v) { return removed == nullptr || !(*removed)[v]; };
  std::vector<char> reached(n, 0);
  std::queue<Vertex> queue;
  for (Vertex a : g.part_a()) {
    if (alive(a) && m.mate[a] == -1) {
      reached[a] = 1;
      queue.push(a);
    }
  }
  while (!queue.empty()) {
    const Vertex a = queue.front();
    queue.pop();
    for (Vertex b : g.graph().neighbors(a)) {
      if (!alive(b) || reached[b] || m.mate[a] == b) continue;
      reached[b] = 1;
      const Vertex next = m.mate[b];
      if (next != -1 && !reached[next]) {
        reached[next] = 1;
        queue.push(next);
      }
    }
  }
  VertexCover cover;
  for (Vertex v = 0; v < n; ++v) {
    if (!alive(v)) continue;
    if (g.in_a(v) ? !reached[v] : reached[v]) cover.vertices.push_back(v);
  }
  return cover;
}

inline VertexCover min_vertex_cover(const BipartiteGraph& g) {
  return koenig_cover(g, maximum_matching(g));
}

inline bool has_perfect_matching(const BipartiteGraph& g) {
  return 2 * maximum_matching(g).size() == g.order();
}

// Answers "is e contained in some perfect matching" against one fixed base
// matching: an edge outside the base matching is allowed iff g - {u, v} has a
// perfect matching, i.e. iff the two partners it displaces can be re-joined
// by an augmenting path avoiding u and v.
class AllowedEdges {
 public:
  explicit AllowedEdges(const BipartiteGraph& g) : g_(g), base_(maximum_matching(g)) {}

  const Matching& base() const { return base_; }
  bool has_perfect_matching() const { return 2 * base_.size() == g_.order(); }

  bool allowed(const Edge& e) const { return perfect_matching_containing(e).has_value(); }

  std::optional<Matching> perfect_matching_containing(const Edge& e) const {
    if (!g_.graph().has_edge(e)) {
      throw GraphError("edge " + to_string(e) + " is not an edge of the graph");
    }
    if (!has_perfect_matching()) return std::nullopt;
    if (base_.contains(e)) return base_;

    const Vertex a = g_.in_a(e.u) ? e.u : e.v;
    const Vertex b = e.other(a);
    Matching m = base_;
    const Vertex free_a = m.mate[b];
    const Vertex free_b = m.mate[a];
    m.mate[a] = m.mate[b] = m.mate[free_a] = m.mate[free_b] = -1;

    // BFS for an alternating path free_a -> free_b avoiding a and b.
    std::vector<Vertex> via(g_.order(), -1);
    std::vector<char> seen(g_.order(), 0);
    seen[a] = seen[b] = seen[free_a] = 1;
    std::queue<Vertex> queue;
    queue.push(free_a);
    bool found = false;
    while (!queue.empty() && !found) {
      const Vertex x = queue.front();
      queue.pop();
      for (Vertex y : g_.graph().neighbors(x)) {
        if (seen[y]) continue;
        seen[y] = 1;
        via[y] = x;
        if (y == free_b) {
          found = true;
          break;
        }
        const Vertex next = m.mate[y];
        if (next != -1 && !seen[next]) {
          seen[next] = 1;
          queue.push(next);
        }
      }
    }
    if (!found) return std::nullopt;
    for (Vertex y = free_b; y != -1;) {
      const Vertex x = via[y];
      const Vertex prev = m.mate[x];
      m.mate[x] = y;
      m.mate[y] = x;
      y = (x == free_a) ? -1 : prev;
    }
    m.mate[a] = b;
    m.mate[b] = a;
    return m;
  }

 private:
  const BipartiteGraph& g_;
  Matching base_;
};

inline bool is_allowed_edge(const BipartiteGraph& g, const Edge& e) {
  return AllowedEdges(g).allowed(e);
}

inline std::optional<Matching> perfect_matching_containing(const BipartiteGraph& g, const Edge& e) {
  return AllowedEdges(g).perfect_matching_containing(e);
}

}  // namespace evclab
