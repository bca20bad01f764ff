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

// Independent brute-force oracles. Deliberately naive; small graphs only.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "evclab/graph.hpp"

namespace evclab::testing {

// All perfect matchings, each as a sorted edge list.
inline std::vector<std::vector<Edge>> all_perfect_matchings(const Graph& g) {
  std::vector<std::vector<Edge>> out;
  std::vector<char> used(g.order(), 0);
  std::vector<Edge> cur;
  std::function<void()> rec = [&] {
    Vertex v = 0;
    while (v < g.order() && used[v]) ++v;
    if (v == g.order()) {
      auto m = cur;
      std::sort(m.begin(), m.end());
      out.push_back(m);
      return;
    }
    used[v] = 1;
    for (Vertex w : g.neighbors(v)) {
      if (used[w]) continue;
      used[w] = 1;
      cur.emplace_back(v, w);
      rec();
      cur.pop_back();
      used[w] = 0;
    }
    used[v] = 0;
  };
  rec();
  return out;
}

inline std::set<Edge> allowed_by_enumeration(const Graph& g) {
  std::set<Edge> out;
  for (const auto& m : all_perfect_matchings(g)) out.insert(m.begin(), m.end());
  return out;
}

inline int max_matching_brute(const Graph& g) {
  int best = 0;
  std::vector<char> used(g.order(), 0);
  std::function<void(int, int)> rec = [&](int i, int size) {
    best = std::max(best, size);
    for (int j = i; j < g.size(); ++j) {
      const Edge e = g.edges()[j];
      if (used[e.u] || used[e.v]) continue;
      used[e.u] = used[e.v] = 1;
      rec(j + 1, size + 1);
      used[e.u] = used[e.v] = 0;
    }
  };
  rec(0, 0);
  return best;
}

inline bool is_cover_mask(const Graph& g, std::uint32_t mask) {
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return ((mask >> e.u) & 1U) || ((mask >> e.v) & 1U);
  });
}

inline int mvc_brute(const Graph& g) {
  int best = g.order();
  for (std::uint32_t m = 0; m < (1U << g.order()); ++m)
    if (is_cover_mask(g, m)) best = std::min(best, std::popcount(m));
  return best;
}

inline std::vector<std::vector<Vertex>> covers_of_size_brute(const Graph& g, int k) {
  std::vector<std::vector<Vertex>> out;
  for (std::uint32_t m = 0; m < (1U << g.order()); ++m) {
    if (std::popcount(m) != k || !is_cover_mask(g, m)) continue;
    std::vector<Vertex> c;
    for (Vertex v = 0; v < g.order(); ++v)
      if ((m >> v) & 1U) c.push_back(v);
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Does some simple cycle alternate between matching and non-matching edges?
inline bool has_alternating_cycle_brute(const Graph& g, const std::vector<Vertex>& mate) {
  const int n = g.order();
  std::vector<char> on(n, 0);
  std::vector<Vertex> path;
  std::function<bool(Vertex)> dfs = [&](Vertex v) -> bool {
    // path alternates starting with a matching edge out of path[0]
    const bool want_matched = path.size() % 2 == 1;
    for (Vertex w : g.neighbors(v)) {
      if ((mate[v] == w) != want_matched) continue;
      if (w == path[0] && path.size() >= 4 && !want_matched) return true;
      if (on[w] || w < path[0]) continue;
      on[w] = 1;
      path.push_back(w);
      if (dfs(w)) return true;
      path.pop_back();
      on[w] = 0;
    }
    return false;
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    on.assign(n, 0);
    on[s] = 1;
    if (dfs(s)) return true;
  }
  return false;
}

// Endpoints of trails of length <= s from v, by explicit walk enumeration.
inline std::set<Vertex> trail_ends_brute(const Graph& g, Vertex v, int s,
                                         std::optional<Vertex> first = std::nullopt) {
  std::set<Vertex> out;
  std::vector<Edge> used;
  std::function<void(Vertex, int)> walk = [&](Vertex x, int len) {
    if (!(first && len == 0)) out.insert(x);
    if (len == s) return;
    for (Vertex y : g.neighbors(x)) {
      if (len == 0 && first && y != *first) continue;
      const Edge e(x, y);
      if (std::find(used.begin(), used.end(), e) != used.end()) continue;
      used.push_back(e);
      walk(y, len + 1);
      used.pop_back();
    }
  };
  walk(v, 0);
  return out;
}

// Defense oracle: tries every assignment of guards to target slots.
inline bool defense_brute(const Graph& g, int s, const std::vector<Vertex>& from, const Edge& e,
                          const std::vector<Vertex>& to) {
  if (from.size() != to.size()) return false;
  std::vector<int> perm(to.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  do {
    bool ok = true, crossed = false;
    for (std::size_t i = 0; i < from.size() && ok; ++i) {
      ok = trail_ends_brute(g, from[i], s).count(to[perm[i]]) > 0;
      if (ok && e.has(from[i]) && trail_ends_brute(g, from[i], s, e.other(from[i])).count(to[perm[i]]))
        crossed = true;
    }
    if (ok && crossed) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Naive greatest fixpoint over guard multisets, for cross-checking the solver.
inline bool winnable_brute(const Graph& g, int k, int s, bool multi) {
  std::vector<std::vector<Vertex>> configs;
  std::vector<Vertex> cur;
  std::function<void(Vertex)> rec = [&](Vertex first) {
    if (static_cast<int>(cur.size()) == k) {
      std::uint32_t m = 0;
      for (Vertex v : cur) m |= 1U << v;
      if (is_cover_mask(g, m)) configs.push_back(cur);
      return;
    }
    for (Vertex v = first; v < g.order(); ++v) {
      cur.push_back(v);
      rec(multi ? v : v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  std::vector<char> alive(configs.size(), 1);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < configs.size(); ++i) {
      if (!alive[i]) continue;
      for (const Edge& e : g.edges()) {
        bool ok = false;
        for (std::size_t j = 0; j < configs.size() && !ok; ++j)
          ok = alive[j] && defense_brute(g, s, configs[i], e, configs[j]);
        if (!ok) {
          alive[i] = 0;
          changed = true;
          break;
        }
      }
    }
  }
  return std::find(alive.begin(), alive.end(), 1) != alive.end();
}

// ---- random instances

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph(n, edges);
}

// Connected bipartite: random side sizes, a random spanning tree across the
// sides, then extra cross edges with probability p.
inline Graph random_connected_bipartite(int n, double p, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> split(1, n - 1);
  const int a = n == 1 ? 1 : split(rng);
  std::vector<int> side(n);
  for (int v = 0; v < n; ++v) side[v] = v < a ? 0 : 1;
  std::vector<Vertex> perm(n);
  for (int v = 0; v < n; ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::set<Edge> edges;
  std::vector<Vertex> in_tree{perm[0]};
  std::vector<Vertex> pending(perm.begin() + 1, perm.end());
  std::bernoulli_distribution coin(p);
  while (!pending.empty()) {
    bool progress = false;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      const Vertex v = pending[i];
      std::vector<Vertex> opts;
      for (Vertex t : in_tree)
        if (side[t] != side[v]) opts.push_back(t);
      if (opts.empty()) continue;
      edges.emplace(v, opts[std::uniform_int_distribution<std::size_t>(0, opts.size() - 1)(rng)]);
      in_tree.push_back(v);
      pending.erase(pending.begin() + static_cast<long>(i));
      progress = true;
      break;
    }
    if (!progress) break;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (side[i] != side[j] && coin(rng)) edges.emplace(i, j);
  // relabel randomly so side does not follow id order
  std::vector<Vertex> relabel(n);
  for (int v = 0; v < n; ++v) relabel[v] = v;
  std::shuffle(relabel.begin(), relabel.end(), rng);
  std::vector<Edge> out;
  for (const Edge& e : edges) out.emplace_back(relabel[e.u], relabel[e.v]);
  return Graph(n, out);
}

// Even cycle plus random chords between opposite-parity positions: always
// elementary. Vertex ids are shuffled.
inline Graph random_elementary(int n, double chord_p, std::mt19937_64& rng) {
  std::vector<Vertex> relabel(n);
  for (int v = 0; v < n; ++v) relabel[v] = v;
  std::shuffle(relabel.begin(), relabel.end(), rng);
  std::set<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace(relabel[i], relabel[(i + 1) % n]);
  std::bernoulli_distribution coin(chord_p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 3; j < n; j += 2)
      if (coin(rng)) edges.emplace(relabel[i], relabel[j]);
  return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

}  // namespace evclab::testing
