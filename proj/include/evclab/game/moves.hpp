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
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evclab/game/config.hpp"
#include "evclab/graph.hpp"

namespace evclab {

namespace detail {

inline void collect_trails(const Graph& g, Vertex cur, int left, std::vector<int>& used,
                           std::vector<char>& hit) {
  hit[cur] = 1;
  if (left == 0) return;
  for (Vertex w : g.neighbors(cur)) {
    const int id = g.edge_index(Edge(cur, w));
    if (std::find(used.begin(), used.end(), id) != used.end()) continue;
    used.push_back(id);
    collect_trails(g, w, left - 1, used, hit);
    used.pop_back();
  }
}

inline std::vector<Vertex> hits_to_list(const std::vector<char>& hit) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(hit.size()); ++v)
    if (hit[v]) out.push_back(v);
  return out;
}

}  // namespace detail

// Endpoints of trails (walks that never reuse an edge) of length <= steps
// starting at v. Includes v itself (the guard stays put).
inline std::vector<Vertex> reachable_targets(const Graph& g, Vertex v, int steps) {
  if (!g.contains(v)) throw std::out_of_range("unknown vertex " + std::to_string(v));
  if (steps < 1) throw std::invalid_argument("step bound must be at least 1");
  std::vector<char> hit(g.order(), 0);
  std::vector<int> used;
  detail::collect_trails(g, v, steps, used, hit);
  return detail::hits_to_list(hit);
}

// Endpoints of trails of length <= steps whose first edge is x -> y.
inline std::vector<Vertex> forced_targets(const Graph& g, Vertex x, Vertex y, int steps) {
  if (!g.has_edge(x, y)) throw std::invalid_argument("not an edge");
  std::vector<char> hit(g.order(), 0);
  std::vector<int> used{g.edge_index(Edge(x, y))};
  detail::collect_trails(g, y, steps - 1, used, hit);
  return detail::hits_to_list(hit);
}

enum class DefenseFailure {
  None,
  WrongGuardCount,
  VariantViolation,
  NotAnEdge,
  NoGuardOnEndpoint,
  NotReachable,
  NotCrossed,
};

inline const char* reason(DefenseFailure f) {
  switch (f) {
    case DefenseFailure::None: return "ok";
    case DefenseFailure::WrongGuardCount: return "wrong guard count";
    case DefenseFailure::VariantViolation: return "more than one guard on a vertex";
    case DefenseFailure::NotAnEdge: return "not an edge";
    case DefenseFailure::NoGuardOnEndpoint: return "no guard on an endpoint of the attacked edge";
    case DefenseFailure::NotReachable: return "target not reachable";
    case DefenseFailure::NotCrossed: return "attacked edge not crossed on a first step";
  }
  return "?";
}

struct GuardMove {
  Vertex from = 0;
  Vertex to = 0;
  friend bool operator==(const GuardMove&, const GuardMove&) = default;
};

struct DefenseCheck {
  DefenseFailure failure = DefenseFailure::None;
  std::vector<GuardMove> moves;  // one per guard; moves[crosser] crosses the attacked edge
  int crosser = -1;

  bool ok() const { return failure == DefenseFailure::None; }
  std::string reason() const { return evclab::reason(failure); }
};

namespace detail {

// Kuhn's augmenting paths; adj[i] lists the slots unit i may take.
inline bool kuhn_augment(int i, const std::vector<std::vector<int>>& adj, std::vector<int>& slot_owner,
                         std::vector<char>& seen) {
  for (int s : adj[i]) {
    if (seen[s]) continue;
    seen[s] = 1;
    if (slot_owner[s] == -1 || kuhn_augment(slot_owner[s], adj, slot_owner, seen)) {
      slot_owner[s] = i;
      return true;
    }
  }
  return false;
}

inline std::optional<std::vector<int>> perfect_assignment(const std::vector<std::vector<int>>& adj,
                                                          int slots) {
  std::vector<int> owner(slots, -1);
  for (int i = 0; i < static_cast<int>(adj.size()); ++i) {
    std::vector<char> seen(slots, 0);
    if (!kuhn_augment(i, adj, owner, seen)) return std::nullopt;
  }
  std::vector<int> unit_slot(adj.size(), -1);
  for (int s = 0; s < slots; ++s)
    if (owner[s] != -1) unit_slot[owner[s]] = s;
  return unit_slot;
}

}  // namespace detail

// Full legality check of a defense from -> to against an attack on e.
inline DefenseCheck check_defense(const Graph& g, const GameSpec& spec, const GuardConfig& from,
                                  const Edge& e, const GuardConfig& to) {
  DefenseCheck out;
  if (!g.has_edge(e)) {
    out.failure = DefenseFailure::NotAnEdge;
    return out;
  }
  const std::string p1 = config_problem(g, spec, from);
  const std::string p2 = config_problem(g, spec, to);
  for (const std::string& p : {p1, p2}) {
    if (p.empty()) continue;
    out.failure = p == "more than one guard on a vertex" ? DefenseFailure::VariantViolation
                                                         : DefenseFailure::WrongGuardCount;
    return out;
  }
  if (!from.occupied(e.u) && !from.occupied(e.v)) {
    out.failure = DefenseFailure::NoGuardOnEndpoint;
    return out;
  }
  const std::vector<Vertex> units = from.positions();
  const std::vector<Vertex> slots = to.positions();
  const int k = static_cast<int>(units.size());
  std::vector<std::vector<char>> reach(g.order());
  auto reach_of = [&](Vertex x) -> const std::vector<char>& {
    if (reach[x].empty()) {
      reach[x].assign(g.order(), 0);
      for (Vertex y : reachable_targets(g, x, spec.steps)) reach[x][y] = 1;
    }
    return reach[x];
  };
  std::vector<std::vector<int>> adj(k);
  for (int i = 0; i < k; ++i) {
    const auto& r = reach_of(units[i]);
    for (int s = 0; s < k; ++s)
      if (r[slots[s]]) adj[i].push_back(s);
  }
  if (!detail::perfect_assignment(adj, k)) {
    out.failure = DefenseFailure::NotReachable;
    return out;
  }
  for (const auto& [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
    if (!from.occupied(x)) continue;
    const int crosser =
        static_cast<int>(std::find(units.begin(), units.end(), x) - units.begin());
    std::vector<char> forced(g.order(), 0);
    for (Vertex t : forced_targets(g, x, y, spec.steps)) forced[t] = 1;
    auto restricted = adj;
    restricted[crosser].clear();
    for (int s = 0; s < k; ++s)
      if (forced[slots[s]]) restricted[crosser].push_back(s);
    if (auto a = detail::perfect_assignment(restricted, k)) {
      for (int i = 0; i < k; ++i) out.moves.push_back({units[i], slots[(*a)[i]]});
      out.crosser = crosser;
      return out;
    }
  }
  out.failure = DefenseFailure::NotCrossed;
  return out;
}

inline bool defense_exists(const Graph& g, const GameSpec& spec, const GuardConfig& from,
                           const Edge& e, const GuardConfig& to) {
  for (const GuardConfig* c : {&from, &to}) {
    if (c->order() != g.order() || c->total() != spec.guards) {
      throw std::invalid_argument("configuration does not hold " + std::to_string(spec.guards) +
                                  " guards");
    }
  }
  return check_defense(g, spec, from, e, to).ok();
}

// Precomputed reach sets as bit masks (n <= 64) for the hot defense check.
class MoveTable {
 public:
  MoveTable(const Graph& g, int steps) {
    if (g.order() > 64) throw std::invalid_argument("move table supports at most 64 vertices");
    const int n = g.order();
    reach_.assign(n, 0);
    forced_.assign(n, {});
    nbrs_.assign(n, {});
    for (Vertex x = 0; x < n; ++x) {
      nbrs_[x].assign(g.neighbors(x).begin(), g.neighbors(x).end());
      for (Vertex y : reachable_targets(g, x, steps)) reach_[x] |= std::uint64_t{1} << y;
      for (Vertex y : g.neighbors(x)) {
        std::uint64_t m = 0;
        for (Vertex t : forced_targets(g, x, y, steps)) m |= std::uint64_t{1} << t;
        forced_[x].push_back(m);
      }
    }
  }

  std::uint64_t reach(Vertex x) const { return reach_[x]; }
  std::uint64_t forced(Vertex x, Vertex y) const {
    const auto& nb = nbrs_[x];
    return forced_[x][std::lower_bound(nb.begin(), nb.end(), y) - nb.begin()];
  }

  // src and dst are sorted unit lists of length k (k < 64).
  template <class U1, class U2>
  bool defends(const U1* src, const U2* dst, int k, const Edge& e) const {
    std::uint64_t adj[64];
    std::uint64_t dst_mask = 0;
    for (int s = 0; s < k; ++s) dst_mask |= std::uint64_t{1} << dst[s];
    for (int t = 0; t < k; ++t) {
      const std::uint64_t r = reach_[src[t]];
      if (!(r & dst_mask)) return false;
      std::uint64_t bits = 0;
      for (int s = 0; s < k; ++s)
        if ((r >> dst[s]) & 1U) bits |= std::uint64_t{1} << s;
      adj[t] = bits;
    }
    for (int o = 0; o < 2; ++o) {
      const Vertex x = o == 0 ? e.u : e.v;
      const Vertex y = o == 0 ? e.v : e.u;
      const int crosser = static_cast<int>(std::find(src, src + k, x) - src);
      if (crosser == k) continue;
      const std::uint64_t f = forced(x, y);
      if (!(f & dst_mask)) continue;
      std::uint64_t local[64];
      std::copy(adj, adj + k, local);
      std::uint64_t fb = 0;
      for (int s = 0; s < k; ++s)
        if ((f >> dst[s]) & 1U) fb |= std::uint64_t{1} << s;
      local[crosser] = fb;
      int owner[64];
      std::fill(owner, owner + k, -1);
      bool ok = true;
      for (int step = 0; step < k && ok; ++step) {
        // crosser first, it is the most constrained
        const int t = step == 0 ? crosser : (step <= crosser ? step - 1 : step);
        std::uint64_t seen = 0;
        ok = augment(t, local, owner, seen);
      }
      if (ok) return true;
    }
    return false;
  }

  bool defends(const GuardConfig& from, const Edge& e, const GuardConfig& to) const {
    const std::vector<Vertex> a = from.positions(), b = to.positions();
    if (a.size() != b.size() || a.size() >= 64) return false;
    return defends(a.data(), b.data(), static_cast<int>(a.size()), e);
  }

 private:
  static bool augment(int t, const std::uint64_t* adj, int* owner, std::uint64_t& seen) {
    std::uint64_t cand = adj[t] & ~seen;
    while (cand) {
      const int s = std::countr_zero(cand);
      cand &= cand - 1;
      seen |= std::uint64_t{1} << s;
      if (owner[s] < 0 || augment(owner[s], adj, owner, seen)) {
        owner[s] = t;
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<Vertex>> nbrs_;
  std::vector<std::uint64_t> reach_;
  std::vector<std::vector<std::uint64_t>> forced_;
};

// Calls fn on every config with k guards allowed by the variant, in
// ascending order of sorted guard lists.
inline void for_each_config(int n, int k, Variant variant,
                            const std::function<void(const GuardConfig&)>& fn) {
  GuardConfig c(n);
  std::function<void(Vertex, int)> rec = [&](Vertex first, int left) {
    if (left == 0) {
      fn(c);
      return;
    }
    for (Vertex v = first; v < n; ++v) {
      if (variant == Variant::OnePerVertex && c.count[v] > 0) continue;
      ++c.count[v];
      rec(variant == Variant::OnePerVertex ? v + 1 : v, left - 1);
      --c.count[v];
    }
  };
  rec(0, k);
}

// Every config the defender may legally move to after an attack on e.
inline std::vector<GuardConfig> legal_defenses(const Graph& g, const GameSpec& spec,
                                               const GuardConfig& from, const Edge& e,
                                               const MoveTable* table = nullptr) {
  std::vector<GuardConfig> out;
  if (!from.occupied(e.u) && !from.occupied(e.v)) return out;
  std::optional<MoveTable> own;
  if (!table) table = &own.emplace(g, spec.steps);
  for_each_config(g.order(), spec.guards, spec.variant, [&](const GuardConfig& to) {
    if (table->defends(from, e, to)) out.push_back(to);
  });
  return out;
}

}  // namespace evclab
