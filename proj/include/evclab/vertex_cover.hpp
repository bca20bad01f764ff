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

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "evclab/graph.hpp"
#include "evclab/matching.hpp"

namespace evclab {

// Raised when an exhaustive routine is asked to go beyond its size bound.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultOracleBound = 16;

namespace detail {

inline std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  if (g.order() > 64) {
    throw LimitExceeded("exhaustive search supports at most 64 vertices, got " +
                        std::to_string(g.order()));
  }
  std::vector<std::uint64_t> adj(g.order(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= std::uint64_t{1} << e.v;
    adj[e.v] |= std::uint64_t{1} << e.u;
  }
  return adj;
}

inline std::vector<Vertex> mask_to_vertices(std::uint64_t mask) {
  std::vector<Vertex> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

class CoverBranch {
 public:
  explicit CoverBranch(const Graph& g) : adj_(adjacency_masks(g)), best_(0) {
    for (Vertex v = 0; v < g.order(); ++v) best_ |= std::uint64_t{1} << v;
  }

  std::uint64_t solve() {
    search(0);
    return best_;
  }

 private:
  void search(std::uint64_t cover) {
    if (std::popcount(cover) >= std::popcount(best_)) return;
    // Pick the uncovered vertex with most uncovered edges.
    int pick = -1, pick_degree = 0;
    for (std::size_t v = 0; v < adj_.size(); ++v) {
      if (cover >> v & 1) continue;
      const int d = std::popcount(adj_[v] & ~cover);
      if (d > pick_degree) {
        pick = static_cast<int>(v);
        pick_degree = d;
      }
    }
    if (pick < 0) {
      best_ = cover;
      return;
    }
    search(cover | adj_[pick]);
    search(cover | std::uint64_t{1} << pick);
  }

  std::vector<std::uint64_t> adj_;
  std::uint64_t best_;
};

}  // namespace detail

// Branch-and-bound minimum vertex cover for general graphs (n <= 64).
inline std::vector<Vertex> min_vertex_cover_exhaustive(const Graph& g) {
  return detail::mask_to_vertices(detail::CoverBranch(g).solve());
}

inline int mvc_size(const Graph& g) {
  if (auto bip = bipartition(g); auto* bg = std::get_if<BipartiteGraph>(&bip)) {
    return maximum_matching(*bg).size();
  }
  return static_cast<int>(min_vertex_cover_exhaustive(g).size());
}

// Every vertex cover with exactly k vertices, in lexicographic order.
inline std::vector<std::vector<Vertex>> enumerate_min_vertex_covers(const Graph& g, int k,
                                                                    int bound = kDefaultOracleBound) {
  if (g.order() > bound) {
    throw LimitExceeded("cover enumeration bound is " + std::to_string(bound) + " vertices, got " +
                        std::to_string(g.order()));
  }
  const auto adj = detail::adjacency_masks(g);
  const int n = g.order();
  std::vector<std::vector<Vertex>> out;
  if (k < 0 || k > n) return out;
  // v is decided in order; excluding v forces all of N(v) in.
  auto rec = [&](auto&& self, int v, std::uint64_t chosen, std::uint64_t forced, int count) -> void {
    if (count > k) return;
    if (v == n) {
      if (count == k) out.push_back(detail::mask_to_vertices(chosen));
      return;
    }
    if (count + (n - v) < k) return;
    const std::uint64_t bit = std::uint64_t{1} << v;
    self(self, v + 1, chosen | bit, forced, count + 1);
    if (forced & bit) return;
    const std::uint64_t lower = bit - 1;
    if ((adj[v] & lower & ~chosen) != 0) return;
    self(self, v + 1, chosen, forced | (adj[v] & ~lower & ~bit), count);
  };
  rec(rec, 0, 0, 0, 0);
  return out;
}

}  // namespace evclab
