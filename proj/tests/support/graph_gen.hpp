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

// Graphs up to isomorphism for exhaustive tests, by vertex extension and a
// canonical form from colour refinement plus individualization.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_set>
#include <vector>

#include "evclab/graph.hpp"

namespace evclab::testing {

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : n_(g.order()), adj_(g.order(), 0) {
    if (n_ > 11) throw std::invalid_argument("canonizer handles at most 11 vertices");
    for (const Edge& e : g.edges()) {
      adj_[e.u] |= 1U << e.v;
      adj_[e.v] |= 1U << e.u;
    }
  }

  // Largest upper-triangle code over all leaves of the search tree.
  std::uint64_t code() {
    best_ = 0;
    found_ = false;
    std::vector<std::vector<int>> cells{{}};
    for (int v = 0; v < n_; ++v) cells[0].push_back(v);
    if (n_ == 0) return 0;
    refine(cells);
    search(cells);
    return best_;
  }

 private:
  void refine(std::vector<std::vector<int>>& cells) const {
    for (bool changed = true; changed;) {
      changed = false;
      std::vector<int> cell_of(n_);
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
      std::vector<std::vector<int>> next;
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::map<std::vector<int>, std::vector<int>> split;
        for (int v : cell) {
          std::vector<int> sig(cells.size(), 0);
          for (int w = 0; w < n_; ++w)
            if ((adj_[v] >> w) & 1U) ++sig[cell_of[w]];
          split[sig].push_back(v);
        }
        if (split.size() > 1) changed = true;
        for (auto& [sig, part] : split) next.push_back(std::move(part));
      }
      cells = std::move(next);
    }
  }

  bool twins(int a, int b) const {
    const std::uint32_t mask = ~((1U << a) | (1U << b));
    return (adj_[a] & mask) == (adj_[b] & mask);
  }

  void search(const std::vector<std::vector<int>>& cells) {
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size()))
        target = c;
    if (target == cells.size()) {
      std::vector<int> order;
      for (const auto& c : cells) order.push_back(c[0]);
      std::uint64_t code = 0;
      int bit = 0;
      for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j, ++bit)
          if ((adj_[order[i]] >> order[j]) & 1U) code |= std::uint64_t{1} << bit;
      if (!found_ || code > best_) best_ = code;
      found_ = true;
      return;
    }
    std::vector<int> tried;
    for (int v : cells[target]) {
      if (std::any_of(tried.begin(), tried.end(), [&](int t) { return twins(t, v); })) continue;
      tried.push_back(v);
      std::vector<std::vector<int>> next;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          next.push_back(cells[c]);
          continue;
        }
        next.push_back({v});
        std::vector<int> rest;
        for (int w : cells[c])
          if (w != v) rest.push_back(w);
        next.push_back(std::move(rest));
      }
      refine(next);
      search(next);
    }
  }

  int n_;
  std::vector<std::uint32_t> adj_;
  std::uint64_t best_ = 0;
  bool found_ = false;
};

inline std::uint64_t canonical_code(const Graph& g) { return Canonizer(g).code(); }

inline Graph decode_graph(int n, std::uint64_t code) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if ((code >> bit) & 1U) edges.emplace_back(i, j);
  return Graph(n, edges);
}

enum class Family { All, Bipartite };

// One representative per isomorphism class on exactly n vertices.
inline std::vector<Graph> graphs_up_to_iso(int n, Family family = Family::All) {
  static std::map<std::pair<int, Family>, std::vector<Graph>> cache;
  if (auto it = cache.find({n, family}); it != cache.end()) return it->second;
  std::vector<Graph> out;
  if (n == 0) {
    out.push_back(Graph(0));
  } else {
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> codes;
    for (const Graph& base : graphs_up_to_iso(n - 1, family)) {
      for (std::uint32_t nb = 0; nb < (1U << (n - 1)); ++nb) {
        std::vector<Edge> edges(base.edges());
        for (int v = 0; v < n - 1; ++v)
          if ((nb >> v) & 1U) edges.emplace_back(v, n - 1);
        Graph g(n, edges);
        if (family == Family::Bipartite && std::holds_alternative<OddWalk>(bipartition(g))) continue;
        const std::uint64_t code = canonical_code(g);
        if (seen.insert(code).second) codes.push_back(code);
      }
    }
    std::sort(codes.begin(), codes.end());
    for (std::uint64_t c : codes) out.push_back(decode_graph(n, c));
  }
  cache[{n, family}] = out;
  return out;
}

inline std::vector<Graph> connected_only(std::vector<Graph> gs) {
  std::erase_if(gs, [](const Graph& g) { return !is_connected(g); });
  return gs;
}

}  // namespace evclab::testing
