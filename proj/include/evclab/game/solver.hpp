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
#include <optional>
#include <stdexcept>
#include <vector>

#include "evclab/game/config.hpp"
#include "evclab/game/moves.hpp"
#include "evclab/graph.hpp"
#include "evclab/vertex_cover.hpp"

namespace evclab {

// Greatest fixpoint over vertex-cover configurations: a config survives while
// every edge attack has a defense landing in a surviving config.
class FixpointSolver {
 public:
  FixpointSolver(const Graph& g, const GameSpec& spec, std::uint64_t budget = default_budget())
      : g_(g), spec_(spec), budget_(budget) {
    validate(g_, spec_);
    if (g_.order() > 64) throw std::invalid_argument("exact solver supports at most 64 vertices");
    if (spec_.guards > 63) throw BudgetExceeded(spec_.guards, 63);
    base_ = spec_.variant == Variant::OnePerVertex ? 2 : spec_.guards + 1;
    {
      // base^n must fit in 64 bits
      long double span = 1;
      for (int v = 0; v < g_.order(); ++v) span *= base_;
      if (span > 1.8e19L) throw BudgetExceeded(UINT64_MAX, budget_);
    }
    build_reach();
    enumerate();
    eliminate();
  }

  const Graph& graph() const { return g_; }
  const GameSpec& spec() const { return spec_; }
  std::uint64_t cover_configs() const { return codes_.size(); }
  int rounds() const { return rounds_; }
  bool empty() const { return alive_count_ == 0; }
  std::size_t winning_count() const { return alive_count_; }

  std::vector<GuardConfig> winning() const {
    std::vector<GuardConfig> out;
    for (std::size_t i = 0; i < codes_.size(); ++i)
      if (alive_[i]) out.push_back(decode(i));
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_winning(const GuardConfig& c) const {
    const auto i = index_of(c);
    return i && alive_[*i];
  }

  // A defense into the winning set, if one exists.
  std::optional<GuardConfig> respond(const GuardConfig& from, const Edge& e) const {
    const int ei = g_.edge_index(e);
    if (ei < 0 || from.order() != g_.order() || from.total() != spec_.guards) return std::nullopt;
    if (const auto i = index_of(from); i && alive_[*i]) {
      const std::int32_t w = witness_[*i * edges_ + ei];
      if (w >= 0 && alive_[w]) return decode(w);
    }
    const std::vector<Vertex> units = from.positions();
    for (std::size_t j = 0; j < codes_.size(); ++j)
      if (alive_[j] && defends(units.data(), ei, j)) return decode(j);
    return std::nullopt;
  }

 private:
  void build_reach() {
    moves_.emplace(g_, spec_.steps);
    edges_ = g_.size();
  }

  void enumerate() {
    const int n = g_.order();
    const int k = spec_.guards;
    const int cap = spec_.variant == Variant::OnePerVertex ? 1 : k;
    std::vector<int> count(n, 0);
    std::vector<std::uint64_t> pow(n + 1, 1);
    for (int v = 1; v <= n; ++v) pow[v] = pow[v - 1] * base_;
    auto rec = [&](auto&& self, Vertex v, int left, std::uint64_t code) -> void {
      if (v == n) {
        if (left == 0) {
          if (codes_.size() >= budget_) throw BudgetExceeded(codes_.size() + 1, budget_);
          codes_.push_back(code);
        }
        return;
      }
      // remaining capacity must absorb the guards still to place
      if (static_cast<long long>(cap) * (n - v) < left) return;
      for (int c = 0; c <= std::min(cap, left); ++c) {
        if (c == 0) {
          bool ok = true;
          for (Vertex w : g_.neighbors(v)) {
            if (w < v && count[w] == 0) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
        }
        count[v] = c;
        self(self, v + 1, left - c, code + pow[v] * c);
      }
      count[v] = 0;
    };
    rec(rec, 0, k, 0);
    std::sort(codes_.begin(), codes_.end());
    units_.resize(codes_.size() * k);
    for (std::size_t i = 0; i < codes_.size(); ++i) {
      std::uint64_t code = codes_[i];
      int t = 0;
      for (Vertex v = 0; v < n; ++v) {
        const int c = static_cast<int>(code % base_);
        code /= base_;
        for (int r = 0; r < c; ++r) units_[i * k + t++] = static_cast<std::uint8_t>(v);
      }
    }
  }

  std::optional<std::size_t> index_of(const GuardConfig& c) const {
    if (c.order() != g_.order() || c.total() != spec_.guards) return std::nullopt;
    std::uint64_t code = 0, p = 1;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (c.count[v] >= base_) return std::nullopt;
      code += p * static_cast<std::uint64_t>(c.count[v]);
      p *= base_;
    }
    auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
    if (it == codes_.end() || *it != code) return std::nullopt;
    return static_cast<std::size_t>(it - codes_.begin());
  }

  GuardConfig decode(std::size_t i) const {
    GuardConfig c(g_.order());
    for (int t = 0; t < spec_.guards; ++t) ++c.count[units_[i * spec_.guards + t]];
    return c;
  }

  template <class Unit>
  bool defends(const Unit* src, int ei, std::size_t j) const {
    return moves_->defends(src, &units_[j * spec_.guards], spec_.guards, g_.edges()[ei]);
  }

  void eliminate() {
    const std::size_t n = codes_.size();
    const int k = spec_.guards;
    alive_.assign(n, 1);
    alive_count_ = n;
    witness_.assign(n * edges_, -1);
    bool changed = true;
    while (changed) {
      changed = false;
      ++rounds_;
      for (std::size_t i = 0; i < n; ++i) {
        if (!alive_[i]) continue;
        for (int e = 0; e < edges_; ++e) {
          std::int32_t& w = witness_[i * edges_ + e];
          if (w >= 0 && alive_[w]) continue;
          std::size_t j = w < 0 ? 0 : static_cast<std::size_t>(w) + 1;
          for (; j < n; ++j)
            if (alive_[j] && defends(&units_[i * k], e, j)) break;
          if (j == n) {
            alive_[i] = 0;
            --alive_count_;
            changed = true;
            break;
          }
          w = static_cast<std::int32_t>(j);
        }
      }
    }
  }

  Graph g_;
  GameSpec spec_;
  std::uint64_t budget_;
  int base_ = 2;
  int edges_ = 0;
  int rounds_ = 0;
  std::optional<MoveTable> moves_;
  std::vector<std::uint64_t> codes_;
  std::vector<std::uint8_t> units_;
  std::vector<char> alive_;
  std::size_t alive_count_ = 0;
  std::vector<std::int32_t> witness_;
};

inline std::vector<GuardConfig> winning_configs(const Graph& g, const GameSpec& spec,
                                                std::uint64_t budget = default_budget()) {
  return FixpointSolver(g, spec, budget).winning();
}

inline bool winnable(const Graph& g, const GameSpec& spec, std::uint64_t budget = default_budget()) {
  return !FixpointSolver(g, spec, budget).empty();
}

struct ExactValue {
  int value = 0;
  GuardConfig witness;  // smallest winning config at that guard count
  std::uint64_t configs = 0;  // vertex-cover configs examined at the final count
};

// Least k admitting a winning config, searched upward from mvc.
inline ExactValue solve_exact(const Graph& g, int steps, Variant variant,
                              std::uint64_t budget = default_budget()) {
  ExactValue out;
  out.witness = GuardConfig(g.order());
  if (g.size() == 0) return out;
  const int lo = mvc_size(g);
  const int hi = std::max(g.order(), 2 * lo);
  for (int k = lo; k <= hi; ++k) {
    if (variant == Variant::OnePerVertex && k > g.order()) break;
    FixpointSolver solver(g, GameSpec{k, variant, steps}, budget);
    if (!solver.empty()) {
      out.value = k;
      out.witness = solver.winning().front();
      out.configs = solver.cover_configs();
      return out;
    }
  }
  throw std::logic_error("no winning guard count found");
}

inline int evc_exact(const Graph& g, Variant variant = Variant::OnePerVertex,
                     std::uint64_t budget = default_budget()) {
  return solve_exact(g, 1, variant, budget).value;
}

inline int nevc_exact(const Graph& g, Variant variant = Variant::OnePerVertex,
                      std::uint64_t budget = default_budget()) {
  return solve_exact(g, 2, variant, budget).value;
}

inline int sevc_exact(const Graph& g, int steps, Variant variant = Variant::OnePerVertex,
                      std::uint64_t budget = default_budget()) {
  return solve_exact(g, steps, variant, budget).value;
}

}  // namespace evclab
