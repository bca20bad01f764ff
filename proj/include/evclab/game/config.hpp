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
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "evclab/graph.hpp"

namespace evclab {

enum class Variant { OnePerVertex, MultiGuard };

inline const char* to_string(Variant v) {
  return v == Variant::OnePerVertex ? "one-per-vertex" : "multi-guard";
}

inline Variant parse_variant(std::string_view s) {
  if (s == "one" || s == "one-per-vertex" || s == "single") return Variant::OnePerVertex;
  if (s == "multi" || s == "multi-guard") return Variant::MultiGuard;
  throw std::invalid_argument("unknown variant '" + std::string(s) + "'");
}

struct GameSpec {
  int guards = 1;
  Variant variant = Variant::OnePerVertex;
  int steps = 1;  // 1 = classic, 2 = two-step variant
};

inline void validate(const Graph& g, const GameSpec& spec) {
  if (spec.guards < 1) throw std::invalid_argument("guard count must be at least 1");
  if (spec.steps < 1) throw std::invalid_argument("step bound must be at least 1");
  if (spec.variant == Variant::OnePerVertex && spec.guards > g.order()) {
    throw std::invalid_argument("more guards than vertices in the one-per-vertex variant");
  }
}

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t needed, std::uint64_t budget)
      : std::runtime_error("configuration space exceeds budget (" + std::to_string(needed) +
                           (needed > budget ? "" : "+") + " > " + std::to_string(budget) + ")"),
        needed_(needed), budget_(budget) {}
  std::uint64_t needed() const { return needed_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t needed_, budget_;
};

inline constexpr std::uint64_t kDefaultBudget = 5'000'000;

// EVCLAB_BUDGET overrides the compiled-in default.
inline std::uint64_t default_budget() {
  if (const char* env = std::getenv("EVCLAB_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

// Occupancy vector: number of guards on each vertex.
struct GuardConfig {
  std::vector<int> count;

  GuardConfig() = default;
  explicit GuardConfig(int n) : count(n, 0) {}

  static GuardConfig from_positions(int n, std::span<const Vertex> positions) {
    GuardConfig c(n);
    for (Vertex v : positions) {
      if (v < 0 || v >= n) throw std::out_of_range("guard on unknown vertex " + std::to_string(v));
      ++c.count[v];
    }
    return c;
  }
  static GuardConfig from_positions(int n, std::initializer_list<Vertex> positions) {
    return from_positions(n, std::span<const Vertex>(positions.begin(), positions.size()));
  }
  static GuardConfig from_mask(int n, std::uint64_t mask) {
    GuardConfig c(n);
    for (Vertex v = 0; v < n; ++v) c.count[v] = static_cast<int>((mask >> v) & 1U);
    return c;
  }

  int order() const { return static_cast<int>(count.size()); }
  int total() const {
    int t = 0;
    for (int c : count) t += c;
    return t;
  }
  int at(Vertex v) const { return count.at(v); }
  bool occupied(Vertex v) const { return count.at(v) > 0; }
  bool is_set() const {
    return std::all_of(count.begin(), count.end(), [](int c) { return c <= 1; });
  }

  std::vector<Vertex> positions() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < order(); ++v) out.insert(out.end(), count[v], v);
    return out;
  }
  std::vector<Vertex> support() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < order(); ++v)
      if (count[v] > 0) out.push_back(v);
    return out;
  }
  std::uint64_t mask() const {
    std::uint64_t m = 0;
    for (Vertex v = 0; v < order() && v < 64; ++v)
      if (count[v] > 0) m |= std::uint64_t{1} << v;
    return m;
  }

  friend bool operator==(const GuardConfig&, const GuardConfig&) = default;
  friend auto operator<=>(const GuardConfig& a, const GuardConfig& b) {
    return a.positions() <=> b.positions();
  }
};

inline std::string to_string(const GuardConfig& c) {
  std::string s = "{";
  bool first = true;
  for (Vertex v : c.positions()) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

inline std::optional<Edge> first_uncovered(const Graph& g, const GuardConfig& c) {
  for (const Edge& e : g.edges())
    if (!c.occupied(e.u) && !c.occupied(e.v)) return e;
  return std::nullopt;
}

inline bool covers(const Graph& g, const GuardConfig& c) { return !first_uncovered(g, c); }

// Checks a config against a spec; returns an empty string when it fits.
inline std::string config_problem(const Graph& g, const GameSpec& spec, const GuardConfig& c) {
  if (c.order() != g.order()) return "occupancy vector has wrong length";
  if (std::any_of(c.count.begin(), c.count.end(), [](int x) { return x < 0; }))
    return "negative guard count";
  if (c.total() != spec.guards) return "wrong guard count";
  if (spec.variant == Variant::OnePerVertex && !c.is_set()) return "more than one guard on a vertex";
  return {};
}

}  // namespace evclab
