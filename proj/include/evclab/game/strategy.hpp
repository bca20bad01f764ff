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

#include <deque>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "evclab/game/config.hpp"
#include "evclab/game/moves.hpp"
#include "evclab/game/solver.hpp"
#include "evclab/graph.hpp"
#include "evclab/vertex_cover.hpp"

namespace evclab {

class Defender {
 public:
  virtual ~Defender() = default;
  virtual std::string name() const = 0;
  virtual GuardConfig place() = 0;
  // nullopt: the defender has no answer (it loses).
  virtual std::optional<GuardConfig> defend(const GuardConfig& current, const Edge& attacked) = 0;
  virtual bool optimal() const { return true; }
};

class Attacker {
 public:
  virtual ~Attacker() = default;
  virtual std::string name() const = 0;
  // nullopt: the attacker passes (the game stops).
  virtual std::optional<Edge> attack(const GuardConfig& current) = 0;
};

class RandomAttacker : public Attacker {
 public:
  RandomAttacker(const Graph& g, std::uint64_t seed) : edges_(g.edges()), rng_(seed) {}
  std::string name() const override { return "random"; }
  std::optional<Edge> attack(const GuardConfig&) override {
    if (edges_.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> pick(0, edges_.size() - 1);
    return edges_[pick(rng_)];
  }

 private:
  std::vector<Edge> edges_;
  std::mt19937_64 rng_;
};

class ScriptedAttacker : public Attacker {
 public:
  explicit ScriptedAttacker(std::vector<Edge> script) : script_(script.begin(), script.end()) {}
  std::string name() const override { return "scripted"; }
  std::optional<Edge> attack(const GuardConfig&) override {
    if (script_.empty()) return std::nullopt;
    const Edge e = script_.front();
    script_.pop_front();
    return e;
  }

 private:
  std::deque<Edge> script_;
};

// Plays out of the winning set when it can: an uncovered edge first, then an
// edge with no defense back into the winning set, otherwise a random edge.
class SolverAttacker : public Attacker {
 public:
  SolverAttacker(std::shared_ptr<const FixpointSolver> solver, std::uint64_t seed)
      : solver_(std::move(solver)), fallback_(solver_->graph(), seed) {}
  std::string name() const override { return "solver"; }
  std::optional<Edge> attack(const GuardConfig& current) override {
    const Graph& g = solver_->graph();
    if (auto e = first_uncovered(g, current)) return e;
    if (!solver_->is_winning(current)) {
      for (const Edge& e : g.edges())
        if (!solver_->respond(current, e)) return e;
    }
    return fallback_.attack(current);
  }

 private:
  std::shared_ptr<const FixpointSolver> solver_;
  RandomAttacker fallback_;
};

namespace detail {

// Crosser steps across the attacked edge, then guards shift one step at a
// time along a shortest path toward the vacated vertex until the cover
// property is restored. Returns nullopt when the attacked edge is unguarded.
inline std::optional<GuardConfig> cover_restoring_move(const Graph& g, const GameSpec& spec,
                                                       const GuardConfig& current, const Edge& e) {
  Vertex x = -1;
  if (current.occupied(e.u) && !current.occupied(e.v)) x = e.u;
  else if (current.occupied(e.v) && !current.occupied(e.u)) x = e.v;
  else if (current.occupied(e.u)) x = e.u;
  if (x < 0) return std::nullopt;
  const Vertex y = e.other(x);
  GuardConfig next = current;
  --next.count[x];
  ++next.count[y];
  if (spec.variant == Variant::OnePerVertex && next.count[y] > 1) {
    // both endpoints guarded: swap
    ++next.count[x];
    --next.count[y];
    return next;
  }
  if (covers(g, next)) return next;
  // BFS from x over guarded vertices other than the one just filled.
  std::vector<Vertex> via(g.order(), -2);
  std::deque<Vertex> queue{x};
  via[x] = -1;
  while (!queue.empty()) {
    const Vertex cur = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(cur)) {
      if (via[w] != -2 || w == y || !current.occupied(w)) continue;
      via[w] = cur;
      GuardConfig trial = next;
      for (Vertex p = w; via[p] != -1; p = via[p]) {
        --trial.count[p];
        ++trial.count[via[p]];
      }
      if (covers(g, trial) && check_defense(g, spec, current, e, trial).ok()) return trial;
      queue.push_back(w);
    }
  }
  return next;
}

}  // namespace detail

// Heuristic defender for instances beyond the exact solver. Not optimal.
class GreedyDefender : public Defender {
 public:
  GreedyDefender(const Graph& g, const GameSpec& spec) : g_(g), spec_(spec) {}
  std::string name() const override { return "greedy (non-optimal)"; }
  bool optimal() const override { return false; }
  GuardConfig place() override {
    std::vector<Vertex> cover;
    if (g_.order() <= kDefaultOracleBound) cover = min_vertex_cover_exhaustive(g_);
    else if (auto bg = bipartition(g_); std::holds_alternative<BipartiteGraph>(bg))
      cover = min_vertex_cover(std::get<BipartiteGraph>(bg)).vertices;
    else
      for (const Edge& e : g_.edges())
        if (std::find(cover.begin(), cover.end(), e.u) == cover.end() &&
            std::find(cover.begin(), cover.end(), e.v) == cover.end()) {
          cover.push_back(e.u);
          cover.push_back(e.v);
        }
    GuardConfig c = GuardConfig::from_positions(g_.order(), cover);
    // pad or trim to the spec's guard count
    for (Vertex v = 0; c.total() < spec_.guards; v = (v + 1) % std::max(1, g_.order())) {
      if (spec_.variant == Variant::MultiGuard || c.count[v] == 0) ++c.count[v];
    }
    for (Vertex v = g_.order() - 1; c.total() > spec_.guards && v >= 0;) {
      if (c.count[v] > 0) --c.count[v];
      else --v;
    }
    return c;
  }
  std::optional<GuardConfig> defend(const GuardConfig& current, const Edge& e) override {
    return detail::cover_restoring_move(g_, spec_, current, e);
  }

 private:
  Graph g_;
  GameSpec spec_;
};

// Stays inside the greatest winning set; outside it, picks the first legal
// covering response, then any legal response.
class SolverDefender : public Defender {
 public:
  explicit SolverDefender(std::shared_ptr<const FixpointSolver> solver)
      : solver_(std::move(solver)), table_(solver_->graph(), solver_->spec().steps) {}
  std::string name() const override { return "exhaustive"; }
  GuardConfig place() override {
    auto w = solver_->winning();
    if (!w.empty()) return w.front();
    const Graph& g = solver_->graph();
    std::optional<GuardConfig> first;
    for_each_config(g.order(), solver_->spec().guards, solver_->spec().variant,
                    [&](const GuardConfig& c) {
                      if (!first && covers(g, c)) first = c;
                    });
    return first ? *first : GuardConfig(g.order());
  }
  std::optional<GuardConfig> defend(const GuardConfig& current, const Edge& e) override {
    if (auto r = solver_->respond(current, e)) return r;
    const auto options = legal_defenses(solver_->graph(), solver_->spec(), current, e, &table_);
    for (const auto& c : options)
      if (covers(solver_->graph(), c)) return c;
    if (!options.empty()) return options.front();
    return std::nullopt;
  }

 private:
  std::shared_ptr<const FixpointSolver> solver_;
  MoveTable table_;
};

}  // namespace evclab
