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

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "evclab/game/config.hpp"
#include "evclab/game/moves.hpp"
#include "evclab/game/strategy.hpp"
#include "evclab/graph.hpp"

namespace evclab {

using Json = nlohmann::ordered_json;

enum class Winner { None, Attacker, Defender };

inline const char* to_string(Winner w) {
  switch (w) {
    case Winner::None: return "none";
    case Winner::Attacker: return "attacker";
    case Winner::Defender: return "defender";
  }
  return "?";
}

// JSON-lines game record: place, then attack/defend pairs, then a verdict.
// Every event carries the full occupancy vector.
class Transcript {
 public:
  void place(const Graph& g, const GameSpec& spec, const GuardConfig& c,
             const std::string& attacker = {}, const std::string& defender = {}) {
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    Json ev{{"event", "place"},   {"ply", 0},          {"n", g.order()},
            {"edges", edges},     {"guards", spec.guards}, {"steps", spec.steps},
            {"variant", to_string(spec.variant)}};
    if (!attacker.empty()) ev["attacker"] = attacker;
    if (!defender.empty()) ev["defender"] = defender;
    ev["occupancy"] = c.count;
    events_.push_back(std::move(ev));
  }
  void attack(int ply, const Edge& e, const GuardConfig& c) {
    events_.push_back(
        {{"event", "attack"}, {"ply", ply}, {"edge", {e.u, e.v}}, {"occupancy", c.count}});
  }
  void defend(int ply, const Edge& e, const std::vector<GuardMove>& moves, const GuardConfig& c) {
    Json mv = Json::array();
    for (const auto& m : moves) mv.push_back({m.from, m.to});
    events_.push_back({{"event", "defend"},
                       {"ply", ply},
                       {"edge", {e.u, e.v}},
                       {"moves", mv},
                       {"occupancy", c.count}});
  }
  void verdict(int ply, Winner w, const std::string& reason, const GuardConfig& c) {
    events_.push_back({{"event", "verdict"},
                       {"ply", ply},
                       {"winner", to_string(w)},
                       {"reason", reason},
                       {"occupancy", c.count}});
  }

  const std::vector<Json>& events() const { return events_; }
  bool finished() const { return !events_.empty() && events_.back()["event"] == "verdict"; }

  std::string to_jsonl() const {
    std::string out;
    for (const auto& ev : events_) {
      out += ev.dump();
      out += '\n';
    }
    return out;
  }

 private:
  std::vector<Json> events_;
};

struct SimulationResult {
  Transcript transcript;
  Winner winner = Winner::None;
  int attacks = 0;
  GuardConfig final_config;
};

// One attack/defense exchange; shared by the simulator and the service.
struct PlyOutcome {
  bool defended = false;
  std::string reason;  // when not defended
  GuardConfig next;
  std::vector<GuardMove> moves;
};

inline PlyOutcome resolve_defense(const Graph& g, const GameSpec& spec, const GuardConfig& current,
                                  const Edge& e, const std::optional<GuardConfig>& answer) {
  PlyOutcome out;
  if (!current.occupied(e.u) && !current.occupied(e.v)) {
    out.reason = "edge " + to_string(e) + " uncovered";
    return out;
  }
  if (!answer) {
    out.reason = "no legal defense";
    return out;
  }
  const DefenseCheck chk = check_defense(g, spec, current, e, *answer);
  if (!chk.ok()) {
    out.reason = "illegal defense: " + chk.reason();
    return out;
  }
  out.defended = true;
  out.next = *answer;
  out.moves = chk.moves;
  return out;
}

inline SimulationResult simulate(const Graph& g, const GameSpec& spec, Attacker& attacker,
                                 Defender& defender, int max_attacks) {
  validate(g, spec);
  SimulationResult out;
  GuardConfig c = defender.place();
  if (auto p = config_problem(g, spec, c); !p.empty())
    throw std::invalid_argument("defender placement: " + p);
  out.transcript.place(g, spec, c, attacker.name(), defender.name());
  int ply = 0;
  while (ply < max_attacks) {
    const auto e = attacker.attack(c);
    if (!e) break;
    if (!g.has_edge(*e)) throw std::invalid_argument("attacker chose a non-edge " + to_string(*e));
    ++ply;
    out.transcript.attack(ply, *e, c);
    const PlyOutcome o = resolve_defense(g, spec, c, *e, defender.defend(c, *e));
    if (!o.defended) {
      out.winner = Winner::Attacker;
      out.transcript.verdict(ply, Winner::Attacker, o.reason, c);
      out.attacks = ply;
      out.final_config = c;
      return out;
    }
    c = o.next;
    out.transcript.defend(ply, *e, o.moves, c);
  }
  out.winner = Winner::Defender;
  out.attacks = ply;
  out.final_config = c;
  out.transcript.verdict(ply, Winner::Defender, "survived " + std::to_string(ply) + " attacks", c);
  return out;
}

struct ReplayResult {
  bool ok = false;
  std::string error;  // first mismatch, with its line number
  Graph graph;
  GameSpec spec;
  Transcript transcript;  // re-derived record
  GuardConfig final_config;
  Winner winner = Winner::None;
};

// Re-validates every move of a transcript and regenerates it; ok only when
// the regenerated text is byte-identical to the input.
inline ReplayResult replay(std::string_view jsonl) {
  ReplayResult out;
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(jsonl)};
    for (std::string line; std::getline(in, line);)
      if (!line.empty()) lines.push_back(line);
  }
  auto fail = [&](std::size_t i, const std::string& what) {
    out.ok = false;
    out.error = "line " + std::to_string(i + 1) + ": " + what;
    return out;
  };
  if (lines.empty()) return fail(0, "empty transcript");
  GuardConfig c;
  std::optional<Edge> pending;  // attack awaiting its defense
  int ply = 0;
  std::size_t i = 0;
  try {
    for (; i < lines.size(); ++i) {
      const Json ev = Json::parse(lines[i]);
      const std::string kind = ev.at("event");
      if (i == 0) {
        if (kind != "place") return fail(i, "first event must be place");
        std::vector<Edge> edges;
        for (const auto& e : ev.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        out.graph = Graph(ev.at("n").get<int>(), edges);
        out.spec = GameSpec{ev.at("guards").get<int>(),
                            parse_variant(ev.at("variant").get<std::string>()),
                            ev.at("steps").get<int>()};
        validate(out.graph, out.spec);
        c.count = ev.at("occupancy").get<std::vector<int>>();
        if (auto p = config_problem(out.graph, out.spec, c); !p.empty()) return fail(i, p);
        out.transcript.place(out.graph, out.spec, c, ev.value("attacker", std::string{}),
                             ev.value("defender", std::string{}));
      } else if (out.transcript.finished()) {
        return fail(i, "event after the verdict");
      } else if (kind == "attack") {
        if (pending) return fail(i, "attack while another attack is pending");
        const Edge e(ev.at("edge").at(0).get<int>(), ev.at("edge").at(1).get<int>());
        if (!out.graph.has_edge(e)) return fail(i, "not an edge");
        out.transcript.attack(++ply, e, c);
        pending = e;
      } else if (kind == "defend") {
        if (!pending) return fail(i, "defense without an attack");
        GuardConfig to;
        to.count = ev.at("occupancy").get<std::vector<int>>();
        const PlyOutcome o = resolve_defense(out.graph, out.spec, c, *pending, to);
        if (!o.defended) return fail(i, o.reason);
        c = o.next;
        out.transcript.defend(ply, *pending, o.moves, c);
        pending.reset();
      } else if (kind == "verdict") {
        const std::string w = ev.at("winner");
        std::string reason = ev.at("reason");
        if (w == "attacker") {
          // An unanswered attack must stand behind the attacker's win.
          if (!pending) return fail(i, "attacker wins without a pending attack");
          out.winner = Winner::Attacker;
          if (!c.occupied(pending->u) && !c.occupied(pending->v))
            reason = "edge " + to_string(*pending) + " uncovered";
        } else if (w == "defender") {
          if (pending) return fail(i, "defender wins with an unanswered attack");
          out.winner = Winner::Defender;
          reason = "survived " + std::to_string(ply) + " attacks";
        } else {
          return fail(i, "verdict without a winner");
        }
        out.transcript.verdict(ply, out.winner, reason, c);
      } else {
        return fail(i, "unexpected event '" + kind + "'");
      }
      if (out.transcript.events().back().dump() != lines[i]) {
        return fail(i, "does not match the replayed state");
      }
    }
  } catch (const std::exception& ex) {
    return fail(std::min(i, lines.size() - 1), ex.what());
  }
  out.final_config = c;
  out.ok = true;
  return out;
}

}  // namespace evclab
