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

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "evclab/elementary.hpp"
#include "evclab/game/certificates.hpp"
#include "evclab/game/simulate.hpp"
#include "evclab/game/solver.hpp"
#include "evclab/game/strategy.hpp"
#include "evclab/json_io.hpp"
#include "evclab/nevc.hpp"
#include "evclab/report.hpp"

namespace evclab {

struct ApiResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";

  Json json() const { return Json::parse(body); }
};

enum class HumanRole { Attacker, Defender, None };

inline const char* to_string(HumanRole r) {
  switch (r) {
    case HumanRole::Attacker: return "attacker";
    case HumanRole::Defender: return "defender";
    case HumanRole::None: return "none";
  }
  return "?";
}

struct EngineDefender {
  std::unique_ptr<Defender> defender;
  std::string kind;  // certificate | exhaustive | greedy
};

struct EngineAttacker {
  std::unique_ptr<Attacker> attacker;
  std::string kind;  // certificate | exhaustive | random
};

// Certificate when the graph is essentially elementary, the winning-set
// policy when the solver fits the budget, otherwise a heuristic.
inline EngineDefender make_engine_defender(const Graph& g, const GameSpec& spec, std::uint64_t budget) {
  auto bip = bipartition(g);
  if (auto* bg = std::get_if<BipartiteGraph>(&bip)) {
    if (is_essentially_elementary(*bg).essentially_elementary && maximum_matching(*bg).size() == spec.guards &&
        spec.variant == Variant::OnePerVertex) {
      return {std::make_unique<ElementaryDefender>(*bg), "certificate"};
    }
  }
  try {
    auto solver = std::make_shared<const FixpointSolver>(g, spec, budget);
    return {std::make_unique<SolverDefender>(solver), "exhaustive"};
  } catch (const BudgetExceeded&) {
  } catch (const std::invalid_argument&) {
  }
  if (spec.steps >= 2 && spec.variant == Variant::OnePerVertex && is_connected(g)) {
    auto d = std::make_unique<NevcDefender>(g);
    if (d->spec().guards == spec.guards) return {std::move(d), "certificate"};
  }
  return {std::make_unique<GreedyDefender>(g, spec), "greedy"};
}

inline EngineAttacker make_engine_attacker(const Graph& g, const GameSpec& spec, std::uint64_t budget,
                                           std::uint64_t seed) {
  auto bip = bipartition(g);
  if (auto* bg = std::get_if<BipartiteGraph>(&bip); bg && spec.steps == 1) {
    if (maximum_matching(*bg).size() == spec.guards) {
      if (auto cert = attacker_certificate_bipartite(*bg))
        return {std::make_unique<CertificateAttacker>(g, std::move(*cert)), "certificate"};
    }
  }
  try {
    auto solver = std::make_shared<const FixpointSolver>(g, spec, budget);
    return {std::make_unique<SolverAttacker>(solver, seed), "exhaustive"};
  } catch (const BudgetExceeded&) {
  } catch (const std::invalid_argument&) {
  }
  return {std::make_unique<RandomAttacker>(g, seed), "random"};
}

struct ServiceOptions {
  std::uint64_t budget = default_budget();
  std::chrono::seconds idle_timeout{1800};
  std::uint64_t seed = 0x5eed;
  std::size_t legal_listing_limit = 16;  // list legal defenses only up to this many vertices
};

class SessionService {
 public:
  using Clock = std::chrono::steady_clock;

  explicit SessionService(ServiceOptions opt = {}) : opt_(opt), rng_(opt.seed) {}

  void set_clock(std::function<Clock::time_point()> clock) { clock_ = std::move(clock); }

  std::size_t session_count() const {
    std::shared_lock lock(mu_);
    return sessions_.size();
  }

  std::size_t evict_idle() {
    const auto now = clock_();
    std::unique_lock lock(mu_);
    return std::erase_if(sessions_, [&](const auto& kv) {
      return now - kv.second->last_access() > opt_.idle_timeout;
    });
  }

  ApiResponse handle(std::string_view method, std::string_view path, std::string_view body) {
    evict_idle();
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < path.size();) {
      const std::size_t j = std::min(path.find('/', i), path.size());
      if (j > i) parts.emplace_back(path.substr(i, j - i));
      i = j + 1;
    }
    try {
      if (parts.size() < 2 || parts[0] != "api") return error(404, "no such endpoint");
      if (parts[1] == "graphs") {
        if (parts.size() == 2 && method == "POST") return upload_graph(body);
        if (parts.size() == 3 && method == "GET") return get_graph(parts[2]);
      } else if (parts[1] == "sessions") {
        if (parts.size() == 2 && method == "POST") return create_session(body);
        if (parts.size() == 3 && method == "GET") return with_session(parts[2], false, [&](Session& s) {
            return ok(state_json(s));
          });
        if (parts.size() == 4 && method == "GET" && parts[3] == "transcript") {
          return with_session(parts[2], false, [&](Session& s) {
            return ApiResponse{200, s.transcript.to_jsonl(), "application/x-ndjson"};
          });
        }
        if (parts.size() == 4 && method == "POST") {
          const Json req = parse_body(body);
          if (parts[3] == "attack") return with_session(parts[2], true, [&](Session& s) { return attack(s, req); });
          if (parts[3] == "defend") return with_session(parts[2], true, [&](Session& s) { return defend(s, req); });
          if (parts[3] == "step") return with_session(parts[2], true, [&](Session& s) { return step(s); });
        }
      }
      return error(404, "no such endpoint");
    } catch (const BadRequest& ex) {
      return error(400, ex.what());
    } catch (const nlohmann::json::exception& ex) {
      return error(400, std::string("malformed request: ") + ex.what());
    } catch (const std::invalid_argument& ex) {
      return error(400, ex.what());
    } catch (const std::out_of_range& ex) {
      return error(400, ex.what());
    }
  }

 private:
  struct BadRequest : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
  };

  struct Session {
    std::string id;
    std::string graph_id;
    Graph graph;
    GameSpec spec;
    HumanRole role = HumanRole::Attacker;
    GuardConfig state;
    Transcript transcript;
    std::optional<Edge> pending;
    Winner winner = Winner::None;
    std::string reason;
    int ply = 0;
    EngineDefender defender;
    EngineAttacker attacker;
    std::atomic<Clock::rep> touched{0};
    mutable std::shared_mutex mu;

    Clock::time_point last_access() const { return Clock::time_point(Clock::duration(touched.load())); }
  };

  struct StoredGraph {
    Graph graph;
    Json analysis;
  };

  static ApiResponse ok(const Json& j) { return {200, j.dump(), "application/json"}; }
  static ApiResponse error(int status, const std::string& what) {
    return {status, Json{{"error", what}}.dump(), "application/json"};
  }

  static Json parse_body(std::string_view body) {
    if (body.empty()) return Json::object();
    Json j = Json::parse(body, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw BadRequest("malformed JSON body");
    return j;
  }

  template <class F>
  ApiResponse with_session(const std::string& id, bool write, F&& f) {
    std::shared_ptr<Session> s;
    {
      std::shared_lock lock(mu_);
      auto it = sessions_.find(id);
      if (it == sessions_.end()) return error(404, "unknown session");
      s = it->second;
    }
    s->touched = clock_().time_since_epoch().count();
    if (write) {
      std::unique_lock lock(s->mu);
      return f(*s);
    }
    std::shared_lock lock(s->mu);
    return f(*s);
  }

  ApiResponse upload_graph(std::string_view body) {
    std::string text(body);
    if (Json j = Json::parse(body, nullptr, false); !j.is_discarded() && j.is_object()) {
      if (!j.contains("text")) throw BadRequest("expected field 'text' with an edge list");
      text = j.at("text").get<std::string>();
    }
    Graph g;
    try {
      g = parse_graph(text);
    } catch (const GraphError& ex) {
      throw BadRequest(ex.what());
    }
    const Analysis a = analyze(g, AnalyzeOptions{false, false, opt_.budget});
    std::unique_lock lock(mu_);
    const std::string id = "g" + std::to_string(++graph_counter_);
    graphs_[id] = StoredGraph{g, a.json};
    return ok({{"id", id}, {"analysis", a.json}, {"summary", a.lines}});
  }

  ApiResponse get_graph(const std::string& id) {
    std::shared_lock lock(mu_);
    auto it = graphs_.find(id);
    if (it == graphs_.end()) return error(404, "unknown graph");
    return ok({{"id", id}, {"analysis", it->second.analysis}});
  }

  int default_guards(const Graph& g, const GameSpec& spec) const {
    if (spec.steps >= 2 && spec.variant == Variant::OnePerVertex) return std::max(1, nevc_verdict(g).nevc);
    if (auto bip = bipartition(g); auto* bg = std::get_if<BipartiteGraph>(&bip)) {
      if (is_essentially_elementary(*bg).essentially_elementary) return std::max(1, maximum_matching(*bg).size());
    }
    try {
      return std::max(1, solve_exact(g, spec.steps, spec.variant, opt_.budget).value);
    } catch (const std::exception&) {
      return std::max(1, 2 * mvc_size(g));
    }
  }

  ApiResponse create_session(std::string_view body) {
    const Json req = parse_body(body);
    Graph g;
    std::string graph_id;
    if (req.contains("graph")) {
      graph_id = req.at("graph").get<std::string>();
      std::shared_lock lock(mu_);
      auto it = graphs_.find(graph_id);
      if (it == graphs_.end()) return error(404, "unknown graph");
      g = it->second.graph;
    } else if (req.contains("text")) {
      try {
        g = parse_graph(req.at("text").get<std::string>());
      } catch (const GraphError& ex) {
        throw BadRequest(ex.what());
      }
    } else {
      throw BadRequest("expected 'graph' (uploaded id) or 'text' (edge list)");
    }
    if (g.size() == 0) throw BadRequest("graph has no edges");

    auto s = std::make_shared<Session>();
    s->graph = g;
    s->graph_id = graph_id;
    const std::string role = req.value("role", std::string("attacker"));
    if (role == "attacker") s->role = HumanRole::Attacker;
    else if (role == "defender") s->role = HumanRole::Defender;
    else if (role == "none") s->role = HumanRole::None;
    else throw BadRequest("role must be attacker, defender or none");
    s->spec.steps = req.value("steps", 1);
    s->spec.variant = parse_variant(req.value("variant", std::string("one-per-vertex")));
    s->spec.guards = req.contains("guards") ? req.at("guards").get<int>() : default_guards(g, s->spec);
    validate(g, s->spec);
    const std::uint64_t seed = req.value("seed", opt_.seed);

    if (s->role != HumanRole::Defender) s->defender = make_engine_defender(g, s->spec, opt_.budget);
    if (s->role != HumanRole::Attacker) s->attacker = make_engine_attacker(g, s->spec, opt_.budget, seed);

    if (req.contains("placement")) {
      s->state = GuardConfig::from_positions(g.order(), req.at("placement").get<std::vector<Vertex>>());
    } else if (s->defender.defender) {
      s->state = s->defender.defender->place();
    } else {
      s->state = make_engine_defender(g, s->spec, opt_.budget).defender->place();
    }
    if (auto p = config_problem(g, s->spec, s->state); !p.empty()) throw BadRequest("placement: " + p);
    s->transcript.place(g, s->spec, s->state,
                        s->attacker.attacker ? s->attacker.attacker->name() : "human",
                        s->defender.defender ? s->defender.defender->name() : "human");
    if (s->role == HumanRole::Defender) engine_attack(*s);

    s->touched = clock_().time_since_epoch().count();
    {
      std::unique_lock lock(mu_);
      do {
        s->id = token();
      } while (sessions_.count(s->id));
      sessions_[s->id] = s;
    }
    std::shared_lock lock(s->mu);
    return ok(state_json(*s));
  }

  std::string token() {
    static const char* hex = "0123456789abcdef";
    std::string t;
    std::uint64_t x = rng_();
    for (int i = 0; i < 16; ++i, x >>= 4) t += hex[x & 15U];
    return t;
  }

  std::string turn(const Session& s) const {
    if (s.winner != Winner::None) return "over";
    return s.pending ? "defender" : "attacker";
  }

  Json state_json(const Session& s) const {
    Json j{{"id", s.id},
           {"graph", to_json(s.graph)},
           {"guards", s.spec.guards},
           {"steps", s.spec.steps},
           {"variant", to_string(s.spec.variant)},
           {"role", to_string(s.role)},
           {"occupancy", s.state.count},
           {"positions", s.state.positions()},
           {"ply", s.ply},
           {"turn", turn(s)},
           {"winner", to_string(s.winner)}};
    if (!s.graph_id.empty()) j["graph_id"] = s.graph_id;
    j["pending_attack"] = s.pending ? to_json(*s.pending) : Json(nullptr);
    if (!s.reason.empty()) j["reason"] = s.reason;
    Json engine = Json::object();
    if (s.defender.defender) {
      engine["defender"] = {{"kind", s.defender.kind},
                            {"name", s.defender.defender->name()},
                            {"optimal", s.defender.defender->optimal()}};
      if (!s.defender.defender->optimal()) engine["defender"]["note"] = "heuristic, not optimal";
    }
    if (s.attacker.attacker)
      engine["attacker"] = {{"kind", s.attacker.kind}, {"name", s.attacker.attacker->name()}};
    j["engine"] = engine;
    Json legal = Json::object();
    if (s.winner == Winner::None && !s.pending) {
      legal["attacks"] = to_json(s.graph.edges());
    } else if (s.winner == Winner::None && s.graph.order() <= static_cast<int>(opt_.legal_listing_limit)) {
      Json defenses = Json::array();
      for (const auto& c : legal_defenses(s.graph, s.spec, s.state, *s.pending))
        defenses.push_back(c.positions());
      legal["defenses"] = defenses;
    }
    j["legal"] = legal;
    return j;
  }

  void finish(Session& s, Winner w, const std::string& reason) {
    s.winner = w;
    s.reason = reason;
    s.pending.reset();
    s.transcript.verdict(s.ply, w, reason, s.state);
  }

  // Engine attacker moves; an unguarded edge ends the game at once.
  void engine_attack(Session& s) {
    const auto e = s.attacker.attacker->attack(s.state);
    if (!e) return;
    ++s.ply;
    s.transcript.attack(s.ply, *e, s.state);
    if (!s.state.occupied(e->u) && !s.state.occupied(e->v)) {
      finish(s, Winner::Attacker, "edge " + to_string(*e) + " uncovered");
      return;
    }
    s.pending = e;
  }

  // Engine defender answers the pending attack.
  Json engine_defend(Session& s) {
    const Edge e = *s.pending;
    const PlyOutcome o = resolve_defense(s.graph, s.spec, s.state, e, s.defender.defender->defend(s.state, e));
    Json last{{"attack", to_json(e)}, {"defended", o.defended}};
    s.pending.reset();
    if (!o.defended) {
      last["reason"] = o.reason;
      finish(s, Winner::Attacker, o.reason);
      return last;
    }
    s.state = o.next;
    s.transcript.defend(s.ply, e, o.moves, s.state);
    Json mv = Json::array();
    for (const auto& m : o.moves) mv.push_back({m.from, m.to});
    last["moves"] = mv;
    return last;
  }

  static Edge parse_edge(const Json& req) {
    if (!req.contains("edge") || !req.at("edge").is_array() || req.at("edge").size() != 2)
      throw BadRequest("expected 'edge': [u, v]");
    return Edge(req.at("edge").at(0).get<int>(), req.at("edge").at(1).get<int>());
  }

  ApiResponse attack(Session& s, const Json& req) {
    if (s.winner != Winner::None) return error(409, "game over");
    if (s.role != HumanRole::Attacker) return error(409, "the attacker is played by the engine");
    if (s.pending) return error(409, "not the attacker's turn");
    const Edge e = parse_edge(req);
    if (!s.graph.has_edge(e)) return error(400, "not an edge");
    ++s.ply;
    s.transcript.attack(s.ply, e, s.state);
    s.pending = e;
    Json j = Json::object();
    j["last"] = engine_defend(s);
    j.update(state_json(s));
    return ok(j);
  }

  ApiResponse defend(Session& s, const Json& req) {
    if (s.winner != Winner::None) return error(409, "game over");
    if (s.role != HumanRole::Defender) return error(409, "the defender is played by the engine");
    if (!s.pending) return error(409, "no attack to answer");
    GuardConfig to;
    if (req.contains("occupancy")) {
      to.count = req.at("occupancy").get<std::vector<int>>();
    } else if (req.contains("guards")) {
      to = GuardConfig::from_positions(s.graph.order(), req.at("guards").get<std::vector<Vertex>>());
    } else {
      throw BadRequest("expected 'guards' (positions) or 'occupancy'");
    }
    const DefenseCheck chk = check_defense(s.graph, s.spec, s.state, *s.pending, to);
    if (!chk.ok()) return error(400, chk.reason());
    const Edge e = *s.pending;
    s.pending.reset();
    s.state = to;
    s.transcript.defend(s.ply, e, chk.moves, s.state);
    engine_attack(s);
    return ok(state_json(s));
  }

  ApiResponse step(Session& s) {
    if (s.role != HumanRole::None) return error(409, "step is only for engine-vs-engine sessions");
    if (s.winner != Winner::None) return error(409, "game over");
    engine_attack(s);
    Json j = Json::object();
    if (s.pending) j["last"] = engine_defend(s);
    j.update(state_json(s));
    return ok(j);
  }

  ServiceOptions opt_;
  std::function<Clock::time_point()> clock_ = [] { return Clock::now(); };
  mutable std::shared_mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::map<std::string, StoredGraph> graphs_;
  std::uint64_t graph_counter_ = 0;
  std::mt19937_64 rng_;
};

}  // namespace evclab
