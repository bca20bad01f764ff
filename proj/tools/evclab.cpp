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

#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <httplib.h>

#include "evclab/contraction.hpp"
#include "evclab/game/certificates.hpp"
#include "evclab/game/simulate.hpp"
#include "evclab/game/solver.hpp"
#include "evclab/json_io.hpp"
#include "evclab/nevc.hpp"
#include "evclab/report.hpp"
#include "evclab/service.hpp"
#include "evclab/service_http.hpp"

namespace {

using namespace evclab;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_analyze(const std::string& path, bool json, bool bip, bool exact, std::uint64_t budget) {
  const Graph g = read_graph_file(path);
  try {
    const Analysis a = analyze(g, AnalyzeOptions{bip, exact, budget});
    if (json) std::cout << a.json.dump(2) << '\n';
    else std::cout << a.text();
  } catch (const NotBipartite& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 1;
  }
  return 0;
}

int run_solve(const std::string& path, const std::string& mode, int steps, const std::string& variant,
              std::uint64_t budget, bool json) {
  const Graph g = read_graph_file(path);
  if (mode == "evc") steps = 1;
  else if (mode == "nevc") steps = 2;
  else if (mode != "sevc") throw CLI::ValidationError("--mode", "expected evc, nevc or sevc");
  const Variant v = parse_variant(variant);
  try {
    const ExactValue r = solve_exact(g, steps, v, budget);
    if (json) {
      std::cout << Json{{"mode", mode},
                        {"steps", steps},
                        {"variant", to_string(v)},
                        {"value", r.value},
                        {"witness", r.witness.positions()},
                        {"configs", r.configs}}
                       .dump(2)
                << '\n';
    } else {
      std::cout << r.value << '\n'
                << "witness: " << to_string(r.witness) << '\n'
                << "(" << mode << ", steps = " << steps << ", " << to_string(v) << ", " << r.configs
                << " cover configs at the optimum)\n";
    }
  } catch (const BudgetExceeded& ex) {
    std::cerr << "refused: " << ex.what() << '\n';
    return 2;
  }
  return 0;
}

int run_certify(const std::string& path, bool prefer_contraction, bool verify) {
  const Graph g = read_graph_file(path);
  const BipartiteGraph bg = make_bipartite(g);
  const Analysis a = analyze(g, AnalyzeOptions{true, false, default_budget()});
  Json out{{"graph", to_json(g)}, {"bipartition", to_json(bg)}, {"spartan", a.json["spartan"]},
           {"contraction", a.json["contraction"]}};
  if (auto cert = attacker_certificate_bipartite(bg, AttackerOptions{prefer_contraction})) {
    out["certificate"] = to_json(*cert);
    if (verify) {
      const AttackVerification av = verify_attacker_certificate(g, *cert, Variant::OnePerVertex);
      out["verification"] = {{"ok", av.ok}, {"worst_attacks", av.worst_attacks}, {"placements", av.placements}};
      if (av.counterexample) out["verification"]["counterexample"] = av.counterexample->positions();
    }
  } else {
    ElementaryDefender d(bg);
    out["certificate"] = to_json(d);
    if (verify) {
      const GameSpec spec{d.guards(), Variant::OnePerVertex, 1};
      const DefenderVerification dv = verify_defender(g, spec, d);
      out["verification"] = {{"ok", dv.ok}, {"states", dv.states}};
      if (!dv.ok) out["verification"]["failure"] = dv.failure;
    }
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_nevc(const std::string& path, bool json) {
  const Graph g = read_graph_file(path);
  const NevcVerdict v = nevc_verdict(g);
  if (json) {
    std::cout << to_json(v).dump(2) << '\n';
    return 0;
  }
  std::cout << "mvc = " << v.mvc << ", nevc = " << v.nevc << '\n';
  std::cout << "degree-1 vertices: " << v.degree_one.size() << ", blocking: ";
  if (v.blocking_leaves.empty()) std::cout << "none";
  for (std::size_t i = 0; i < v.blocking_leaves.size(); ++i) std::cout << (i ? "," : "") << v.blocking_leaves[i];
  std::cout << '\n';
  return 0;
}

struct PlayOptions {
  std::string attacker = "auto";
  std::string defender = "auto";
  int guards = -1;
  int steps = 1;
  std::string variant = "one-per-vertex";
  int attacks = 20;
  std::uint64_t seed = 1;
  std::uint64_t budget = default_budget();
  std::string out;
};

int run_play(const std::string& path, const PlayOptions& o) {
  const Graph g = read_graph_file(path);
  if (g.size() == 0) throw std::runtime_error("graph has no edges");
  GameSpec spec{1, parse_variant(o.variant), o.steps};
  if (o.guards > 0) {
    spec.guards = o.guards;
  } else {
    // Same default as the service: the exact value when affordable.
    try {
      spec.guards = solve_exact(g, spec.steps, spec.variant, o.budget).value;
    } catch (const BudgetExceeded&) {
      spec.guards = spec.steps >= 2 ? nevc_verdict(g).nevc : 2 * mvc_size(g);
    }
  }
  validate(g, spec);

  std::unique_ptr<Defender> def;
  if (o.defender == "auto") def = make_engine_defender(g, spec, o.budget).defender;
  else if (o.defender == "greedy") def = std::make_unique<GreedyDefender>(g, spec);
  else if (o.defender == "exhaustive")
    def = std::make_unique<SolverDefender>(std::make_shared<const FixpointSolver>(g, spec, o.budget));
  else throw CLI::ValidationError("--defender", "expected auto, greedy or exhaustive");

  std::unique_ptr<Attacker> att;
  if (o.attacker == "auto") att = make_engine_attacker(g, spec, o.budget, o.seed).attacker;
  else if (o.attacker == "random") att = std::make_unique<RandomAttacker>(g, o.seed);
  else if (o.attacker == "exhaustive")
    att = std::make_unique<SolverAttacker>(std::make_shared<const FixpointSolver>(g, spec, o.budget), o.seed);
  else throw CLI::ValidationError("--attacker", "expected auto, random or exhaustive");

  const SimulationResult r = simulate(g, spec, *att, *def, o.attacks);
  const std::string jsonl = r.transcript.to_jsonl();
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    f << jsonl;
  }
  std::cout << "guards = " << spec.guards << ", attacker: " << att->name() << ", defender: " << def->name()
            << '\n';
  std::cout << "winner: " << to_string(r.winner) << " after " << r.attacks << " attacks, final "
            << to_string(r.final_config) << '\n';
  if (o.out.empty()) std::cout << jsonl;
  return 0;
}

int run_replay(const std::string& path) {
  const ReplayResult r = replay(slurp(path));
  if (!r.ok) {
    std::cerr << "replay failed: " << r.error << '\n';
    return 3;
  }
  std::cout << "replay ok: " << r.transcript.events().size() << " events, winner " << to_string(r.winner)
            << ", final " << to_string(r.final_config) << '\n';
  return 0;
}

int run_serve(const std::string& host, int port, std::uint64_t budget, int idle) {
  ServiceOptions so;
  so.budget = budget;
  so.idle_timeout = std::chrono::seconds(idle);
  SessionService service(so);
  httplib::Server server;
  mount(server, service);
  std::cerr << "listening on " << host << ":" << port << '\n';
  return server.listen(host, port) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"evclab: eternal vertex cover lab"};
  app.require_subcommand(1);
  std::uint64_t budget = evclab::default_budget();

  std::string file;
  bool json = false, bip = false, exact = false;
  auto* analyze = app.add_subcommand("analyze", "bipartition, Spartan verdict, nevc and contraction summary");
  analyze->add_option("file", file, "edge-list file")->required();
  analyze->add_flag("--json", json, "machine-readable report");
  analyze->add_flag("--bipartite", bip, "reject non-bipartite input");
  analyze->add_flag("--exact", exact, "compute evc exactly for non-Spartan graphs");
  analyze->add_option("--budget", budget, "configuration budget for exhaustive solvers (env EVCLAB_BUDGET)");

  std::string mode = "evc", variant = "one-per-vertex";
  int steps = 1;
  auto* solve = app.add_subcommand("solve", "exact game value by fixpoint search");
  solve->add_option("file", file)->required();
  solve->add_option("--mode", mode, "evc | nevc | sevc")->check(CLI::IsMember({"evc", "nevc", "sevc"}));
  solve->add_option("--steps", steps, "moves per guard per turn (sevc)")->check(CLI::PositiveNumber);
  solve->add_option("--variant", variant, "one-per-vertex | multi-guard");
  solve->add_option("--budget", budget);
  solve->add_flag("--json", json);

  bool prefer_contraction = false, verify = false;
  auto* certify = app.add_subcommand("certify", "contraction trace and strategy certificate as JSON");
  certify->add_option("file", file)->required();
  certify->add_flag("--prefer-contraction", prefer_contraction, "use the contraction attack even with a leaf");
  certify->add_flag("--verify", verify, "check the certificate against every defense");

  auto* nevc = app.add_subcommand("nevc", "two-step value with blocking leaves");
  nevc->add_option("file", file)->required();
  nevc->add_flag("--json", json);

  PlayOptions po;
  std::string replay_file;
  auto* play = app.add_subcommand("play", "engine game with a JSON-lines transcript");
  play->add_option("file", file);
  play->add_option("--replay", replay_file, "validate a transcript instead of playing");
  play->add_option("--attacker", po.attacker, "auto | random | exhaustive");
  play->add_option("--defender", po.defender, "auto | greedy | exhaustive");
  play->add_option("--guards", po.guards);
  play->add_option("--steps", po.steps)->check(CLI::PositiveNumber);
  play->add_option("--variant", po.variant);
  play->add_option("--attacks", po.attacks, "attack limit");
  play->add_option("--seed", po.seed);
  play->add_option("--out", po.out, "write the transcript here");
  play->add_option("--budget", budget);

  std::string host = "127.0.0.1";
  int port = 8080, idle = 1800;
  auto* serve = app.add_subcommand("serve", "HTTP session service");
  serve->add_option("--host", host);
  serve->add_option("--port", port);
  serve->add_option("--budget", budget);
  serve->add_option("--idle", idle, "idle session eviction in seconds");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*analyze) return run_analyze(file, json, bip, exact, budget);
    if (*solve) return run_solve(file, mode, steps, variant, budget, json);
    if (*certify) return run_certify(file, prefer_contraction, verify);
    if (*nevc) return run_nevc(file, json);
    if (*play) {
      if (!replay_file.empty()) return run_replay(replay_file);
      if (file.empty()) throw std::runtime_error("play needs a graph file or --replay");
      po.budget = budget;
      return run_play(file, po);
    }
    if (*serve) return run_serve(host, port, budget, idle);
  } catch (const CLI::Error& ex) {
    return app.exit(ex);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 1;
  }
  return 0;
}
