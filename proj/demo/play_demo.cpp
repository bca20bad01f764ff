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

// Two short games: the elementary certificate holding C6 against random
// attacks, and the leaf attack breaking P4 against the best defense.

#include <iostream>
#include <memory>

#include "evclab/game/certificates.hpp"
#include "evclab/game/simulate.hpp"
#include "evclab/game/solver.hpp"

using namespace evclab;

namespace {

void show(const char* title, const SimulationResult& r) {
  std::cout << "== " << title << ": " << to_string(r.winner) << " wins after " << r.attacks << " attacks\n";
  for (const auto& ev : r.transcript.events()) std::cout << "  " << ev.dump() << '\n';
}

}  // namespace

int main() {
  const Graph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  ElementaryDefender keeper(make_bipartite(c6));
  RandomAttacker noise(c6, 7);
  show("C6, 3 guards", simulate(c6, {3, Variant::OnePerVertex, 1}, noise, keeper, 8));

  const Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  const GameSpec spec{2, Variant::OnePerVertex, 1};
  CertificateAttacker breaker(p4, *attacker_certificate_bipartite(make_bipartite(p4)));
  SolverDefender best(std::make_shared<const FixpointSolver>(p4, spec));
  show("P4, 2 guards", simulate(p4, spec, breaker, best, 8));
  return 0;
}
