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
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "evclab/contraction.hpp"
#include "evclab/elementary.hpp"
#include "evclab/game/config.hpp"
#include "evclab/game/moves.hpp"
#include "evclab/game/strategy.hpp"
#include "evclab/graph.hpp"
#include "evclab/matching.hpp"

namespace evclab {

// ---- defender: flip a component along a perfect matching through the attacked edge

struct ElementaryComponent {
  std::vector<Vertex> vertices;
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;
  std::map<Edge, std::vector<Edge>> matching;  // edge -> perfect matching containing it
};

class ElementaryDefender : public Defender {
 public:
  explicit ElementaryDefender(const BipartiteGraph& g) : n_(g.order()), comp_of_(g.order(), -1) {
    for (auto& comp : connected_components(g.graph())) {
      const InducedBipartite sub = induced_subgraph(g, comp);
      ElementaryComponent ec;
      ec.vertices = comp;
      const int index = static_cast<int>(components_.size());
      for (Vertex v : comp) comp_of_[v] = index;
      if (comp.size() > 1) {
        const AllowedEdges oracle(sub.graph);
        for (const Edge& e : sub.graph.graph().edges()) {
          const auto m = oracle.perfect_matching_containing(e);
          if (!m) {
            throw GraphError("graph is not essentially elementary: edge " +
                             to_string(Edge(sub.original[e.u], sub.original[e.v])) +
                             " is not allowed");
          }
          std::vector<Edge> edges;
          for (const Edge& f : m->edges()) edges.emplace_back(sub.original[f.u], sub.original[f.v]);
          std::sort(edges.begin(), edges.end());
          ec.matching.emplace(Edge(sub.original[e.u], sub.original[e.v]), std::move(edges));
        }
        for (Vertex v : comp) (g.in_a(v) ? ec.side_a : ec.side_b).push_back(v);
      }
      components_.push_back(std::move(ec));
    }
  }

  const std::vector<ElementaryComponent>& components() const { return components_; }
  int guards() const {
    int k = 0;
    for (const auto& c : components_) k += static_cast<int>(c.side_a.size());
    return k;
  }

  std::string name() const override { return "elementary certificate"; }

  GuardConfig place() override {
    GuardConfig c(n_);
    for (const auto& comp : components_)
      for (Vertex v : comp.side_a) c.count[v] = 1;
    return c;
  }

  // Guard moves flipping the attacked component, or nullopt when the
  // component is not on one of its two sides.
  std::optional<std::vector<GuardMove>> plan(const GuardConfig& current, const Edge& e) const {
    if (current.order() != n_ || e.u < 0 || e.v >= n_) return std::nullopt;
    const ElementaryComponent& comp = components_[comp_of_[e.u]];
    auto it = comp.matching.find(e);
    if (it == comp.matching.end()) return std::nullopt;
    auto exactly = [&](const std::vector<Vertex>& side) {
      std::vector<char> in(n_, 0);
      for (Vertex v : side) in[v] = 1;
      return std::all_of(comp.vertices.begin(), comp.vertices.end(),
                         [&](Vertex v) { return current.count[v] == in[v]; });
    };
    const bool on_a = exactly(comp.side_a);
    if (!on_a && !exactly(comp.side_b)) return std::nullopt;
    std::vector<GuardMove> moves;
    for (const Edge& f : it->second) {
      const Vertex src = current.occupied(f.u) ? f.u : f.v;
      moves.push_back({src, f.other(src)});
    }
    // the guard crossing the attacked edge first
    std::stable_partition(moves.begin(), moves.end(),
                          [&](const GuardMove& m) { return Edge(m.from, m.to) == e; });
    return moves;
  }

  std::optional<GuardConfig> defend(const GuardConfig& current, const Edge& e) override {
    auto moves = plan(current, e);
    if (!moves) return std::nullopt;
    GuardConfig next = current;
    for (const auto& m : *moves) {
      --next.count[m.from];
      ++next.count[m.to];
    }
    return next;
  }

 private:
  int n_;
  std::vector<int> comp_of_;
  std::vector<ElementaryComponent> components_;
};

inline ElementaryDefender defender_certificate_elementary(const BipartiteGraph& g) {
  return ElementaryDefender(g);
}

struct PolicyEntry {
  GuardConfig from;
  Edge attacked;
  GuardConfig to;
};

struct DefenderVerification {
  bool ok = true;
  std::size_t states = 0;
  std::string failure;
  std::vector<PolicyEntry> table;
};

// Explores every attack sequence of length <= depth (depth < 0: until the
// reachable config set closes) and checks each answer for legality and the
// cover property. With a deterministic defender, states are memoized.
inline DefenderVerification verify_defender(const Graph& g, const GameSpec& spec, Defender& d,
                                            int depth = -1, bool keep_table = false) {
  DefenderVerification out;
  const GuardConfig start = d.place();
  if (auto p = config_problem(g, spec, start); !p.empty()) {
    out.ok = false;
    out.failure = "initial placement: " + p;
    return out;
  }
  if (auto e = first_uncovered(g, start)) {
    out.ok = false;
    out.failure = "initial placement leaves edge " + to_string(*e) + " uncovered";
    return out;
  }
  std::map<GuardConfig, int> seen{{start, 0}};
  std::vector<GuardConfig> frontier{start};
  for (int level = 0; !frontier.empty() && (depth < 0 || level < depth); ++level) {
    std::vector<GuardConfig> next;
    for (const GuardConfig& c : frontier) {
      for (const Edge& e : g.edges()) {
        const auto r = d.defend(c, e);
        const std::string where = "from " + to_string(c) + " attack " + to_string(e);
        if (!r) {
          out.ok = false;
          out.failure = where + ": no answer";
          return out;
        }
        if (const DefenseCheck chk = check_defense(g, spec, c, e, *r); !chk.ok()) {
          out.ok = false;
          out.failure = where + ": " + chk.reason();
          return out;
        }
        if (auto u = first_uncovered(g, *r)) {
          out.ok = false;
          out.failure = where + ": edge " + to_string(*u) + " left uncovered";
          return out;
        }
        if (keep_table) out.table.push_back({c, e, *r});
        if (seen.emplace(*r, level + 1).second) next.push_back(*r);
      }
    }
    frontier = std::move(next);
  }
  out.states = seen.size();
  return out;
}

// ---- attacker: decision rules keyed on the observed configuration

enum class AttackCase { NoPerfectMatching, DegreeOne, Contraction };

inline const char* to_string(AttackCase c) {
  switch (c) {
    case AttackCase::NoPerfectMatching: return "no-perfect-matching";
    case AttackCase::DegreeOne: return "degree-one";
    case AttackCase::Contraction: return "contraction";
  }
  return "?";
}

struct AttackerCertificate {
  AttackCase kind = AttackCase::NoPerfectMatching;
  std::vector<Vertex> component;

  // NoPerfectMatching: exposed lies in no minimum cover; its neighbour does.
  Vertex exposed = -1;
  Vertex exposed_neighbor = -1;

  // DegreeOne: leaf -- stem -- other
  Vertex leaf = -1;
  Vertex stem = -1;
  Vertex other = -1;

  // Contraction: a leaf of the maximal contraction graph and its partner,
  // expanded to original vertices.
  std::vector<Vertex> leaf_label;
  std::vector<Vertex> partner_label;
  std::vector<Edge> matched_edges;  // matching edges between the two labels
  std::vector<Edge> bridges;        // partner_label -- outside leaf_label
  std::optional<ContractionTrace> trace;
  std::vector<Vertex> trace_original;  // trace ids -> graph ids

  int max_attacks() const { return kind == AttackCase::NoPerfectMatching ? 2 : 3; }

  Edge choose(const Graph& g, const GuardConfig& c) const {
    if (auto e = first_uncovered(g, c)) return *e;
    auto all = [&](const std::vector<Vertex>& vs) {
      return std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return c.occupied(v); });
    };
    switch (kind) {
      case AttackCase::NoPerfectMatching:
        return Edge(exposed, exposed_neighbor);
      case AttackCase::DegreeOne:
        return c.occupied(leaf) ? Edge(other, stem) : Edge(leaf, stem);
      case AttackCase::Contraction:
        if (all(partner_label)) return matched_edges.front();
        if (all(leaf_label)) return bridges.front();
        return matched_edges.front();
    }
    return g.edges().front();
  }
};

struct AttackerOptions {
  bool prefer_contraction = false;  // skip the degree-one rule when a perfect matching exists
};

// nullopt iff g is essentially elementary.
inline std::optional<AttackerCertificate> attacker_certificate_bipartite(
    const BipartiteGraph& g, AttackerOptions options = {}) {
  const EssentialVerdict ev = is_essentially_elementary(g);
  if (ev.essentially_elementary) return std::nullopt;
  const ComponentVerdict& cv = *std::find_if(
      ev.components.begin(), ev.components.end(),
      [](const ComponentVerdict& c) { return !c.verdict.elementary; });
  const InducedBipartite sub = induced_subgraph(g, cv.vertices);
  const Graph& h = sub.graph.graph();
  auto orig = [&](Vertex v) { return sub.original[v]; };

  AttackerCertificate cert;
  cert.component = cv.vertices;
  if (!cv.has_perfect_matching) {
    cert.kind = AttackCase::NoPerfectMatching;
    cert.exposed = cv.exposed;
    cert.exposed_neighbor = g.graph().neighbors(cv.exposed).front();
    return cert;
  }
  const auto leaves = degree_one_vertices(h);
  if (!leaves.empty() && !options.prefer_contraction) {
    cert.kind = AttackCase::DegreeOne;
    const Vertex a = leaves.front();
    const Vertex b = h.neighbors(a).front();
    Vertex a2 = -1;
    for (Vertex w : h.neighbors(b))
      if (w != a) {
        a2 = w;
        break;
      }
    cert.leaf = orig(a);
    cert.stem = orig(b);
    cert.other = orig(a2);
    return cert;
  }
  cert.kind = AttackCase::Contraction;
  const Matching m = maximum_matching(sub.graph);
  ContractionTrace trace = maximal_contraction(sub.graph, m);
  const auto final_leaves = trace.final_degree_one();
  if (final_leaves.empty()) throw std::logic_error("non-elementary component contracted to an edge");
  const Vertex lambda = final_leaves.front();
  const Vertex mu = trace.final_matching.partner(lambda);
  std::vector<char> in_leaf(h.order(), 0);
  for (Vertex v : trace.final_labels[lambda]) {
    in_leaf[v] = 1;
    cert.leaf_label.push_back(orig(v));
  }
  for (Vertex v : trace.final_labels[mu]) {
    cert.partner_label.push_back(orig(v));
    cert.matched_edges.emplace_back(orig(v), orig(m.partner(v)));
    for (Vertex w : h.neighbors(v))
      if (!in_leaf[w]) cert.bridges.emplace_back(orig(v), orig(w));
  }
  std::sort(cert.matched_edges.begin(), cert.matched_edges.end());
  std::sort(cert.bridges.begin(), cert.bridges.end());
  if (cert.bridges.empty()) throw std::logic_error("contraction leaf without a bridge edge");
  cert.trace = std::move(trace);
  cert.trace_original = sub.original;
  return cert;
}

class CertificateAttacker : public Attacker {
 public:
  CertificateAttacker(const Graph& g, AttackerCertificate cert) : g_(g), cert_(std::move(cert)) {}
  std::string name() const override { return "certificate"; }
  std::optional<Edge> attack(const GuardConfig& c) override { return cert_.choose(g_, c); }
  const AttackerCertificate& certificate() const { return cert_; }

 private:
  Graph g_;
  AttackerCertificate cert_;
};

struct AttackVerification {
  bool ok = true;
  int worst_attacks = 0;  // over all defenses and placements
  std::size_t placements = 0;
  std::optional<GuardConfig> counterexample;
};

// Against every legal defense from every vertex-cover placement with
// `guards` guards (default mvc), the certificate must win within `attacks`.
inline AttackVerification verify_attacker_certificate(const Graph& g, const AttackerCertificate& cert,
                                                      Variant variant, int attacks = 3,
                                                      int guards = -1) {
  if (guards < 0) guards = mvc_size(g);
  const GameSpec spec{guards, variant, 1};
  const MoveTable table(g, 1);
  std::map<GuardConfig, int> memo;  // attacks needed, attacks+1 = not within bound
  std::function<int(const GuardConfig&, int)> need = [&](const GuardConfig& c, int left) -> int {
    if (left == 0) return 1;
    if (auto it = memo.find(c); it != memo.end() && it->second <= left) return it->second;
    const Edge e = cert.choose(g, c);
    int worst = 1;
    if (c.occupied(e.u) || c.occupied(e.v)) {
      for (const GuardConfig& next : legal_defenses(g, spec, c, e, &table)) {
        worst = std::max(worst, 1 + need(next, left - 1));
        if (worst > left) break;
      }
    }
    if (worst <= left) memo[c] = worst;
    return worst;
  };
  AttackVerification out;
  for_each_config(g.order(), guards, variant, [&](const GuardConfig& c) {
    if (!out.ok || !covers(g, c)) return;
    ++out.placements;
    const int n = need(c, attacks);
    out.worst_attacks = std::max(out.worst_attacks, n);
    if (n > attacks) {
      out.ok = false;
      out.counterexample = c;
    }
  });
  return out;
}

}  // namespace evclab
