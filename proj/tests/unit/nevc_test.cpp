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

#include <random>

#include <gtest/gtest.h>

#include "evclab/game/certificates.hpp"
#include "evclab/game/solver.hpp"
#include "evclab/nevc.hpp"
#include "support/graph_gen.hpp"
#include "support/oracles.hpp"

namespace evclab {
namespace {

const Graph kK2(2, {{0, 1}});
const Graph kP3(3, {{0, 1}, {1, 2}});
const Graph kC3(3, {{0, 1}, {1, 2}, {2, 0}});
const Graph kP4(4, {{0, 1}, {1, 2}, {2, 3}});
const Graph kC4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
const Graph kStar(4, {{0, 1}, {0, 2}, {0, 3}});

GuardConfig at(const Graph& g, std::initializer_list<Vertex> vs) { return GuardConfig::from_positions(g.order(), vs); }

TEST(NevcBipartite, Examples) {
  const NevcVerdict p4 = nevc_bipartite(make_bipartite(kP4));
  EXPECT_EQ(p4.mvc, 2);
  EXPECT_EQ(p4.nevc, 2);
  EXPECT_EQ(p4.degree_one, (std::vector<Vertex>{0, 3}));
  EXPECT_TRUE(p4.blocking_leaves.empty());

  const NevcVerdict star = nevc_bipartite(make_bipartite(kStar));
  EXPECT_EQ(star.mvc, 1);
  EXPECT_EQ(star.nevc, 2);
  EXPECT_EQ(star.blocking_leaves, (std::vector<Vertex>{1, 2, 3}));

  const NevcVerdict c4 = nevc_bipartite(make_bipartite(kC4));
  EXPECT_EQ(c4.nevc, 2);
  EXPECT_TRUE(c4.degree_one.empty());
}

TEST(NevcGeneral, Examples) {
  const NevcVerdict c3 = nevc_general_small(kC3);
  EXPECT_EQ(c3.mvc, 2);
  EXPECT_TRUE(c3.degree_one.empty());
  EXPECT_EQ(c3.nevc, 2);
  const NevcVerdict p3 = nevc_general_small(kP3);
  EXPECT_EQ(p3.mvc, 1);
  EXPECT_EQ(p3.blocking_leaves, (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(p3.nevc, 2);
  const NevcVerdict k2 = nevc_general_small(kK2);
  EXPECT_EQ(k2.mvc, 1);
  EXPECT_TRUE(k2.blocking_leaves.empty());
  EXPECT_EQ(k2.nevc, 1);
  EXPECT_THROW(nevc_general_small(Graph(17)), LimitExceeded);
}

TEST(NevcGeneral, BlockersAreSummedPerComponent) {
  const Graph two_p3 = disjoint_union(kP3, kP3);
  const NevcVerdict v = nevc_verdict(two_p3);
  EXPECT_EQ(v.blocked_components, 2);
  EXPECT_EQ(v.nevc, v.mvc + 2);
  EXPECT_EQ(nevc_exact(two_p3), 4);
}

TEST(NevcProperty, CharacterizationMatchesSolverUpToSeven) {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : testing::graphs_up_to_iso(n)) {
      if (g.size() == 0) continue;
      EXPECT_EQ(nevc_general_small(g).nevc, nevc_exact(g)) << serialize_graph(g);
    }
  }
}

TEST(NevcProperty, BipartiteAgreesWithGeneral) {
  for (int n = 1; n <= 9; ++n) {
    for (const Graph& g : testing::graphs_up_to_iso(n, testing::Family::Bipartite)) {
      const NevcVerdict a = nevc_bipartite(make_bipartite(g));
      const NevcVerdict b = nevc_general_small(g);
      EXPECT_EQ(a.nevc, b.nevc) << serialize_graph(g);
      EXPECT_EQ(a.mvc, b.mvc);
      EXPECT_EQ(a.blocking_leaves, b.blocking_leaves);
    }
  }
}

TEST(NevcProperty, BlockingMeansInNoMinimumCover) {
  std::mt19937_64 rng(401);
  for (int t = 0; t < 300; ++t) {
    const Graph g = testing::random_graph(3 + t % 9, 0.3, rng);
    const NevcVerdict v = nevc_verdict(g);
    const auto covers = testing::covers_of_size_brute(g, v.mvc);
    for (Vertex x : v.degree_one) {
      bool in_some = false;
      for (const auto& c : covers) in_some = in_some || std::count(c.begin(), c.end(), x);
      EXPECT_EQ(!in_some, std::count(v.blocking_leaves.begin(), v.blocking_leaves.end(), x) == 1);
    }
  }
}

TEST(NevcProperty, SpartanGraphsHaveEqualNumbers) {
  for (int n = 2; n <= 8; n += 2) {
    for (const Graph& g : testing::graphs_up_to_iso(n, testing::Family::Bipartite)) {
      const BipartiteGraph bg = make_bipartite(g);
      if (!is_essentially_elementary(bg).essentially_elementary) continue;
      const int mvc = maximum_matching(bg).size();
      EXPECT_EQ(nevc_bipartite(bg).nevc, mvc);
      if (n <= 6) { EXPECT_EQ(evc_exact(g), mvc); }
    }
  }
}

TEST(NevcDefender, StarExample) {
  NevcDefender d(kStar);
  EXPECT_EQ(d.spec().guards, 2);
  EXPECT_EQ(d.spec().steps, 2);
  // centre plus floater on leaf 1; attack 0-2: centre steps out, floater walks home
  const auto r = d.defend(at(kStar, {0, 1}), Edge(0, 2));
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, at(kStar, {0, 2}));
  EXPECT_TRUE(check_defense(kStar, d.spec(), at(kStar, {0, 1}), Edge(0, 2), *r).ok());
}

TEST(NevcDefender, PathAndCycleExamples) {
  NevcDefender p4(kP4);
  EXPECT_EQ(p4.spec().guards, 2);
  const auto r = p4.defend(at(kP4, {1, 2}), Edge(0, 1));
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, at(kP4, {0, 2}));
  NevcDefender c4(kC4);
  // two steps let the guards rotate half way round and land back on {0, 2}
  const auto rc = c4.defend(at(kC4, {0, 2}), Edge(0, 1));
  ASSERT_TRUE(rc);
  EXPECT_TRUE(check_defense(kC4, c4.spec(), at(kC4, {0, 2}), Edge(0, 1), *rc).ok());
}

TEST(NevcDefender, ClosedPolicyOnRandomConnectedGraphs) {
  std::mt19937_64 rng(403);
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    const Graph g = testing::random_graph(3 + t % 7, 0.35, rng);
    if (!is_connected(g) || g.size() == 0) continue;
    NevcDefender d(g);
    const DefenderVerification v = verify_defender(g, d.spec(), d);
    EXPECT_TRUE(v.ok) << serialize_graph(g) << v.failure;
    if (g.order() <= 6) { EXPECT_EQ(d.spec().guards, nevc_exact(g)); }
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(NevcDefender, RejectsDisconnected) {
  EXPECT_THROW(NevcDefender(disjoint_union(kK2, kK2)), GraphError);
}

TEST(StarReduction, Examples) {
  const StarReduction p3 = star_reduction(kP3, 1);
  EXPECT_EQ(p3.star, 3);
  EXPECT_EQ(p3.graph.size(), 5);
  EXPECT_EQ(p3.graph.label(3), "*");
  EXPECT_EQ(nevc_general_small(p3.graph).nevc, 2);
  const StarReduction c4 = star_reduction(kC4, 2);
  EXPECT_EQ(c4.graph.size(), 8);
  EXPECT_EQ(nevc_general_small(c4.graph).nevc, 3);
  EXPECT_EQ(nevc_exact(c4.graph), 3);
  // K2 with k = 1 lies outside k < n - 1; the triangle it would produce has nevc 2
  EXPECT_THROW(star_reduction(kK2, 1), std::invalid_argument);
  EXPECT_EQ(nevc_general_small(kC3).nevc, 2);
  EXPECT_THROW(star_reduction(kP3, -1), std::invalid_argument);
}

}  // namespace
}  // namespace evclab
