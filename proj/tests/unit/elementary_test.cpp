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

#include "evclab/elementary.hpp"
#include "evclab/game/solver.hpp"
#include "evclab/vertex_cover.hpp"
#include "support/graph_gen.hpp"
#include "support/oracles.hpp"

namespace evclab {
namespace {

const Graph kP4(4, {{0, 1}, {1, 2}, {2, 3}});
const Graph kC4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
const Graph kC6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
const Graph kStar(4, {{0, 1}, {0, 2}, {0, 3}});
Edge ab(int i, int j) { return Edge(i - 1, j + 3); }
const Graph kThreeMatchings(8, {ab(1, 1), ab(2, 2), ab(3, 3), ab(4, 4), ab(1, 3), ab(3, 2), ab(2, 1), ab(2, 4), ab(4, 3)});

TEST(IsElementary, Examples) {
  EXPECT_TRUE(is_elementary(make_bipartite(kC6)).elementary);
  const ElementaryVerdict p4 = is_elementary(make_bipartite(kP4));
  EXPECT_FALSE(p4.elementary);
  EXPECT_EQ(p4.non_allowed, Edge(1, 2));
  EXPECT_TRUE(is_elementary(make_bipartite(kThreeMatchings)).elementary);
  EXPECT_TRUE(is_elementary(make_bipartite(Graph(2, {{0, 1}}))).elementary);
  EXPECT_THROW(is_elementary(make_bipartite(Graph(4, {{0, 1}, {2, 3}}))), GraphError);
}

TEST(EssentiallyElementary, Examples) {
  EXPECT_TRUE(is_essentially_elementary(make_bipartite(disjoint_union(kC4, kC6))).essentially_elementary);
  const EssentialVerdict bad = is_essentially_elementary(make_bipartite(disjoint_union(kC4, kP4)));
  EXPECT_FALSE(bad.essentially_elementary);
  ASSERT_EQ(bad.components.size(), 2U);
  EXPECT_TRUE(bad.components[0].verdict.elementary);
  EXPECT_FALSE(bad.components[1].verdict.elementary);
  EXPECT_EQ(bad.components[1].verdict.non_allowed, Edge(5, 6));
  EXPECT_TRUE(is_essentially_elementary(make_bipartite(Graph(2, {{0, 1}}))).essentially_elementary);
}

TEST(Spartan, Examples) {
  const SpartanVerdict c4 = spartan_verdict(make_bipartite(kC4));
  EXPECT_TRUE(c4.is_spartan);
  EXPECT_EQ(c4.mvc, 2);
  EXPECT_EQ(c4.evc, 2);

  const SpartanVerdict p4 = spartan_verdict(make_bipartite(kP4));
  EXPECT_FALSE(p4.is_spartan);
  EXPECT_EQ(p4.mvc, 2);
  EXPECT_EQ(p4.evc_lower, 3);
  EXPECT_EQ(p4.evc_upper, 4);
  EXPECT_EQ(p4.obstruction, Obstruction::NonAllowedEdge);
  EXPECT_EQ(p4.edge, Edge(1, 2));
  const SpartanVerdict exact = spartan_verdict(make_bipartite(kP4), [](const Graph& g) { return evc_exact(g); });
  EXPECT_EQ(exact.evc, 3);

  const SpartanVerdict star = spartan_verdict(make_bipartite(kStar));
  EXPECT_FALSE(star.is_spartan);
  EXPECT_EQ(star.obstruction, Obstruction::NoPerfectMatching);
  EXPECT_EQ(star.mvc, 1);
  EXPECT_EQ(evc_exact(kStar), 2);
}

// is_elementary <=> the minimum covers are exactly the two sides, of equal size.
bool two_side_covers(const Graph& g, const BipartiteGraph& bg) {
  const int k = mvc_size(g);
  const auto covers = enumerate_min_vertex_covers(g, k);
  if (bg.part_a().size() != bg.part_b().size()) return false;
  std::vector<std::vector<Vertex>> sides{bg.part_a(), bg.part_b()};
  std::sort(sides.begin(), sides.end());
  return covers == sides;
}

TEST(ElementaryProperty, MinimumCoverCharacterizationExhaustive) {
  for (int n = 2; n <= 8; ++n) {
    for (const Graph& g : testing::connected_only(testing::graphs_up_to_iso(n, testing::Family::Bipartite))) {
      const BipartiteGraph bg = make_bipartite(g);
      EXPECT_EQ(is_elementary(bg).elementary, two_side_covers(g, bg)) << serialize_graph(g);
    }
  }
}

TEST(ElementaryProperty, MinimumCoverCharacterizationRandom) {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 300; ++t) {
    const int n = 9 + t % 4;
    const Graph g = t % 3 == 0 ? testing::random_elementary(n + n % 2, 0.3, rng)
                               : testing::random_connected_bipartite(n, 0.35, rng);
    const BipartiteGraph bg = make_bipartite(g);
    EXPECT_EQ(is_elementary(bg).elementary, two_side_covers(g, bg)) << serialize_graph(g);
  }
}

TEST(ElementaryProperty, AllEdgesAllowedByEnumeration) {
  std::mt19937_64 rng(103);
  for (int t = 0; t < 300; ++t) {
    const Graph g = testing::random_connected_bipartite(2 + t % 11, 0.35, rng);
    const auto allowed = testing::allowed_by_enumeration(g);
    const bool expect = !testing::all_perfect_matchings(g).empty() && allowed.size() == g.edges().size();
    EXPECT_EQ(is_elementary(make_bipartite(g)).elementary, expect);
  }
}

TEST(ElementaryProperty, RandomElementaryGeneratorIsElementary) {
  std::mt19937_64 rng(107);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 * (2 + t % 19);
    EXPECT_TRUE(is_elementary(make_bipartite(testing::random_elementary(n, 0.2, rng))).elementary);
  }
}

// The full n <= 10 sweep lives in the acceptance binary; this keeps a fast slice.
TEST(SpartanProperty, MatchesExactSolverUpToSeven) {
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : testing::connected_only(testing::graphs_up_to_iso(n, testing::Family::Bipartite))) {
      const SpartanVerdict v = spartan_verdict(make_bipartite(g));
      const int evc = evc_exact(g);
      EXPECT_EQ(v.is_spartan, evc == v.mvc) << serialize_graph(g);
      EXPECT_LE(v.mvc, evc);
      EXPECT_LE(evc, 2 * v.mvc);
      EXPECT_GE(evc, v.evc_lower);
      EXPECT_LE(evc, v.evc_upper);
    }
  }
}

TEST(SpartanProperty, ExactRefinementSumsComponents) {
  const Graph g = disjoint_union(kP4, kC4);
  const SpartanVerdict v = spartan_verdict(make_bipartite(g), [](const Graph& h) { return evc_exact(h); });
  EXPECT_EQ(v.evc, 5);
  EXPECT_EQ(evc_exact(g), 5);
}

}  // namespace
}  // namespace evclab
