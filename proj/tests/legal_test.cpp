// Copyright 2026 The Grundy Toolkit Authors
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

#include <gtest/gtest.h>

#include "grundy/errors.hpp"
#include "grundy/generators.hpp"
#include "grundy/legal.hpp"
#include "oracles.hpp"

namespace grundy {
namespace {

TEST(Validate, FootprintsOnPath) {
  const Vertex order[] = {0, 1, 3};
  const auto s = certify_sequence(path_graph(4), order);
  ASSERT_EQ(s.length(), 3u);
  EXPECT_EQ(s.footprints[0].to_vector(), (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(s.footprints[1].to_vector(), (std::vector<Vertex>{2}));
  EXPECT_EQ(s.footprints[2].to_vector(), (std::vector<Vertex>{3}));
  EXPECT_EQ(s.dominated().count(), 4u);
  EXPECT_EQ(*s.footprinter_step(2), 1u);
}

TEST(Validate, DominatedLeafIsAViolation) {
  const Vertex order[] = {1, 0};
  const auto check = validate_sequence(path_graph(4), order);
  const auto* bad = std::get_if<SequenceViolation>(&check);
  ASSERT_NE(bad, nullptr);
  EXPECT_EQ(bad->index, 1u);
  EXPECT_EQ(bad->vertex, 0u);
  EXPECT_THROW(certify_sequence(path_graph(4), order), InvariantError);
}

TEST(Validate, EmptyAndDuplicatesAndRange) {
  EXPECT_TRUE(is_legal(cycle_graph(5), std::vector<Vertex>{}));
  EXPECT_FALSE(is_legal(Graph(2), std::vector<Vertex>{0, 0}));
  EXPECT_THROW(is_legal(Graph(2), std::vector<Vertex>{2}), ArgumentError);
}

TEST(Validate, InvariantsOfCertifiedSequences) {
  Rng rng(17);
  for (int k = 0; k < 200; ++k) {
    const Graph g = random_graph(1 + k % 10, 0.35, rng);
    const auto r = grundy_exact(g);
    const auto& s = r.witness;
    VertexSet seen(g.order());
    for (std::size_t i = 0; i < s.length(); ++i) {
      EXPECT_FALSE(s.footprints[i].empty());
      EXPECT_FALSE(s.footprints[i].intersects(seen));
      seen |= s.footprints[i];
      EXPECT_EQ(seen, s.dominated_after[i]);
    }
  }
}

TEST(Exact, SmallFamilies) {
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(grundy_number(complete_graph(n)), 1u);
  EXPECT_EQ(grundy_number(path_graph(4)), 3u);
  EXPECT_EQ(grundy_number(cycle_graph(4)), 2u);
  EXPECT_EQ(grundy_number(Graph(0)), 0u);
  EXPECT_EQ(grundy_number(Graph(3)), 3u);
  const std::size_t legs[] = {3, 3, 3};
  EXPECT_EQ(grundy_number(spider_graph(legs)), 8u);
}

TEST(Exact, CaterpillarsHaveOrderMinusOne) {
  Rng rng(4);
  for (int k = 0; k < 300; ++k) {
    const Graph t = random_tree(2 + k % 11, rng);
    if (is_caterpillar(t)) EXPECT_EQ(grundy_number(t), t.order() - 1);
  }
}

TEST(Exact, MatchesBruteForceEnumeration) {
  Rng rng(23);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 1 + k % 8;
    const Graph g =
        random_graph(n, std::uniform_real_distribution<>(0.1, 0.9)(rng), rng);
    const auto r = grundy_exact(g);
    ASSERT_EQ(r.value, oracle::grundy(g));
    EXPECT_TRUE(oracle::legal(g, r.witness.order));
  }
}

TEST(Exact, WitnessTakesSmallestOptimalMove) {
  // On P4 the optimal sequences starting at 0 are the smallest-id choices.
  EXPECT_EQ(grundy_exact(path_graph(4)).witness.order,
            (std::vector<Vertex>{0, 1, 2}));
  const auto a = grundy_exact(cycle_graph(6));
  const auto b = grundy_exact(cycle_graph(6));
  EXPECT_EQ(a.witness.order, b.witness.order);
}

TEST(Exact, DisjointUnionAdds) {
  Rng rng(8);
  for (int k = 0; k < 60; ++k) {
    const Graph g = random_graph(1 + k % 6, 0.5, rng);
    const Graph h = random_graph(1 + k % 5, 0.5, rng);
    EXPECT_EQ(grundy_number(disjoint_union(g, h)),
              grundy_number(g) + grundy_number(h));
  }
}

TEST(Exact, DeletionWindows) {
  Rng rng(31);
  for (int k = 0; k < 150; ++k) {
    const Graph g = random_graph(2 + k % 9, 0.4, rng);
    const auto gamma = static_cast<long>(grundy_number(g));
    for (const Edge& e : g.edges()) {
      const auto d =
          static_cast<long>(grundy_number(delete_edge(g, e.u, e.v))) - gamma;
      EXPECT_GE(d, -1);
      EXPECT_LE(d, 1);
    }
    for (Vertex v = 0; v < g.order(); ++v) {
      const auto d =
          static_cast<long>(grundy_number(delete_vertex(g, v).graph)) - gamma;
      EXPECT_GE(d, -2);
      EXPECT_LE(d, 0);
      if (is_simplicial(g, v)) EXPECT_GE(d, -1);
      if (has_twin(g, v)) EXPECT_EQ(d, 0);
    }
  }
}

TEST(Exact, CapIsEnforced) {
  EXPECT_THROW(grundy_exact(path_graph(25)), CapacityError);
  EXPECT_EQ(grundy_number(path_graph(25), 25), 24u);
  EXPECT_THROW(grundy_exact(path_graph(5), 4), CapacityError);
}

TEST(Exact, LargerComponentsSplit) {
  // 30 vertices in small components: allowed once the cap admits the order.
  Graph g = disjoint_union(cycle_graph(10), disjoint_union(path_graph(10),
                                                           complete_graph(10)));
  EXPECT_EQ(grundy_number(g, 30), grundy_number(cycle_graph(10)) + 9 + 1);
}

TEST(EndSupport, Examples) {
  EXPECT_EQ(end_support_lower_bound(path_graph(4)), 3u);
  EXPECT_EQ(end_support_lower_bound(path_graph(2)), 1u);
  // The literal bound exceeds the true value on a star; it is only reported.
  EXPECT_EQ(end_support_lower_bound(star_graph(3)), 4u);
  EXPECT_EQ(grundy_number(star_graph(3)), 3u);
  EXPECT_THROW(end_support_lower_bound(cycle_graph(4)), ArgumentError);
}

}  // namespace
}  // namespace grundy
