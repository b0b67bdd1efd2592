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

#include <algorithm>

#include "grundy/errors.hpp"
#include "grundy/generators.hpp"
#include "grundy/theorems.hpp"
#include "oracles.hpp"

namespace grundy {
namespace {

TEST(ProductIdentity, Examples) {
  const auto a = check_product_identity(path_graph(2), path_graph(2));
  EXPECT_EQ(a.gamma_product, 1u);
  EXPECT_TRUE(a.identity_holds);

  const auto b = check_product_identity(path_graph(3), path_graph(3));
  EXPECT_EQ(b.gamma_product, 4u);
  EXPECT_EQ(oracle::grundy(strong_product(path_graph(3), path_graph(3))), 4u);
  EXPECT_TRUE(b.identity_holds);

  const auto c = check_product_identity(path_graph(4), cycle_graph(4));
  EXPECT_EQ(c.gamma_g, 3u);
  EXPECT_EQ(c.gamma_h, 2u);
  EXPECT_EQ(c.gamma_product, 6u);
  EXPECT_TRUE(c.g_is_forest);
  EXPECT_TRUE(c.consistent());
}

TEST(ProductIdentity, CapIsEnforced) {
  EXPECT_THROW(check_product_identity(path_graph(5), path_graph(5)),
               CapacityError);
  EXPECT_NO_THROW(check_product_identity(path_graph(5), path_graph(5), 25));
}

TEST(ProductIdentity, ForestFactorsGiveEquality) {
  Rng rng(55);
  for (int k = 0; k < 150; ++k) {
    const Graph g = random_forest(1 + k % 6, 0.2, rng);
    const Graph h = random_graph(1 + k % 4, 0.5, rng);
    const auto r = check_product_identity(g, h);
    ASSERT_TRUE(r.identity_holds);
    ASSERT_TRUE(r.consistent());
    EXPECT_EQ(r.fibers.size(), g.order());
  }
}

TEST(ProductIdentity, LowerBoundForArbitraryFactors) {
  Rng rng(56);
  for (int k = 0; k < 150; ++k) {
    const Graph g = random_graph(1 + k % 5, 0.5, rng);
    const Graph h = random_graph(1 + k % 4, 0.5, rng);
    const auto r = check_product_identity(g, h);
    EXPECT_TRUE(r.lower_bound_holds);
    EXPECT_TRUE(r.fiber_bound_violations.empty());
  }
}

TEST(FiberBound, Examples) {
  const Graph p2 = path_graph(2), p3 = path_graph(3), p4 = path_graph(4);
  const auto k4 = grundy_exact(strong_product(p2, p2));
  EXPECT_LE(fiber_footprint_bound(p2, p2, k4.witness, 0).size, 1u);

  const auto d33 = grundy_exact(strong_product(p3, p3));
  for (Vertex v = 0; v < 3; ++v) {
    const auto fb = fiber_footprint_bound(p3, p3, d33.witness, v);
    EXPECT_LE(fb.size, 2u);
    EXPECT_EQ(fb.bound, 2u);
    EXPECT_TRUE(fb.ok);
  }
  const auto d42 = grundy_exact(strong_product(p4, p2));
  for (Vertex v = 0; v < 4; ++v)
    EXPECT_LE(fiber_footprint_bound(p4, p2, d42.witness, v).size, 1u);
}

TEST(FiberBound, ViewPartsAgree) {
  const Graph g = path_graph(3), h = cycle_graph(4);
  const auto d = grundy_exact(strong_product(g, h)).witness;
  const ProductIndex idx(3, 4);
  for (Vertex v = 0; v < 3; ++v) {
    const auto view = fiber_view(idx, d, v);
    std::size_t split = 0;
    for (Vertex u = 0; u < 3; ++u) split += view.footprinters_from(idx, u).size();
    EXPECT_EQ(split, view.footprinters.size());
    EXPECT_TRUE(view.footprinters_from(idx, v == 0 ? 2 : v - 1).empty() ||
                g.adjacent(v, v == 0 ? 2 : v - 1));
    EXPECT_TRUE(oracle::legal(h, view.projection));
  }
}

TEST(FiberBound, RejectsNonMaximumSequences) {
  const Graph p3 = path_graph(3);
  const Graph prod = strong_product(p3, p3);
  const Vertex one[] = {0};
  EXPECT_THROW(fiber_footprint_bound(p3, p3, certify_sequence(prod, one), 0),
               ArgumentError);
}

TEST(SimplicialPeel, Examples) {
  const auto a = simplicial_peel_bound(path_graph(3), path_graph(2), 0);
  EXPECT_EQ(a.lhs, 2u);
  EXPECT_EQ(a.rhs, 2u);
  EXPECT_TRUE(a.ok);
  const auto b = simplicial_peel_bound(complete_graph(3), path_graph(2), 1);
  EXPECT_EQ(b.lhs, 1u);
  EXPECT_EQ(b.rhs, 2u);
  const auto c = simplicial_peel_bound(path_graph(2), Graph(1), 0);
  EXPECT_EQ(c.lhs, 1u);
  EXPECT_EQ(c.rhs, 2u);
  const auto d = simplicial_peel_bound(Graph(1), path_graph(3), 0);
  EXPECT_EQ(d.lhs, 2u);
  EXPECT_EQ(d.gamma_rest, 0u);
  EXPECT_THROW(simplicial_peel_bound(path_graph(3), path_graph(2), 1),
               ArgumentError);
}

TEST(SimplicialPeel, HoldsOnRandomPairs) {
  Rng rng(61);
  for (int k = 0; k < 150; ++k) {
    const Graph g = random_graph(1 + k % 5, 0.6, rng);
    const Graph h = random_graph(1 + k % 4, 0.5, rng);
    for (Vertex v = 0; v < g.order(); ++v)
      if (is_simplicial(g, v)) EXPECT_TRUE(simplicial_peel_bound(g, h, v).ok);
  }
}

TEST(SpanningTree, Examples) {
  const auto t = spanning_tree_ge(path_graph(5));
  EXPECT_EQ(t.tree, path_graph(5));
  EXPECT_TRUE(t.steps.empty());

  const auto c4 = spanning_tree_ge(cycle_graph(4));
  EXPECT_EQ(c4.gamma_graph, 2u);
  EXPECT_EQ(c4.gamma_tree, 3u);
  EXPECT_TRUE(is_tree(c4.tree));
  ASSERT_EQ(c4.steps.size(), 1u);

  const auto k4 = spanning_tree_ge(complete_graph(4));
  EXPECT_TRUE(is_tree(k4.tree));
  EXPECT_GE(k4.gamma_tree, 1u);
  EXPECT_EQ(k4.steps.size(), 3u);

  EXPECT_THROW(spanning_tree_ge(Graph(2)), ArgumentError);
}

TEST(SpanningTree, ChainNeverDecreases) {
  Rng rng(71);
  for (int k = 0; k < 150; ++k) {
    const Graph g = random_connected_graph(2 + k % 8, 0.4, rng);
    const auto r = spanning_tree_ge(g);
    ASSERT_TRUE(is_tree(r.tree));
    for (const Edge& e : r.tree.edges()) EXPECT_TRUE(g.adjacent(e.u, e.v));
    EXPECT_EQ(r.steps.size(), g.size() - r.tree.size());
    std::size_t prev = r.gamma_graph;
    for (const auto& s : r.steps) {
      EXPECT_EQ(s.before, prev);
      EXPECT_GE(s.after, s.before);
      prev = s.after;
    }
    EXPECT_EQ(grundy_number(r.tree), r.gamma_tree);
    EXPECT_GE(r.gamma_tree, grundy_number(g));
  }
}

TEST(TotalDomination, PathRepairsTheLastVertex) {
  const auto r = total_dominating_grundy_set(path_graph(4));
  EXPECT_EQ(r.initial, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_TRUE(r.repairs.empty());
  EXPECT_TRUE(isolated_in_set(path_graph(4), r.sequence.order).empty());

  // Starting from {0,1,3}, vertex 3 is isolated; 2 replaces it.
  const std::vector<Vertex> start{0, 1, 3};
  EXPECT_EQ(isolated_in_set(path_graph(4), start),
            (std::vector<Vertex>{3}));
  const auto fixed = total_dominating_grundy_set(path_graph(4), start);
  ASSERT_EQ(fixed.repairs.size(), 1u);
  EXPECT_EQ(fixed.repairs[0].removed, 3u);
  EXPECT_EQ(fixed.repairs[0].partner, 1u);
  EXPECT_EQ(fixed.repairs[0].added, 2u);
  EXPECT_EQ(fixed.sequence.order, (std::vector<Vertex>{0, 1, 2}));

  const std::vector<Vertex> short_start{1};
  EXPECT_THROW(total_dominating_grundy_set(path_graph(4), short_start),
               ArgumentError);
}

TEST(TotalDomination, Examples) {
  const auto star = total_dominating_grundy_set(star_graph(3));
  EXPECT_EQ(star.sequence.length(), 3u);
  EXPECT_TRUE(star.sequence.vertex_set().contains(0));
  const auto c5 = total_dominating_grundy_set(cycle_graph(5));
  EXPECT_EQ(c5.sequence.length(), 3u);
  EXPECT_TRUE(isolated_in_set(cycle_graph(5), c5.sequence.order).empty());
  EXPECT_THROW(total_dominating_grundy_set(complete_graph(4)), ArgumentError);
  EXPECT_THROW(total_dominating_grundy_set(Graph(3)), ArgumentError);
  EXPECT_THROW(
      total_dominating_grundy_set(disjoint_union(path_graph(3), path_graph(2))),
      ArgumentError);
}

TEST(TotalDomination, RandomConnectedGraphs) {
  Rng rng(81);
  std::size_t repaired = 0;
  for (int k = 0; k < 300; ++k) {
    const Graph g = random_connected_graph(3 + k % 9, 0.3, rng);
    if (is_complete(g)) continue;
    const auto r = total_dominating_grundy_set(g);
    repaired += !r.repairs.empty();
    EXPECT_TRUE(oracle::legal(g, r.sequence.order));
    EXPECT_EQ(r.sequence.length(), grundy_number(g));
    EXPECT_LE(r.repairs.size(), r.sequence.length());
    EXPECT_TRUE(isolated_in_set(g, r.sequence.order).empty());
  }
  EXPECT_GT(repaired, 0u);
}

TEST(TotalDomination, RepairsEveryMaximumSequenceOfSmallGraphs) {
  Rng rng(83);
  for (int k = 0; k < 80; ++k) {
    const Graph g = random_connected_graph(3 + k % 5, 0.4, rng);
    if (is_complete(g)) continue;
    const std::size_t gamma = grundy_number(g);
    std::vector<Vertex> perm(g.order());
    for (Vertex v = 0; v < g.order(); ++v) perm[v] = v;
    // Greedy runs over all permutations reach every maximum sequence.
    do {
      std::vector<Vertex> seq;
      for (Vertex v : perm) {
        seq.push_back(v);
        if (!oracle::legal(g, seq)) seq.pop_back();
      }
      if (seq.size() != gamma) continue;
      const auto r = total_dominating_grundy_set(g, seq);
      EXPECT_LE(r.repairs.size(), gamma);
      EXPECT_EQ(r.sequence.length(), gamma);
      EXPECT_TRUE(isolated_in_set(g, r.sequence.order).empty());
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST(Perturbation, Examples) {
  const auto p4 = perturbation_audit(path_graph(4));
  EXPECT_TRUE(p4.ok());
  EXPECT_EQ(p4.edges.size(), 3u);
  const auto k4 = perturbation_audit(complete_graph(4));
  for (const auto& v : k4.vertices) {
    EXPECT_EQ(v.delta, 0);
    EXPECT_TRUE(v.twin);
  }
  const auto k1 = perturbation_audit(Graph(1));
  EXPECT_TRUE(k1.edges.empty());
  EXPECT_TRUE(k1.vertices.empty());
}

TEST(Perturbation, HistogramCountsEveryDeletion) {
  Rng rng(91);
  for (int k = 0; k < 60; ++k) {
    const Graph g = random_graph(2 + k % 8, 0.5, rng);
    const auto r = perturbation_audit(g);
    EXPECT_TRUE(r.ok());
    std::size_t edges = 0, vertices = 0;
    for (const auto& [d, c] : r.edge_histogram) edges += c;
    for (const auto& [d, c] : r.vertex_histogram) vertices += c;
    EXPECT_EQ(edges, g.size());
    EXPECT_EQ(vertices, g.order());
  }
}

TEST(LeafEdges, NeverDecreaseOnForests) {
  Rng rng(101);
  for (int k = 0; k < 200; ++k) {
    const Graph f = random_forest(2 + k % 10, 0.2, rng);
    for (const auto& d : leaf_edge_deltas(f)) EXPECT_GE(d.delta, 0);
  }
  // On a cycle with a pendant vertex the leaf edge still counts.
  const Graph g(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  EXPECT_EQ(leaf_edge_deltas(g).size(), 1u);
}

}  // namespace
}  // namespace grundy
