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

#include <fstream>
#include <sstream>

#include "grundy/acceptance.hpp"
#include "grundy/errors.hpp"
#include "grundy/generators.hpp"
#include "grundy/graph_io.hpp"
#include "grundy/labeling.hpp"
#include "oracles.hpp"

namespace grundy {
namespace {

Graph spider333() {
  const std::size_t legs[] = {3, 3, 3};
  return spider_graph(legs);
}

std::vector<std::vector<Vertex>> read_blocks(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::vector<Vertex>> blocks;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::vector<Vertex> block;
    for (Vertex v; fields >> v;) block.push_back(v);
    blocks.push_back(block);
  }
  return blocks;
}

// Checks every property a finished trace must have.
void expect_sound(const Graph& f, const LabelingTrace& t) {
  ASSERT_TRUE(oracle::legal(f, t.sequence)) << format_edge_list(f);
  EXPECT_EQ(t.length(), f.order() - t.partition_size);
  ASSERT_EQ(t.unlabeled.size(), t.partition_size);
  for (const auto& u : t.unlabeled) {
    ASSERT_TRUE(u.has_value());
    EXPECT_EQ(t.label(*u), 0u);
  }
  for (std::size_t i = 0; i < t.sequence.size(); ++i)
    EXPECT_EQ(t.label(t.sequence[i]), i + 1);
  if (t.fallback) return;
  for (const auto& it : t.iterations) {
    EXPECT_FALSE(it.labeled.empty() && it.removed_blocks.empty());
    if (it.had_noncaterpillar_component) EXPECT_TRUE(it.rank_one_pair_present);
  }
  for (const auto& b : t.branch_labels)
    EXPECT_TRUE(b.footprint_ok) << "vertex " << b.vertex << " in "
                                << format_edge_list(f);
}

TEST(CaterpillarLabeling, Examples) {
  EXPECT_EQ(caterpillar_labeling(path_graph(2)).sequence,
            (std::vector<Vertex>{0}));
  const auto star = caterpillar_labeling(star_graph(3));
  EXPECT_EQ(star.sequence, (std::vector<Vertex>{1, 3, 0}));
  EXPECT_EQ(star.unlabeled.front(), std::optional<Vertex>(2));
  EXPECT_EQ(caterpillar_labeling(path_graph(5)).sequence,
            (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_THROW(caterpillar_labeling(spider333()), ArgumentError);
  EXPECT_THROW(caterpillar_labeling(Graph(1)), ArgumentError);
}

TEST(CaterpillarLabeling, LegalWithOneVertexLeftOnEveryCaterpillar) {
  for (std::size_t n = 2; n <= 8; ++n)
    for_each_labeled_tree(n, [&](const Graph& t) {
      if (!is_caterpillar(t)) return;
      const auto trace = caterpillar_labeling(t);
      ASSERT_EQ(trace.length(), n - 1);
      ASSERT_TRUE(oracle::legal(t, trace.sequence)) << format_edge_list(t);
    });
}

TEST(ForestLabeling, CaterpillarMatchesCaterpillarLabeling) {
  Rng rng(5);
  for (int k = 0; k < 200; ++k) {
    const Graph t = random_tree(2 + k % 15, rng);
    if (!is_caterpillar(t)) continue;
    EXPECT_EQ(forest_labeling(t).sequence, caterpillar_labeling(t).sequence);
  }
}

TEST(ForestLabeling, SpiderAndSmallForests) {
  const auto t = forest_labeling(spider333());
  EXPECT_EQ(t.length(), 8u);
  expect_sound(spider333(), t);
  EXPECT_EQ(grundy_forest(path_graph(7)).value, 6u);
  const Graph f = disjoint_union(disjoint_union(path_graph(3), path_graph(3)),
                                 Graph(1));
  const auto r = grundy_forest(f);
  EXPECT_EQ(r.value, 5u);
  EXPECT_EQ(r.witness.order.back(), 6u);  // the isolate comes last
  EXPECT_EQ(grundy_forest(Graph(0)).value, 0u);
  EXPECT_THROW(grundy_forest(cycle_graph(3)), ArgumentError);
}

TEST(ForestLabeling, SoundOnEverySmallTree) {
  for (std::size_t n = 2; n <= 8; ++n)
    for_each_labeled_tree(n, [&](const Graph& t) {
      const auto trace = forest_labeling(t);
      ASSERT_FALSE(trace.fallback) << format_edge_list(t);
      ASSERT_EQ(trace.length(), grundy_number(t)) << format_edge_list(t);
      expect_sound(t, trace);
    });
}

TEST(ForestLabeling, SoundOnRandomForests) {
  Rng rng(2024);
  for (int k = 0; k < 3000; ++k) {
    const Graph f = random_forest(1 + k % 16, 0.15, rng);
    const auto trace = forest_labeling(f);
    ASSERT_EQ(trace.length(), grundy_number(f)) << format_edge_list(f);
    expect_sound(f, trace);
  }
}

TEST(ForestLabeling, ExplicitPartitionMustBeValid) {
  const Graph p4 = path_graph(4);
  EXPECT_THROW(forest_labeling(p4, make_partition(p4, {{0, 1}, {2, 3}})),
               ArgumentError);
}

TEST(ForestLabeling, FallbackReplacesAComponentWithTheExactWitness) {
  // A 24-vertex tree whose labeling fails certification in both spine
  // orientations of the offending block.
  const Graph t(24, {{0, 5},   {0, 14},  {1, 3},   {1, 12},  {1, 20},
                     {1, 21},  {2, 4},   {3, 23},  {4, 14},  {5, 9},
                     {6, 23},  {7, 11},  {8, 17},  {9, 12},  {10, 16},
                     {11, 16}, {12, 19}, {13, 15}, {13, 20}, {14, 17},
                     {14, 22}, {16, 21}, {18, 22}});
  const auto trace = forest_labeling(t);
  EXPECT_TRUE(trace.fallback);
  EXPECT_FALSE(trace.reversed_blocks.empty());
  EXPECT_EQ(trace.length(), grundy_number(t));
  EXPECT_TRUE(oracle::legal(t, trace.sequence));
}

class LabeledFixtureTest : public ::testing::TestWithParam<std::string> {};

TEST_P(LabeledFixtureTest, FileMatchesBuiltFixtureAndCounts) {
  const auto fx = GetParam() == "path_blocks_47" ? path_blocks_fixture()
                                                 : mixed_blocks_fixture();
  const std::string base = std::string(GRUNDY_TEST_DATA) + "/" + GetParam();
  EXPECT_EQ(load_graph(base + ".el"), fx.graph);
  EXPECT_EQ(read_blocks(base + ".blocks"), fx.blocks);

  const auto p = make_partition(fx.graph, fx.blocks);
  ASSERT_TRUE(partition_problems(fx.graph, p).empty());
  const auto trace = forest_labeling(fx.graph, p);
  EXPECT_EQ(trace.length(), fx.expected_labels);
  EXPECT_EQ(trace.partition_size, fx.blocks.size());
  EXPECT_EQ(trace.iterations.size(), fx.expected_iterations);
  EXPECT_EQ(trace.iterations.front().labeled, fx.expected_first_iteration);
  EXPECT_FALSE(trace.fallback);
  expect_sound(fx.graph, trace);
}

INSTANTIATE_TEST_SUITE_P(Figures, LabeledFixtureTest,
                         ::testing::Values("path_blocks_47",
                                           "mixed_blocks_19"));

TEST(LabeledFixtures, MixedBlocksLeafBranchVertexPrecedesItsNeighbour) {
  // Vertex ids are the drawn labels minus one. The leaf branch vertex 7
  // and its partner 8 are labeled before spine vertex 9, which shares the
  // leaf's position but is only labeled once the block's branch vertices
  // are done.
  const auto fx = mixed_blocks_fixture();
  const auto trace =
      forest_labeling(fx.graph, make_partition(fx.graph, fx.blocks));
  EXPECT_EQ(trace.label(7), 8u);
  EXPECT_EQ(trace.label(8), 9u);
  EXPECT_EQ(trace.label(9), 10u);
}

TEST(LabeledFixtures, ComputedPartitionOfThePathForestIsSmaller) {
  const auto fx = path_blocks_fixture();
  const auto p = minimum_caterpillar_partition(fx.graph);
  EXPECT_EQ(p.size(), 6u);
  const auto r = grundy_forest(fx.graph);
  EXPECT_EQ(r.value, 41u);
  EXPECT_TRUE(oracle::legal(fx.graph, r.witness.order));
}

}  // namespace
}  // namespace grundy
