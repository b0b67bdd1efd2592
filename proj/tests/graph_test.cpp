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

#include <sstream>

#include "grundy/errors.hpp"
#include "grundy/generators.hpp"
#include "grundy/graph.hpp"
#include "grundy/graph_io.hpp"
#include "oracles.hpp"

namespace grundy {
namespace {

TEST(Graph, AdjacencyIsSymmetricAndSorted) {
  Graph g(4, {{2, 0}, {0, 1}, {3, 0}});
  EXPECT_EQ(g.size(), 3u);
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_FALSE(g.adjacent(1, 2));
  ASSERT_EQ(g.neighbors(0).size(), 3u);
  EXPECT_EQ(g.neighbors(0)[0], 1u);
  EXPECT_EQ(g.neighbors(0)[2], 3u);
  EXPECT_EQ(g.closed_neighborhood(1).to_vector(), (std::vector<Vertex>{0, 1}));
}

TEST(Graph, RejectsLoopsDuplicatesAndRange) {
  EXPECT_THROW(Graph(3, {{1, 1}}), ArgumentError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), ArgumentError);
  EXPECT_THROW(Graph(3, {{0, 3}}), ArgumentError);
}

TEST(Graph, EdgeAndVertexDeletion) {
  const Graph c4 = cycle_graph(4);
  const Graph p4 = delete_edge(c4, 0, 3);
  EXPECT_TRUE(is_tree(p4));
  EXPECT_THROW(delete_edge(p4, 0, 3), ArgumentError);
  const auto d = delete_vertex(c4, 1);
  EXPECT_EQ(d.graph.order(), 3u);
  EXPECT_FALSE(d.old_to_new[1].has_value());
  EXPECT_EQ(*d.old_to_new[3], 2u);
  EXPECT_EQ(d.graph.size(), 2u);
}

TEST(Graph, StrongProductOfTwoEdgesIsK4) {
  const Graph k4 = strong_product(path_graph(2), path_graph(2));
  EXPECT_TRUE(is_complete(k4));
  EXPECT_EQ(k4.order(), 4u);
}

TEST(Graph, StrongProductMatchesDefinition) {
  Rng rng(5);
  for (int k = 0; k < 40; ++k) {
    const Graph g = random_graph(1 + k % 5, 0.5, rng);
    const Graph h = random_graph(1 + k % 4, 0.5, rng);
    const Graph p = strong_product(g, h);
    const ProductIndex idx(g.order(), h.order());
    for (Vertex x = 0; x < p.order(); ++x)
      for (Vertex y = 0; y < p.order(); ++y) {
        const auto a = idx.decode(x), b = idx.decode(y);
        const bool gg = a.g == b.g || g.adjacent(a.g, b.g);
        const bool hh = a.h == b.h || h.adjacent(a.h, b.h);
        EXPECT_EQ(p.adjacent(x, y), x != y && gg && hh);
      }
  }
}

TEST(Graph, StrongProductCap) {
  EXPECT_THROW(strong_product(path_graph(10), path_graph(10), 99),
               CapacityError);
}

TEST(Graph, Predicates) {
  EXPECT_TRUE(is_forest(Graph(3)));
  EXPECT_FALSE(is_tree(Graph(3)));
  EXPECT_FALSE(is_forest(cycle_graph(3)));
  EXPECT_TRUE(is_caterpillar(star_graph(3)));
  const std::size_t legs[] = {3, 3, 3};
  EXPECT_FALSE(is_caterpillar(spider_graph(legs)));
  EXPECT_TRUE(is_simplicial(path_graph(3), 0));
  EXPECT_FALSE(is_simplicial(path_graph(3), 1));
  EXPECT_TRUE(is_twin(complete_graph(3), 0, 2));
  EXPECT_FALSE(has_twin(path_graph(4), 1));
  EXPECT_TRUE(has_twin(path_graph(2), 0));
}

TEST(Graph, CaterpillarAgreesWithReference) {
  for (std::size_t n = 1; n <= 8; ++n)
    for_each_labeled_tree(n, [&](const Graph& t) {
      ASSERT_EQ(is_caterpillar(t), oracle::caterpillar_tree(t));
    });
}

TEST(Graph, Components) {
  const Graph g(6, {{0, 1}, {2, 3}, {3, 4}});
  const auto comps = components(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[1], (std::vector<Vertex>{2, 3, 4}));
  EXPECT_EQ(comps[2], (std::vector<Vertex>{5}));
  EXPECT_FALSE(is_connected(g));
}

TEST(Generators, PruferEnumerationCountsAndTrees) {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::size_t count = 0;
    for_each_labeled_tree(n, [&](const Graph& t) {
      ++count;
      EXPECT_TRUE(is_tree(t));
    });
    std::size_t expected = 1;
    for (std::size_t i = 2; i < n; ++i) expected *= n;
    EXPECT_EQ(count, expected) << n;
  }
}

TEST(Generators, RandomShapes) {
  Rng rng(1);
  for (int k = 0; k < 50; ++k) {
    EXPECT_TRUE(is_tree(random_tree(1 + k % 12, rng)));
    EXPECT_TRUE(is_forest(random_forest(1 + k % 12, 0.3, rng)));
    EXPECT_TRUE(is_connected(random_connected_graph(1 + k % 12, 0.3, rng)));
  }
  const std::size_t legs[] = {1, 2};
  const Graph s = spider_graph(legs);
  EXPECT_EQ(s.order(), 4u);
  EXPECT_TRUE(s.adjacent(0, 1) && s.adjacent(0, 2) && s.adjacent(2, 3));
}

TEST(GraphIo, EdgeListRoundTrip) {
  Rng rng(3);
  for (int k = 0; k < 30; ++k) {
    const Graph g = random_graph(k % 9, 0.4, rng);
    EXPECT_EQ(parse_edge_list(format_edge_list(g)), g);
  }
}

TEST(GraphIo, CommentsAndBlankLines) {
  const Graph g = parse_edge_list("# path\n\n3 2\n0 1  # first\n1 2\n");
  EXPECT_EQ(g, path_graph(3));
}

TEST(GraphIo, ParseErrorsCarryLineNumbers) {
  auto line_of = [](std::string_view text) {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("3 2\n0 1\n1 x\n"), 3u);
  EXPECT_EQ(line_of("3 1\n0 5\n"), 2u);
  EXPECT_EQ(line_of("3 1\n1 1\n"), 2u);
  EXPECT_EQ(line_of("3 2\n0 1\n1 0\n"), 3u);
  EXPECT_EQ(line_of("3 1\n0 1\n1 2\n"), 3u);
  EXPECT_GT(line_of("3 2\n0 1\n"), 0u);
  EXPECT_EQ(line_of("x\n"), 1u);
}

TEST(GraphIo, Graph6KnownStrings) {
  EXPECT_EQ(format_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(parse_graph6("C~"), complete_graph(4));
  EXPECT_EQ(format_graph6(Graph(0)), "?");
  EXPECT_EQ(parse_graph6(">>graph6<<A_"), path_graph(2));
}

TEST(GraphIo, Graph6RoundTripIncludingLongHeader) {
  Rng rng(9);
  for (std::size_t n : {1, 5, 17, 62, 63, 70}) {
    const Graph g = random_graph(n, 0.2, rng);
    EXPECT_EQ(parse_graph6(format_graph6(g)), g) << n;
  }
}

TEST(GraphIo, LoadsFixtureFiles) {
  const Graph spider = load_graph(GRUNDY_TEST_DATA "/spider.el");
  EXPECT_EQ(spider.order(), 10u);
  EXPECT_TRUE(is_tree(spider));
  EXPECT_THROW(load_graph(GRUNDY_TEST_DATA "/bad_token.el"), ParseError);
  EXPECT_THROW(load_graph(GRUNDY_TEST_DATA "/missing.el"), std::runtime_error);
}

}  // namespace
}  // namespace grundy
