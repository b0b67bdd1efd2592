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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grundy/graph.hpp"

namespace grundy {

// How to pick and orient a spine among the maximum paths of a caterpillar.
struct SpineRule {
  // Optional per-vertex key (indexed by global id). When empty, endpoints are
  // compared by id alone: the lexicographically smallest endpoint pair is
  // chosen with the smaller id on the left. When present, the left endpoint
  // minimises (key, id) and the right endpoint maximises key (ties: smaller
  // id), which keeps an inherited left-to-right orientation.
  std::span<const std::size_t> key;
  // Swap the chosen endpoints.
  bool reversed = false;
};

// Spine of the caterpillar induced by `vertices` in f: a maximum path
// v_1..v_k (global ids). Throws ArgumentError if the induced subgraph is not
// a caterpillar or has fewer than two vertices.
std::vector<Vertex> choose_spine(const Graph& f,
                                 std::span<const Vertex> vertices,
                                 const SpineRule& rule = {});

// Positions of `vertices` (ascending) relative to `spine`: v_i gets i and an
// off-spine vertex gets its distance to v_1 inside the induced subgraph.
std::vector<std::size_t> spine_positions(const Graph& f,
                                         std::span<const Vertex> vertices,
                                         std::span<const Vertex> spine);

// One caterpillar of a partition, with its spine coordinates.
struct Block {
  std::vector<Vertex> vertices;  // ascending
  std::vector<Vertex> spine;     // v_1..v_k
  // Aligned with `vertices`. Spine vertex v_i has position i; an off-spine
  // vertex has its distance to v_1.
  std::vector<std::size_t> positions;
  // Branch vertices by rank (rank r is index r-1): ascending position; at
  // equal position off-spine vertices first, then by id.
  std::vector<Vertex> branch_vertices;

  bool contains(Vertex v) const;
  bool on_spine(Vertex v) const;
  std::size_t position(Vertex v) const;
  // 1-based rank if v is a branch vertex of this block.
  std::optional<std::size_t> rank(Vertex v) const;
  std::size_t max_position() const;
};

struct CaterpillarPartition {
  std::size_t graph_order = 0;
  std::vector<Block> blocks;       // ordered by smallest member
  std::vector<Edge> branch_edges;  // ascending
  std::vector<Vertex> isolates;    // excluded from blocks
  // Whether `blocks.size()` was proven minimum by exhaustive search.
  bool certified_minimum = false;
  std::size_t search_nodes = 0;

  std::size_t size() const noexcept { return blocks.size(); }
  std::optional<std::size_t> block_of(Vertex v) const;
};

// Builds a partition from explicit blocks, computing spines (SpineRule{}),
// positions, branch edges and ranks. Does not check minimality.
CaterpillarPartition make_partition(const Graph& f,
                                    std::vector<std::vector<Vertex>> blocks,
                                    const SpineRule& rule = {});

// Problems with `p` as a caterpillar partition of f: blocks cover exactly
// the non-isolates, each block induces a caterpillar on >= 2 vertices, and
// every branch edge meets a non-leaf of its blocks. Empty when valid.
std::vector<std::string> partition_problems(const Graph& f,
                                            const CaterpillarPartition& p);

// Minimum caterpillar partition by iterative deepening over branch-edge sets.
// Each non-caterpillar block contains a subdivided claw, one of whose six
// edges must be cut, so the search branches at most six ways per level and
// the first depth with a feasible cut set is the minimum. Deterministic.
// Throws ArgumentError for non-forests.
CaterpillarPartition minimum_caterpillar_partition(const Graph& f);

// Size of a minimum caterpillar partition.
std::size_t min_partition_size(const Graph& f);

// Contracted forest: one vertex per block, adjacent when joined by a branch
// edge.
struct CanopyGraph {
  Graph graph;
  // For canopy edge i (in graph.edges() order), the forest edges realising it.
  std::vector<std::vector<Edge>> realising_edges;
};

// Throws InvariantError if p is not a valid partition of f or the contraction
// has a cycle.
CanopyGraph canopy_graph(const Graph& f, const CaterpillarPartition& p);

// Every leaf-edge deletion strictly shrinks the minimum partition. Vacuously
// true when f has no leaf edges.
bool is_caterpillar_critical(const Graph& f);

enum class LeafCaterpillarClass { kP2, kP5Center, kOther };

struct LeafCaterpillar {
  std::size_t block = 0;
  Vertex branch_vertex = 0;
  LeafCaterpillarClass kind = LeafCaterpillarClass::kOther;
};

// Blocks with exactly one branch vertex, classified as P2, P5 whose only
// branch vertex is its center, or other.
std::vector<LeafCaterpillar> classify_leaf_caterpillars(
    const Graph& f, const CaterpillarPartition& p);

// Pairs of blocks whose rank-1 branch vertices are adjacent in f.
std::vector<std::pair<std::size_t, std::size_t>> adjacent_rank_one_pairs(
    const Graph& f, const CaterpillarPartition& p);

std::string to_string(LeafCaterpillarClass c);

}  // namespace grundy
