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
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "grundy/vertex_set.hpp"

namespace grundy {

// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph on vertices 0..order()-1.
//
// Adjacency is kept as sorted neighbor lists. Graphs of order <= 64 also
// carry closed-neighborhood masks, which is what the exact solvers consume.
class Graph {
 public:
  static constexpr std::size_t kMaskLimit = 64;

  Graph() = default;
  explicit Graph(std::size_t n);  // edgeless

  // Throws ArgumentError on self-loops, duplicate edges or ids >= n.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;
  bool is_leaf(Vertex v) const { return degree(v) == 1; }

  // All edges sorted lexicographically.
  std::vector<Edge> edges() const;

  VertexSet open_neighborhood(Vertex v) const;
  VertexSet closed_neighborhood(Vertex v) const;

  // N[v] as a bitmask; only for order() <= kMaskLimit.
  std::uint64_t closed_mask(Vertex v) const;
  bool has_masks() const noexcept { return !masks_.empty() || adj_.empty(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_ == b.adj_;
  }

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> masks_;
  std::size_t edge_count_ = 0;
};

// Result of a vertex deletion: the smaller graph plus the renumbering.
struct VertexDeletion {
  Graph graph;
  // old id -> new id; nullopt for the deleted vertex.
  std::vector<std::optional<Vertex>> old_to_new;
  std::vector<Vertex> new_to_old;
};

// Induced subgraph on `keep` (any order); new ids follow ascending old ids.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> new_to_old;
  std::vector<std::optional<Vertex>> old_to_new;
};

// Coordinates of a strong-product vertex. index = g * |V(H)| + h.
struct ProductVertex {
  Vertex g = 0;
  Vertex h = 0;
  Vertex index = 0;
};

// Maps between product coordinates and flat ids for fixed factor orders.
class ProductIndex {
 public:
  ProductIndex(std::size_t g_order, std::size_t h_order)
      : g_order_(g_order), h_order_(h_order) {}

  std::size_t g_order() const noexcept { return g_order_; }
  std::size_t h_order() const noexcept { return h_order_; }
  std::size_t order() const noexcept { return g_order_ * h_order_; }

  ProductVertex at(Vertex g, Vertex h) const;
  ProductVertex decode(Vertex index) const;

 private:
  std::size_t g_order_;
  std::size_t h_order_;
};

inline constexpr std::size_t kDefaultProductCap = 1'000'000;

Graph delete_edge(const Graph& g, Vertex u, Vertex v);
Graph add_edge(const Graph& g, Vertex u, Vertex v);
VertexDeletion delete_vertex(const Graph& g, Vertex v);
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);
Graph disjoint_union(const Graph& a, const Graph& b);

// G ⊠ H. Throws CapacityError when |V(G)|·|V(H)| exceeds `cap`.
Graph strong_product(const Graph& g, const Graph& h,
                     std::size_t cap = kDefaultProductCap);

// Component id per vertex, numbered by smallest member.
std::vector<std::size_t> component_ids(const Graph& g);
std::vector<std::vector<Vertex>> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_complete(const Graph& g);

bool is_forest(const Graph& g);
bool is_tree(const Graph& g);
// True iff g is a tree whose non-leaf vertices induce a path (possibly empty).
bool is_caterpillar(const Graph& g);

bool is_simplicial(const Graph& g, Vertex v);
bool is_twin(const Graph& g, Vertex u, Vertex v);
// Whether some other vertex shares v's closed neighborhood.
bool has_twin(const Graph& g, Vertex v);

// Shortest-path distances from `source`; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);

}  // namespace grundy
