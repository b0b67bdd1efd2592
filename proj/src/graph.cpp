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

#include "grundy/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "grundy/errors.hpp"

namespace grundy {

namespace {

std::string vertex_error(Vertex v, std::size_t n) {
  return "vertex " + std::to_string(v) + " out of range for graph of order " +
         std::to_string(n);
}

}  // namespace

Graph::Graph(std::size_t n) : adj_(n) {
  if (n <= kMaskLimit) {
    masks_.resize(n);
    for (std::size_t v = 0; v < n; ++v) masks_[v] = std::uint64_t{1} << v;
  }
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n)
      throw ArgumentError(vertex_error(std::max(e.u, e.v), n));
    if (e.u == e.v)
      throw ArgumentError("self-loop at vertex " + std::to_string(e.u));
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& row : adj_) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      throw ArgumentError("duplicate edge");
  }
  edge_count_ = edges.size();
  if (!masks_.empty()) {
    for (std::size_t v = 0; v < n; ++v)
      for (Vertex w : adj_[v]) masks_[v] |= std::uint64_t{1} << w;
  }
}

void Graph::check_vertex(Vertex v) const {
  if (v >= adj_.size()) throw ArgumentError(vertex_error(v, adj_.size()));
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adj_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adj_.size(); ++u)
    for (Vertex w : adj_[u])
      if (u < w) out.emplace_back(u, w);
  return out;
}

VertexSet Graph::open_neighborhood(Vertex v) const {
  check_vertex(v);
  VertexSet s(order());
  for (Vertex w : adj_[v]) s.insert(w);
  return s;
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
  VertexSet s = open_neighborhood(v);
  s.insert(v);
  return s;
}

std::uint64_t Graph::closed_mask(Vertex v) const {
  check_vertex(v);
  if (masks_.empty())
    throw CapacityError("closed_mask requires order <= 64");
  return masks_[v];
}

ProductVertex ProductIndex::at(Vertex g, Vertex h) const {
  if (g >= g_order_ || h >= h_order_)
    throw ArgumentError("product coordinate out of range");
  return {g, h, static_cast<Vertex>(g * h_order_ + h)};
}

ProductVertex ProductIndex::decode(Vertex index) const {
  if (index >= order()) throw ArgumentError(vertex_error(index, order()));
  return {static_cast<Vertex>(index / h_order_),
          static_cast<Vertex>(index % h_order_), index};
}

Graph delete_edge(const Graph& g, Vertex u, Vertex v) {
  if (!g.adjacent(u, v))
    throw ArgumentError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                        " not in graph");
  auto edges = g.edges();
  std::erase(edges, Edge(u, v));
  return Graph(g.order(), edges);
}

Graph add_edge(const Graph& g, Vertex u, Vertex v) {
  if (g.adjacent(u, v)) throw ArgumentError("edge already present");
  auto edges = g.edges();
  edges.emplace_back(u, v);
  return Graph(g.order(), edges);
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  InducedSubgraph out;
  out.old_to_new.assign(g.order(), std::nullopt);
  out.new_to_old.assign(keep.begin(), keep.end());
  std::sort(out.new_to_old.begin(), out.new_to_old.end());
  if (std::adjacent_find(out.new_to_old.begin(), out.new_to_old.end()) !=
      out.new_to_old.end())
    throw ArgumentError("induced_subgraph: repeated vertex");
  for (Vertex i = 0; i < out.new_to_old.size(); ++i) {
    Vertex old = out.new_to_old[i];
    if (old >= g.order()) throw ArgumentError(vertex_error(old, g.order()));
    out.old_to_new[old] = i;
  }
  std::vector<Edge> edges;
  for (Vertex i = 0; i < out.new_to_old.size(); ++i)
    for (Vertex w : g.neighbors(out.new_to_old[i]))
      if (auto j = out.old_to_new[w]; j && i < *j) edges.emplace_back(i, *j);
  out.graph = Graph(out.new_to_old.size(), edges);
  return out;
}

VertexDeletion delete_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) throw ArgumentError(vertex_error(v, g.order()));
  std::vector<Vertex> keep;
  for (Vertex w = 0; w < g.order(); ++w)
    if (w != v) keep.push_back(w);
  auto sub = induced_subgraph(g, keep);
  return {std::move(sub.graph), std::move(sub.old_to_new),
          std::move(sub.new_to_old)};
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  const auto shift = static_cast<Vertex>(a.order());
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + shift, e.v + shift);
  return Graph(a.order() + b.order(), edges);
}

Graph strong_product(const Graph& g, const Graph& h, std::size_t cap) {
  const std::size_t ng = g.order();
  const std::size_t nh = h.order();
  if (nh != 0 && ng > cap / nh)
    throw CapacityError("strong product of order " + std::to_string(ng) + "x" +
                        std::to_string(nh) + " exceeds cap " +
                        std::to_string(cap));
  ProductIndex index(ng, nh);
  const auto g_edges = g.edges();
  const auto h_edges = h.edges();
  std::vector<Edge> edges;
  edges.reserve(g_edges.size() * nh + ng * h_edges.size() +
                2 * g_edges.size() * h_edges.size());
  // g1 = g2, h1 ~ h2
  for (Vertex x = 0; x < ng; ++x)
    for (const Edge& e : h_edges)
      edges.emplace_back(index.at(x, e.u).index, index.at(x, e.v).index);
  for (const Edge& e : g_edges) {
    // g1 ~ g2, h1 = h2
    for (Vertex y = 0; y < nh; ++y)
      edges.emplace_back(index.at(e.u, y).index, index.at(e.v, y).index);
    // g1 ~ g2, h1 ~ h2 (both diagonals)
    for (const Edge& f : h_edges) {
      edges.emplace_back(index.at(e.u, f.u).index, index.at(e.v, f.v).index);
      edges.emplace_back(index.at(e.u, f.v).index, index.at(e.v, f.u).index);
    }
  }
  return Graph(ng * nh, edges);
}

std::vector<std::size_t> component_ids(const Graph& g) {
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> id(g.order(), kUnset);
  std::size_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (id[s] != kUnset) continue;
    id[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(x))
        if (id[w] == kUnset) {
          id[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return id;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  const auto id = component_ids(g);
  std::vector<std::vector<Vertex>> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (id[v] >= out.size()) out.resize(id[v] + 1);
    out[id[v]].push_back(v);
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.order() > 0 && components(g).size() == 1;
}

bool is_complete(const Graph& g) {
  const std::size_t n = g.order();
  return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

bool is_forest(const Graph& g) {
  return g.size() + components(g).size() == g.order();
}

bool is_tree(const Graph& g) {
  return g.size() + 1 == g.order() && is_connected(g);
}

bool is_caterpillar(const Graph& g) {
  if (!is_tree(g)) return false;
  // The non-leaf vertices of a tree induce a subtree; it is a path iff every
  // one of them has at most two non-leaf neighbors.
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) continue;
    std::size_t inner = 0;
    for (Vertex w : g.neighbors(v))
      if (g.degree(w) != 1) ++inner;
    if (inner > 2) return false;
  }
  return true;
}

bool is_simplicial(const Graph& g, Vertex v) {
  auto nbrs = g.neighbors(v);
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j)
      if (!g.adjacent(nbrs[i], nbrs[j])) return false;
  return true;
}

bool is_twin(const Graph& g, Vertex u, Vertex v) {
  if (u == v) return false;
  return g.closed_neighborhood(u) == g.closed_neighborhood(v);
}

bool has_twin(const Graph& g, Vertex v) {
  for (Vertex w : g.neighbors(v))
    if (is_twin(g, v, w)) return true;
  return false;
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  if (source >= g.order()) throw ArgumentError(vertex_error(source, g.order()));
  std::vector<std::size_t> dist(g.order(), kInf);
  std::queue<Vertex> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop();
    for (Vertex w : g.neighbors(x))
      if (dist[w] == kInf) {
        dist[w] = dist[x] + 1;
        q.push(w);
      }
  }
  return dist;
}

}  // namespace grundy
