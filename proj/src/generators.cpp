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

#include "grundy/generators.hpp"

#include <queue>

#include "grundy/errors.hpp"

namespace grundy {

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw ArgumentError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

Graph spider_graph(std::span<const std::size_t> legs) {
  std::vector<Edge> edges;
  Vertex next = 1;
  for (std::size_t len : legs) {
    if (len == 0) throw ArgumentError("spider legs must have length >= 1");
    Vertex prev = 0;
    for (std::size_t i = 0; i < len; ++i, ++next) {
      edges.emplace_back(prev, next);
      prev = next;
    }
  }
  return Graph(next, edges);
}

Graph tree_from_prufer(std::size_t n, std::span<const Vertex> sequence) {
  if (n < 2 || sequence.size() != n - 2)
    throw ArgumentError("Prüfer sequence must have length n-2 with n >= 2");
  std::vector<std::size_t> degree(n, 1);
  for (Vertex x : sequence) {
    if (x >= n) throw ArgumentError("Prüfer entry out of range");
    ++degree[x];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);
  std::vector<Edge> edges;
  for (Vertex x : sequence) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1) leaves.push(x);
  }
  Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Graph(n, edges);
}

void for_each_labeled_tree(std::size_t n,
                           const std::function<void(const Graph&)>& visit) {
  if (n == 0) return;
  if (n == 1) {
    visit(Graph(1));
    return;
  }
  std::vector<Vertex> seq(n - 2, 0);
  while (true) {
    visit(tree_from_prufer(n, seq));
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
}

Graph random_tree(std::size_t n, Rng& rng) {
  if (n <= 1) return Graph(n);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<Vertex> seq(n - 2);
  for (auto& x : seq) x = pick(rng);
  return tree_from_prufer(n, seq);
}

Graph random_forest(std::size_t n, double drop, Rng& rng) {
  Graph tree = random_tree(n, rng);
  std::bernoulli_distribution remove(drop);
  std::vector<Edge> kept;
  for (const Edge& e : tree.edges())
    if (!remove(rng)) kept.push_back(e);
  return Graph(n, kept);
}

Graph random_graph(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph random_connected_graph(std::size_t n, double p, Rng& rng) {
  Graph tree = random_tree(n, rng);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges = tree.edges();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!tree.adjacent(u, v) && coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace grundy
