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

#include "grundy/theorems.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "grundy/errors.hpp"
#include "grundy/labeling.hpp"

namespace grundy {

namespace {

GrundyResult factor_grundy(const Graph& g, std::size_t cap) {
  if (is_forest(g)) return grundy_forest(g);
  return grundy_exact(g, cap);
}

std::size_t product_grundy(const Graph& g, const Graph& h, std::size_t cap) {
  if (g.order() * h.order() > cap)
    throw CapacityError("product of orders " + std::to_string(g.order()) +
                        "x" + std::to_string(h.order()) + " exceeds cap " +
                        std::to_string(cap));
  return grundy_number(strong_product(g, h), cap);
}

int delta(std::size_t after, std::size_t before) {
  return static_cast<int>(after) - static_cast<int>(before);
}

}  // namespace

std::vector<Vertex> FiberView::footprinters_from(const ProductIndex& index,
                                                 Vertex u) const {
  std::vector<Vertex> out;
  for (Vertex x : footprinters)
    if (index.decode(x).g == u) out.push_back(x);
  return out;
}

FiberView fiber_view(const ProductIndex& index, const LegalSequence& d,
                     Vertex v) {
  if (d.graph_order != index.order())
    throw ArgumentError("sequence does not belong to this product");
  FiberView view;
  view.fixed = v;
  for (Vertex h = 0; h < index.h_order(); ++h)
    view.fiber.push_back(index.at(v, h).index);
  for (std::size_t i = 0; i < d.length(); ++i) {
    const Vertex x = d.order[i];
    if (index.decode(x).g == v) view.members.push_back(x);
    const bool hits = std::any_of(view.fiber.begin(), view.fiber.end(),
                                  [&](Vertex y) {
                                    return d.footprints[i].contains(y);
                                  });
    if (hits) {
      view.footprinters.push_back(x);
      view.projection.push_back(index.decode(x).h);
    }
  }
  return view;
}

FiberBound fiber_footprint_bound(const Graph& g, const Graph& h,
                                 const LegalSequence& d, Vertex v,
                                 std::size_t cap) {
  if (v >= g.order()) throw ArgumentError("vertex not in G");
  const Graph product = strong_product(g, h);
  certify_sequence(product, d.order);
  if (d.length() != grundy_number(product, cap))
    throw ArgumentError("sequence is not maximum for the product");
  FiberBound out;
  out.view = fiber_view(ProductIndex(g.order(), h.order()), d, v);
  out.size = out.view.footprinters.size();
  out.bound = factor_grundy(h, cap).value;
  out.projection_legal = is_legal(h, out.view.projection);
  out.ok = out.size <= out.bound && out.projection_legal;
  return out;
}

ProductCheckReport check_product_identity(const Graph& g, const Graph& h,
                                          std::size_t cap) {
  if (g.order() * h.order() > cap)
    throw CapacityError("product of orders " + std::to_string(g.order()) +
                        "x" + std::to_string(h.order()) + " exceeds cap " +
                        std::to_string(cap));
  ProductCheckReport r;
  r.g_is_forest = is_forest(g);
  auto rg = factor_grundy(g, cap);
  auto rh = factor_grundy(h, cap);
  const Graph product = strong_product(g, h);
  auto rp = grundy_exact(product, cap);
  r.gamma_g = rg.value;
  r.gamma_h = rh.value;
  r.gamma_product = rp.value;
  r.witness_g = std::move(rg.witness);
  r.witness_h = std::move(rh.witness);
  r.witness_product = std::move(rp.witness);
  r.lower_bound_holds = r.gamma_product >= r.gamma_g * r.gamma_h;
  r.identity_holds = r.gamma_product == r.gamma_g * r.gamma_h;

  const ProductIndex index(g.order(), h.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    FiberBound fb;
    fb.view = fiber_view(index, r.witness_product, v);
    fb.size = fb.view.footprinters.size();
    fb.bound = r.gamma_h;
    fb.projection_legal = is_legal(h, fb.view.projection);
    fb.ok = fb.size <= fb.bound && fb.projection_legal;
    if (!fb.ok) r.fiber_bound_violations.push_back(v);
    r.fibers.push_back(std::move(fb));
  }
  return r;
}

PeelBound simplicial_peel_bound(const Graph& g, const Graph& h, Vertex v,
                                std::size_t cap) {
  if (v >= g.order()) throw ArgumentError("vertex not in G");
  if (!is_simplicial(g, v))
    throw ArgumentError("vertex " + std::to_string(v) + " is not simplicial");
  PeelBound b;
  b.lhs = product_grundy(g, h, cap);
  b.gamma_h = grundy_number(h, cap);
  const Graph rest = delete_vertex(g, v).graph;
  b.gamma_rest = rest.order() == 0 ? 0 : product_grundy(rest, h, cap);
  b.rhs = b.gamma_h + b.gamma_rest;
  b.ok = b.lhs <= b.rhs;
  return b;
}

namespace {

// Edges of some cycle, found from the first DFS back edge.
std::vector<Edge> find_cycle(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::optional<Vertex>> parent(n);
  std::vector<int> state(n, 0);
  for (Vertex root = 0; root < n; ++root) {
    if (state[root]) continue;
    std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [x, next] = stack.back();
      const auto nbrs = g.neighbors(x);
      if (next == nbrs.size()) {
        state[x] = 2;
        stack.pop_back();
        continue;
      }
      const Vertex y = nbrs[next++];
      if (parent[x] && *parent[x] == y) continue;
      if (state[y] == 1) {
        std::vector<Edge> cycle{Edge(x, y)};
        for (Vertex w = x; w != y; w = *parent[w])
          cycle.emplace_back(w, *parent[w]);
        std::sort(cycle.begin(), cycle.end());
        return cycle;
      }
      if (state[y] == 0) {
        state[y] = 1;
        parent[y] = x;
        stack.emplace_back(y, 0);
      }
    }
  }
  return {};
}

}  // namespace

SpanningTreeResult spanning_tree_ge(const Graph& g, std::size_t cap) {
  if (!is_connected(g))
    throw ArgumentError("spanning_tree_ge requires a connected graph");
  SpanningTreeResult r;
  r.gamma_graph = grundy_number(g, cap);
  Graph cur = g;
  std::size_t gamma = r.gamma_graph;
  for (auto cycle = find_cycle(cur); !cycle.empty(); cycle = find_cycle(cur)) {
    bool deleted = false;
    for (const Edge& e : cycle) {
      Graph next = delete_edge(cur, e.u, e.v);
      const std::size_t after = grundy_number(next, cap);
      if (after < gamma) continue;
      r.steps.push_back({e, gamma, after});
      cur = std::move(next);
      gamma = after;
      deleted = true;
      break;
    }
    if (!deleted)
      throw InvariantError("every edge of a cycle lowers the Grundy number");
  }
  r.tree = std::move(cur);
  r.gamma_tree = gamma;
  return r;
}

std::vector<Vertex> isolated_in_set(const Graph& g,
                                    std::span<const Vertex> order) {
  std::vector<bool> in(g.order(), false);
  for (Vertex v : order) in[v] = true;
  std::vector<Vertex> out;
  for (Vertex v : order) {
    const auto nbrs = g.neighbors(v);
    if (std::none_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return in[w]; }))
      out.push_back(v);
  }
  return out;
}

TotalDominationResult total_dominating_grundy_set(const Graph& g,
                                                  std::size_t cap) {
  if (g.size() == 0) throw ArgumentError("graph has no edges");
  return total_dominating_grundy_set(g, grundy_exact(g, cap).witness.order,
                                     cap);
}

TotalDominationResult total_dominating_grundy_set(
    const Graph& g, std::span<const Vertex> start, std::size_t cap) {
  if (g.size() == 0) throw ArgumentError("graph has no edges");
  if (!is_connected(g)) throw ArgumentError("graph is not connected");
  if (is_complete(g)) throw ArgumentError("graph is complete");

  TotalDominationResult r;
  const auto exact = grundy_exact(g, cap);
  if (certify_sequence(g, start).length() != exact.value)
    throw ArgumentError("starting sequence is not a maximum legal sequence");
  r.initial.assign(start.begin(), start.end());
  std::vector<Vertex> seq = r.initial;
  const std::size_t limit = seq.size();
  for (std::size_t round = 0;; ++round) {
    const auto isolated = isolated_in_set(g, seq);
    if (isolated.empty()) break;
    if (round == limit)
      throw InvariantError("total domination repair did not terminate");
    const Vertex v = isolated.front();
    std::vector<bool> in(g.order(), false);
    for (Vertex x : seq) in[x] = true;
    const auto dist = bfs_distances(g, v);
    std::optional<Vertex> partner;
    for (Vertex x = 0; x < g.order() && !partner; ++x)
      if (in[x] && dist[x] == 2) partner = x;
    if (!partner)
      throw InvariantError("vertex " + std::to_string(v) +
                           " has no set vertex at distance 2");
    Vertex u = 0;
    for (Vertex w : g.neighbors(v))
      if (g.adjacent(w, *partner)) {
        u = w;
        break;
      }
    seq.erase(std::find(seq.begin(), seq.end(), v));
    seq.push_back(u);
    r.repairs.push_back({v, *partner, u});
  }
  r.sequence = certify_sequence(g, seq);
  if (r.sequence.length() != exact.value)
    throw InvariantError("repair changed the sequence length");
  return r;
}

std::size_t PerturbationReport::violations() const {
  std::size_t bad = 0;
  for (const auto& e : edges) bad += !e.ok;
  for (const auto& v : vertices) bad += !v.ok;
  return bad;
}

PerturbationReport perturbation_audit(const Graph& g, std::size_t cap) {
  PerturbationReport r;
  r.gamma = grundy_number(g, cap);
  for (const Edge& e : g.edges()) {
    EdgeDelta d{e, 0, g.is_leaf(e.u) || g.is_leaf(e.v), false};
    d.delta = delta(grundy_number(delete_edge(g, e.u, e.v), cap), r.gamma);
    d.ok = d.delta >= -1 && d.delta <= 1;
    ++r.edge_histogram[d.delta];
    r.edges.push_back(d);
  }
  // Deleting the only vertex leaves no graph to compare against.
  if (g.order() < 2) return r;
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexDelta d{v, 0, is_simplicial(g, v), has_twin(g, v), false};
    d.delta = delta(grundy_number(delete_vertex(g, v).graph, cap), r.gamma);
    d.ok = d.delta >= -2 && d.delta <= 0;
    if (d.simplicial && d.delta < -1) d.ok = false;
    if (d.twin && d.delta != 0) d.ok = false;
    ++r.vertex_histogram[d.delta];
    r.vertices.push_back(d);
  }
  return r;
}

std::vector<EdgeDelta> leaf_edge_deltas(const Graph& g, std::size_t cap) {
  const std::size_t gamma = grundy_number(g, cap);
  std::vector<EdgeDelta> out;
  for (const Edge& e : g.edges()) {
    if (!g.is_leaf(e.u) && !g.is_leaf(e.v)) continue;
    EdgeDelta d{e, 0, true, false};
    d.delta = delta(grundy_number(delete_edge(g, e.u, e.v), cap), gamma);
    d.ok = d.delta >= -1 && d.delta <= 1;
    out.push_back(d);
  }
  return out;
}

}  // namespace grundy
