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
#include <map>
#include <span>
#include <vector>

#include "grundy/graph.hpp"
#include "grundy/legal.hpp"

namespace grundy {

// Vertices of a maximum product sequence seen from one G-coordinate.
struct FiberView {
  Vertex fixed = 0;              // the G-coordinate v
  std::vector<Vertex> fiber;     // product ids of {v} x H, ascending
  std::vector<Vertex> members;   // D_v: sequence vertices inside the fiber
  // F_v: sequence vertices with a footprint in the fiber, in sequence order.
  std::vector<Vertex> footprinters;
  // H-coordinates of `footprinters`, same order.
  std::vector<Vertex> projection;

  // D_u(F_v): footprinters whose G-coordinate is u.
  std::vector<Vertex> footprinters_from(const ProductIndex& index,
                                        Vertex u) const;
};

FiberView fiber_view(const ProductIndex& index, const LegalSequence& d,
                     Vertex v);

struct FiberBound {
  FiberView view;
  std::size_t size = 0;   // |F_v|
  std::size_t bound = 0;  // gamma_gr(H)
  bool projection_legal = false;
  bool ok = false;
};

// `d` must be a maximum legal sequence of G x H; checked with the exact
// solver.
FiberBound fiber_footprint_bound(const Graph& g, const Graph& h,
                                 const LegalSequence& d, Vertex v,
                                 std::size_t cap = kDefaultExactCap);

struct ProductCheckReport {
  std::size_t gamma_g = 0;
  std::size_t gamma_h = 0;
  std::size_t gamma_product = 0;
  bool g_is_forest = false;
  bool lower_bound_holds = false;  // gamma_product >= gamma_g * gamma_h
  bool identity_holds = false;
  LegalSequence witness_g;
  LegalSequence witness_h;
  LegalSequence witness_product;
  std::vector<FiberBound> fibers;  // one per vertex of G
  std::vector<Vertex> fiber_bound_violations;

  // Equality is only guaranteed when G is a forest.
  bool consistent() const {
    return lower_bound_holds && fiber_bound_violations.empty() &&
           (!g_is_forest || identity_holds);
  }
};

ProductCheckReport check_product_identity(const Graph& g, const Graph& h,
                                          std::size_t cap = kDefaultExactCap);

struct PeelBound {
  std::size_t lhs = 0;         // gamma(G x H)
  std::size_t gamma_h = 0;
  std::size_t gamma_rest = 0;  // gamma((G - v) x H)
  std::size_t rhs = 0;
  bool ok = false;
};

PeelBound simplicial_peel_bound(const Graph& g, const Graph& h, Vertex v,
                                std::size_t cap = kDefaultExactCap);

struct DeletionStep {
  Edge edge;
  std::size_t before = 0;
  std::size_t after = 0;
};

struct SpanningTreeResult {
  Graph tree;
  std::vector<DeletionStep> steps;
  std::size_t gamma_graph = 0;
  std::size_t gamma_tree = 0;
};

SpanningTreeResult spanning_tree_ge(const Graph& g,
                                    std::size_t cap = kDefaultExactCap);

struct TotalRepair {
  Vertex removed = 0;
  Vertex partner = 0;  // vertex of the set at distance 2
  Vertex added = 0;
};

struct TotalDominationResult {
  LegalSequence sequence;
  std::vector<Vertex> initial;  // the exact solver's witness
  std::vector<TotalRepair> repairs;
};

// Vertices of the sequence's set with no neighbour inside the set.
std::vector<Vertex> isolated_in_set(const Graph& g,
                                    std::span<const Vertex> order);

TotalDominationResult total_dominating_grundy_set(
    const Graph& g, std::size_t cap = kDefaultExactCap);
// Repairs a given maximum legal sequence instead of the exact witness.
TotalDominationResult total_dominating_grundy_set(
    const Graph& g, std::span<const Vertex> start,
    std::size_t cap = kDefaultExactCap);

struct EdgeDelta {
  Edge edge;
  int delta = 0;
  bool leaf_edge = false;
  bool ok = false;
};

struct VertexDelta {
  Vertex vertex = 0;
  int delta = 0;
  bool simplicial = false;
  bool twin = false;
  bool ok = false;
};

struct PerturbationReport {
  std::size_t gamma = 0;
  std::vector<EdgeDelta> edges;
  std::vector<VertexDelta> vertices;
  std::map<int, std::size_t> edge_histogram;
  std::map<int, std::size_t> vertex_histogram;

  std::size_t violations() const;
  bool ok() const { return violations() == 0; }
};

PerturbationReport perturbation_audit(const Graph& g,
                                      std::size_t cap = kDefaultExactCap);

// Deltas of every edge incident to a leaf; on forests none may be negative.
std::vector<EdgeDelta> leaf_edge_deltas(const Graph& g,
                                        std::size_t cap = kDefaultExactCap);

}  // namespace grundy
