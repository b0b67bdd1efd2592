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
#include <variant>
#include <vector>

#include "grundy/graph.hpp"
#include "grundy/vertex_set.hpp"

namespace grundy {

inline constexpr std::size_t kDefaultExactCap = 24;

// A validated legal sequence together with its footprint ledger.
//
// footprints[i] is N[order[i]] minus everything dominated before step i and
// is never empty; dominated_after[i] is the union of footprints[0..i].
struct LegalSequence {
  std::size_t graph_order = 0;
  std::vector<Vertex> order;
  std::vector<VertexSet> footprints;
  std::vector<VertexSet> dominated_after;

  std::size_t length() const noexcept { return order.size(); }
  // The legal set Ŝ.
  VertexSet vertex_set() const;
  VertexSet dominated() const;
  // Step index whose footprint contains v, if v is dominated at the end.
  std::optional<std::size_t> footprinter_step(Vertex v) const;
};

// First step whose footprint is empty.
struct SequenceViolation {
  std::size_t index = 0;
  Vertex vertex = 0;
};

using SequenceCheck = std::variant<LegalSequence, SequenceViolation>;

// Evaluates `order` against g. Repeated vertices are violations (their
// footprint is empty); out-of-range ids throw ArgumentError.
SequenceCheck validate_sequence(const Graph& g, std::span<const Vertex> order);
bool is_legal(const Graph& g, std::span<const Vertex> order);
// Like validate_sequence but throws InvariantError on a violation.
LegalSequence certify_sequence(const Graph& g, std::span<const Vertex> order);

struct GrundyResult {
  std::size_t value = 0;
  LegalSequence witness;
};

// Exact Grundy domination number by longest-path DP over dominated sets.
//
// Components are solved independently and the witness is merged so that at
// each step the smallest vertex id among all optimal continuations is taken.
// Throws CapacityError when g.order() > cap or a component exceeds 64
// vertices.
GrundyResult grundy_exact(const Graph& g, std::size_t cap = kDefaultExactCap);

// Value only; same limits as grundy_exact.
std::size_t grundy_number(const Graph& g, std::size_t cap = kDefaultExactCap);

// |V(T)| - |ES(T)| + 1 where ES(T) holds the vertices with a leaf neighbor
// that are adjacent to at most one non-leaf. Requires a tree on >= 2
// vertices. Not a valid lower bound on every tree (stars overshoot).
std::size_t end_support_lower_bound(const Graph& tree);

}  // namespace grundy
