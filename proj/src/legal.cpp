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

#include "grundy/legal.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>

#include "grundy/errors.hpp"

namespace grundy {

VertexSet LegalSequence::vertex_set() const {
  VertexSet s(graph_order);
  for (Vertex v : order) s.insert(v);
  return s;
}

VertexSet LegalSequence::dominated() const {
  return dominated_after.empty() ? VertexSet(graph_order)
                                 : dominated_after.back();
}

std::optional<std::size_t> LegalSequence::footprinter_step(Vertex v) const {
  for (std::size_t i = 0; i < footprints.size(); ++i)
    if (footprints[i].contains(v)) return i;
  return std::nullopt;
}

SequenceCheck validate_sequence(const Graph& g, std::span<const Vertex> order) {
  for (Vertex v : order)
    if (v >= g.order())
      throw ArgumentError("sequence vertex " + std::to_string(v) +
                          " out of range");
  LegalSequence seq;
  seq.graph_order = g.order();
  VertexSet dominated(g.order());
  for (std::size_t i = 0; i < order.size(); ++i) {
    VertexSet fp = g.closed_neighborhood(order[i]) - dominated;
    if (fp.empty()) return SequenceViolation{i, order[i]};
    dominated |= fp;
    seq.order.push_back(order[i]);
    seq.footprints.push_back(std::move(fp));
    seq.dominated_after.push_back(dominated);
  }
  return seq;
}

bool is_legal(const Graph& g, std::span<const Vertex> order) {
  return std::holds_alternative<LegalSequence>(validate_sequence(g, order));
}

LegalSequence certify_sequence(const Graph& g, std::span<const Vertex> order) {
  auto check = validate_sequence(g, order);
  if (auto* bad = std::get_if<SequenceViolation>(&check))
    throw InvariantError("sequence illegal at index " +
                         std::to_string(bad->index) + " (vertex " +
                         std::to_string(bad->vertex) + ")");
  return std::get<LegalSequence>(std::move(check));
}

namespace {

constexpr std::uint8_t kUnknown = 0xFF;
constexpr std::size_t kDenseLimit = 26;

// Longest legal sequence from a dominated-set state, for one component
// relabeled to local ids 0..k-1.
class ComponentSolver {
 public:
  explicit ComponentSolver(std::vector<std::uint64_t> masks)
      : masks_(std::move(masks)),
        full_(masks_.size() == 64 ? ~std::uint64_t{0}
                                  : (std::uint64_t{1} << masks_.size()) - 1) {
    if (masks_.size() <= kDenseLimit)
      dense_.assign(std::size_t{1} << masks_.size(), kUnknown);
  }

  std::size_t value(std::uint64_t dominated) { return solve(dominated); }

  // Smallest local vertex continuing an optimal sequence, if any.
  std::optional<std::size_t> best_move(std::uint64_t dominated) {
    const std::size_t target = solve(dominated);
    if (target == 0) return std::nullopt;
    for (std::size_t v = 0; v < masks_.size(); ++v)
      if ((masks_[v] & ~dominated) != 0 &&
          1 + solve(dominated | masks_[v]) == target)
        return v;
    throw InvariantError("exact solver lost its optimal continuation");
  }

  std::uint64_t mask(std::size_t v) const { return masks_[v]; }

 private:
  std::uint8_t& slot(std::uint64_t d) {
    if (!dense_.empty()) return dense_[d];
    auto [it, inserted] = sparse_.try_emplace(d, kUnknown);
    return it->second;
  }

  std::size_t solve(std::uint64_t dominated) {
    if (dominated == full_) return 0;
    if (auto cached = slot(dominated); cached != kUnknown) return cached;
    // Every step dominates something new, so the undominated count bounds
    // the remaining length.
    const auto ceiling =
        static_cast<std::size_t>(std::popcount(full_ & ~dominated));
    std::size_t best = 0;
    for (std::size_t v = 0; v < masks_.size() && best < ceiling; ++v) {
      if ((masks_[v] & ~dominated) == 0) continue;
      best = std::max(best, 1 + solve(dominated | masks_[v]));
    }
    slot(dominated) = static_cast<std::uint8_t>(best);
    return best;
  }

  std::vector<std::uint64_t> masks_;
  std::uint64_t full_;
  std::vector<std::uint8_t> dense_;
  std::unordered_map<std::uint64_t, std::uint8_t> sparse_;
};

struct ComponentState {
  std::vector<Vertex> vertices;  // ascending global ids
  ComponentSolver solver;
  std::uint64_t dominated = 0;
};

std::vector<ComponentState> build_components(const Graph& g, std::size_t cap) {
  if (g.order() > cap)
    throw CapacityError("graph of order " + std::to_string(g.order()) +
                        " exceeds exact cap " + std::to_string(cap) +
                        "; use the forest pipeline for forests");
  std::vector<ComponentState> out;
  for (auto& comp : components(g)) {
    if (comp.size() > 64)
      throw CapacityError("component of order " + std::to_string(comp.size()) +
                          " exceeds the 64-vertex exact solver limit");
    std::vector<std::size_t> local(g.order(), 0);
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = i;
    std::vector<std::uint64_t> masks(comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i) {
      masks[i] = std::uint64_t{1} << i;
      for (Vertex w : g.neighbors(comp[i]))
        masks[i] |= std::uint64_t{1} << local[w];
    }
    out.push_back({std::move(comp), ComponentSolver(std::move(masks)), 0});
  }
  return out;
}

}  // namespace

GrundyResult grundy_exact(const Graph& g, std::size_t cap) {
  auto comps = build_components(g, cap);
  std::vector<Vertex> order;
  while (true) {
    std::optional<std::pair<Vertex, std::size_t>> pick;  // (global id, comp)
    for (std::size_t c = 0; c < comps.size(); ++c) {
      auto move = comps[c].solver.best_move(comps[c].dominated);
      if (!move) continue;
      Vertex global = comps[c].vertices[*move];
      if (!pick || global < pick->first) pick = {global, c};
    }
    if (!pick) break;
    auto& comp = comps[pick->second];
    auto local = static_cast<std::size_t>(
        std::lower_bound(comp.vertices.begin(), comp.vertices.end(),
                         pick->first) -
        comp.vertices.begin());
    comp.dominated |= comp.solver.mask(local);
    order.push_back(pick->first);
  }
  GrundyResult result;
  result.value = order.size();
  result.witness = certify_sequence(g, order);
  return result;
}

std::size_t grundy_number(const Graph& g, std::size_t cap) {
  std::size_t total = 0;
  for (auto& comp : build_components(g, cap)) total += comp.solver.value(0);
  return total;
}

std::size_t end_support_lower_bound(const Graph& tree) {
  if (tree.order() < 2 || !is_tree(tree))
    throw ArgumentError("end_support_lower_bound requires a tree on >= 2 "
                        "vertices");
  std::size_t end_supports = 0;
  for (Vertex v = 0; v < tree.order(); ++v) {
    bool has_leaf = false;
    std::size_t inner = 0;
    for (Vertex w : tree.neighbors(v)) {
      if (tree.is_leaf(w))
        has_leaf = true;
      else
        ++inner;
    }
    if (has_leaf && inner <= 1) ++end_supports;
  }
  return tree.order() - end_supports + 1;
}

}  // namespace grundy
