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
#include <string>
#include <vector>

#include "grundy/caterpillar.hpp"
#include "grundy/graph.hpp"
#include "grundy/legal.hpp"

namespace grundy {

// A labeled rank-1 branch vertex from the pairing step, with the targets it
// is expected to footprint: itself when it is a leaf of its caterpillar,
// otherwise a block neighbor one position further along the spine.
struct BranchLabel {
  Vertex vertex = 0;
  std::size_t block = 0;
  std::size_t iteration = 0;
  bool leaf = false;
  std::vector<Vertex> expected_targets;
  bool footprint_ok = false;  // filled in after certification
};

struct LabelingIteration {
  std::size_t j = 0;
  std::vector<Vertex> labeled;               // in label order
  std::vector<std::size_t> removed_blocks;   // finished blocks
  std::vector<Vertex> removed_vertices;      // everything dropped at the end
  // Some non-caterpillar component remained at the start of the iteration.
  bool had_noncaterpillar_component = false;
  // Two blocks had adjacent rank-1 branch vertices at the start.
  bool rank_one_pair_present = false;
};

struct LabelingTrace {
  std::size_t graph_order = 0;
  std::size_t partition_size = 0;
  // Vertices in label order; label(v) = index + 1.
  std::vector<Vertex> sequence;
  std::vector<LabelingIteration> iterations;
  // Per block, the one vertex left out of the sequence.
  std::vector<std::optional<Vertex>> unlabeled;
  std::vector<BranchLabel> branch_labels;
  // Blocks whose spine orientation was flipped after a failed certification.
  std::vector<std::size_t> reversed_blocks;
  // An exact-solver witness had to replace part of the labeling.
  bool fallback = false;
  std::vector<std::string> notes;

  // 0 for unlabeled vertices.
  std::size_t label(Vertex v) const;
  std::size_t length() const noexcept { return sequence.size(); }
};

// Caterpillar Labeling on a whole caterpillar (>= 2 vertices): leaves of
// v_2, then v_2, leaves of v_3, then v_3, ..., ending with v_{k-1}; only v_k
// stays unlabeled. Throws ArgumentError for non-caterpillars.
LabelingTrace caterpillar_labeling(const Graph& c);

// The Caterpillar Labeling order for the caterpillar induced by `block` in
// f, using the given spine v_1..v_k.
std::vector<Vertex> caterpillar_order(const Graph& f,
                                      std::span<const Vertex> block,
                                      std::span<const Vertex> spine);

struct ForestLabelingOptions {
  // Cap for the exact solver used by the certified fallback.
  std::size_t fallback_cap = kDefaultExactCap;
};

// Forest Labeling over a minimum caterpillar partition. The result is
// certified: the sequence is legal and has |V(F)| - |P| entries. If a run
// fails certification, offending blocks are re-run with reversed spines,
// and as a last resort the exact witness replaces the offending component
// (trace.fallback is set). Throws ArgumentError for non-forests.
LabelingTrace forest_labeling(const Graph& f,
                              const ForestLabelingOptions& options = {});
// Same, over a caller-supplied partition (assumed minimum).
LabelingTrace forest_labeling(const Graph& f, const CaterpillarPartition& p,
                              const ForestLabelingOptions& options = {});

// γ_gr(F) = |V(F)| - |P| with the labeling as witness.
GrundyResult grundy_forest(const Graph& f,
                           const ForestLabelingOptions& options = {});

}  // namespace grundy
