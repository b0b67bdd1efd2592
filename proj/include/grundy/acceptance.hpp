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
#include <string>
#include <vector>

#include "grundy/graph.hpp"
#include "grundy/legal.hpp"
#include "grundy/report.hpp"

namespace grundy {

// A forest drawn with an explicit block partition and the label counts the
// Forest Labeling must produce for it.
struct LabeledFixture {
  std::string name;
  Graph graph;
  std::vector<std::vector<Vertex>> blocks;
  std::size_t expected_labels = 0;
  std::size_t expected_iterations = 0;
  // First-iteration labels, in order.
  std::vector<Vertex> expected_first_iteration;
};

// 47 vertices in seven path blocks, labeled over three iterations.
LabeledFixture path_blocks_fixture();
// 19 vertices in three caterpillars with leaf branch vertices.
LabeledFixture mixed_blocks_fixture();

struct AcceptanceOptions {
  std::uint64_t seed = 42;
  std::size_t cap = kDefaultExactCap;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::size_t instances = 0;
  Json details;
};

inline constexpr int kCriterionCount = 9;  // determinism is checked outside

// Runs one criterion (1..kCriterionCount).
CriterionResult run_criterion(int id, const AcceptanceOptions& options);
// Runs every criterion; criteria 1 and 2 share one corpus pass.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

Json to_json(const CriterionResult& r);
Json acceptance_report(const std::vector<CriterionResult>& results,
                       const AcceptanceOptions& options);

}  // namespace grundy
