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

#include <gtest/gtest.h>

#include "grundy/generators.hpp"
#include "grundy/labeling.hpp"
#include "grundy/report.hpp"
#include "grundy/theorems.hpp"

namespace grundy {
namespace {

TEST(Report, SequenceJson) {
  const auto r = grundy_exact(path_graph(4));
  const Json j = to_json(r.witness);
  EXPECT_EQ(j["length"], 3);
  EXPECT_EQ(j["sequence"], Json::parse("[0,1,2]"));
  EXPECT_EQ(j["footprints"].size(), 3u);
  EXPECT_EQ(j["footprints"][0], Json::parse("[0,1]"));
}

TEST(Report, KeyOrderIsStable) {
  const Json j = to_json(check_product_identity(path_graph(2), path_graph(3)));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  ASSERT_GE(keys.size(), 3u);
  EXPECT_EQ(keys[0], "gamma_G");
  EXPECT_EQ(keys[1], "gamma_H");
  EXPECT_EQ(keys[2], "gamma_product");
  EXPECT_EQ(j["ok"], true);
}

TEST(Report, LabelingTraceJson) {
  const Graph star = star_graph(3);
  const Json j = to_json(forest_labeling(star));
  EXPECT_EQ(j["length"], 3);
  EXPECT_EQ(j["fallback"], false);
  EXPECT_EQ(j["unlabeled"], Json::parse("[2]"));
  EXPECT_EQ(j["partition_size"], 1);
}

TEST(Report, PerturbationHistogramKeys) {
  const Json j = to_json(perturbation_audit(complete_graph(3)));
  EXPECT_EQ(j["vertex_histogram"], Json::parse(R"({"0": 3})"));
  EXPECT_EQ(j["violations"], 0);
}

TEST(Report, TextRendering) {
  const Json j = Json::parse(
      R"({"a": 1, "name": "x", "seq": [1, 2], "pairs": [[0, 1], [2, 3]],
          "nested": {"b": true, "list": [{"c": 2}]}})");
  EXPECT_EQ(to_text(j),
            "a = 1\n"
            "name = x\n"
            "seq: 1 2\n"
            "pairs: 0-1 2-3\n"
            "nested:\n"
            "  b = true\n"
            "  list:\n"
            "    [0]:\n"
            "      c = 2\n");
}

}  // namespace
}  // namespace grundy
