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

#include <string>

#include "json.hpp"

#include "grundy/caterpillar.hpp"
#include "grundy/labeling.hpp"
#include "grundy/legal.hpp"
#include "grundy/theorems.hpp"

namespace grundy {

using Json = nlohmann::ordered_json;

Json to_json(const VertexSet& s);
Json to_json(const Edge& e);
Json to_json(const LegalSequence& s);
Json to_json(const CaterpillarPartition& p, const Graph& f);
Json to_json(const LabelingTrace& t);
Json to_json(const ProductCheckReport& r);
Json to_json(const PeelBound& b);
Json to_json(const SpanningTreeResult& r);
Json to_json(const TotalDominationResult& r);
Json to_json(const PerturbationReport& r);

// Indented "key = value" rendering of a report.
std::string to_text(const Json& report);

}  // namespace grundy
