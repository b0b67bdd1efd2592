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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "grundy/graph.hpp"

namespace grundy {

// Edge-list text: first data line "n m", then m lines "u v" with 0-based ids.
// Everything after '#' on a line is a comment; blank lines are ignored.
// Throws ParseError carrying the offending line number.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
void write_edge_list(std::ostream& out, const Graph& g);
std::string format_edge_list(const Graph& g);

// Standard graph6 encoding (optional ">>graph6<<" header, no trailing data).
Graph parse_graph6(std::string_view text);
std::string format_graph6(const Graph& g);

// Reads one graph from a file: graph6 for ".g6" files, edge list otherwise.
Graph load_graph(const std::filesystem::path& path);

}  // namespace grundy
