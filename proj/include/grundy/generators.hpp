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
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "grundy/graph.hpp"

namespace grundy {

using Rng = std::mt19937_64;

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
// K_{1,leaves}; the center is vertex 0.
Graph star_graph(std::size_t leaves);
// Center 0 with one pendant path per entry of `legs` (lengths >= 1).
Graph spider_graph(std::span<const std::size_t> legs);

// Decodes a Prüfer sequence of length n-2 over 0..n-1 (n >= 2).
Graph tree_from_prufer(std::size_t n, std::span<const Vertex> sequence);

// Calls `visit` once per labeled tree on n vertices (n^(n-2) trees).
void for_each_labeled_tree(std::size_t n,
                           const std::function<void(const Graph&)>& visit);

// Uniform labeled tree via a uniform Prüfer sequence.
Graph random_tree(std::size_t n, Rng& rng);
// Random tree with each edge independently dropped with probability `drop`.
Graph random_forest(std::size_t n, double drop, Rng& rng);
// Erdős–Rényi G(n, p).
Graph random_graph(std::size_t n, double p, Rng& rng);
// Random spanning tree plus each remaining pair added with probability p.
Graph random_connected_graph(std::size_t n, double p, Rng& rng);

}  // namespace grundy
