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

#include "grundy/caterpillar.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <tuple>

#include "grundy/errors.hpp"

namespace grundy {

namespace {

constexpr auto kNone = std::numeric_limits<std::size_t>::max();

// Unique tree path between two local vertices.
std::vector<Vertex> tree_path(const Graph& t, Vertex from, Vertex to) {
  std::vector<Vertex> parent(t.order(), static_cast<Vertex>(t.order()));
  std::vector<Vertex> stack{from};
  parent[from] = from;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex w : t.neighbors(x))
      if (parent[w] == t.order()) {
        parent[w] = x;
        stack.push_back(w);
      }
  }
  std::vector<Vertex> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::vector<Vertex> choose_spine(const Graph& f,
                                 std::span<const Vertex> vertices,
                                 const SpineRule& rule) {
  const auto sub = induced_subgraph(f, vertices);
  const Graph& t = sub.graph;
  if (t.order() < 2 || !is_caterpillar(t))
    throw ArgumentError("choose_spine: block does not induce a caterpillar "
                        "on at least two vertices");

  // Endpoint candidates grouped by the body end they hang from. Partners of
  // an endpoint are the candidates of the other group (or, for a star, every
  // other leaf).
  std::vector<Vertex> body;
  for (Vertex v = 0; v < t.order(); ++v)
    if (t.degree(v) >= 2) body.push_back(v);
  std::vector<Vertex> side_a, side_b;
  bool star = false;
  if (body.empty()) {
    side_a = {0};
    side_b = {1};
  } else if (body.size() == 1) {
    star = true;
    for (Vertex w : t.neighbors(body[0])) side_a.push_back(w);
  } else {
    std::vector<Vertex> ends;
    for (Vertex v : body) {
      std::size_t inner = 0;
      for (Vertex w : t.neighbors(v))
        if (t.degree(w) >= 2) ++inner;
      if (inner == 1) ends.push_back(v);
    }
    for (Vertex w : t.neighbors(ends[0]))
      if (t.is_leaf(w)) side_a.push_back(w);
    for (Vertex w : t.neighbors(ends[1]))
      if (t.is_leaf(w)) side_b.push_back(w);
  }

  auto global = [&](Vertex local) { return sub.new_to_old[local]; };
  auto key = [&](Vertex local) -> std::size_t {
    return rule.key.empty() ? global(local) : rule.key[global(local)];
  };
  auto left_less = [&](Vertex a, Vertex b) {
    return std::make_pair(key(a), global(a)) <
           std::make_pair(key(b), global(b));
  };
  auto right_better = [&](Vertex a, Vertex b) {
    if (rule.key.empty()) return global(a) < global(b);
    if (key(a) != key(b)) return key(a) > key(b);
    return global(a) < global(b);
  };

  std::vector<Vertex> all = side_a;
  all.insert(all.end(), side_b.begin(), side_b.end());
  const Vertex left = *std::min_element(all.begin(), all.end(), left_less);
  std::vector<Vertex> partners;
  if (star) {
    for (Vertex w : side_a)
      if (w != left) partners.push_back(w);
  } else {
    const bool in_a = std::find(side_a.begin(), side_a.end(), left) !=
                      side_a.end();
    partners = in_a ? side_b : side_a;
  }
  const Vertex right =
      *std::min_element(partners.begin(), partners.end(), right_better);

  auto path = rule.reversed ? tree_path(t, right, left) : tree_path(t, left, right);
  for (auto& v : path) v = global(v);
  return path;
}

std::vector<std::size_t> spine_positions(const Graph& f,
                                         std::span<const Vertex> vertices,
                                         std::span<const Vertex> spine) {
  const auto sub = induced_subgraph(f, vertices);
  const auto dist = bfs_distances(sub.graph, *sub.old_to_new.at(spine[0]));
  std::vector<bool> on_spine(sub.graph.order(), false);
  for (Vertex v : spine) on_spine[*sub.old_to_new.at(v)] = true;
  std::vector<std::size_t> positions(sub.graph.order());
  for (std::size_t i = 0; i < positions.size(); ++i)
    positions[i] = dist[i] + (on_spine[i] ? 1 : 0);
  return positions;
}

bool Block::on_spine(Vertex v) const {
  return std::find(spine.begin(), spine.end(), v) != spine.end();
}

bool Block::contains(Vertex v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

std::size_t Block::position(Vertex v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v)
    throw ArgumentError("vertex " + std::to_string(v) + " not in block");
  return positions[static_cast<std::size_t>(it - vertices.begin())];
}

std::optional<std::size_t> Block::rank(Vertex v) const {
  auto it = std::find(branch_vertices.begin(), branch_vertices.end(), v);
  if (it == branch_vertices.end()) return std::nullopt;
  return static_cast<std::size_t>(it - branch_vertices.begin()) + 1;
}

std::size_t Block::max_position() const {
  return positions.empty() ? 0
                           : *std::max_element(positions.begin(),
                                               positions.end());
}

std::optional<std::size_t> CaterpillarPartition::block_of(Vertex v) const {
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i].contains(v)) return i;
  return std::nullopt;
}

CaterpillarPartition make_partition(const Graph& f,
                                    std::vector<std::vector<Vertex>> blocks,
                                    const SpineRule& rule) {
  CaterpillarPartition p;
  p.graph_order = f.order();
  std::vector<std::size_t> owner(f.order(), kNone);
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (Vertex v : blocks[i]) {
      if (v >= f.order()) throw ArgumentError("block vertex out of range");
      if (owner[v] != kNone)
        throw ArgumentError("vertex " + std::to_string(v) +
                            " appears in two blocks");
      owner[v] = i;
    }
  for (Vertex v = 0; v < f.order(); ++v)
    if (f.degree(v) == 0) p.isolates.push_back(v);
  for (const Edge& e : f.edges())
    if (owner[e.u] != owner[e.v]) p.branch_edges.push_back(e);

  for (auto& members : blocks) {
    Block b;
    b.vertices = std::move(members);
    b.spine = choose_spine(f, b.vertices, rule);
    b.positions = spine_positions(f, b.vertices, b.spine);
    p.blocks.push_back(std::move(b));
  }
  for (const Edge& e : p.branch_edges)
    for (Vertex v : {e.u, e.v})
      if (owner[v] != kNone) {
        auto& bv = p.blocks[owner[v]].branch_vertices;
        if (std::find(bv.begin(), bv.end(), v) == bv.end()) bv.push_back(v);
      }
  for (auto& b : p.blocks)
    std::sort(b.branch_vertices.begin(), b.branch_vertices.end(),
              [&](Vertex x, Vertex y) {
                return std::make_tuple(b.position(x), b.on_spine(x), x) <
                       std::make_tuple(b.position(y), b.on_spine(y), y);
              });
  return p;
}

std::vector<std::string> partition_problems(const Graph& f,
                                            const CaterpillarPartition& p) {
  std::vector<std::string> problems;
  if (p.graph_order != f.order()) {
    problems.push_back("partition built for a graph of different order");
    return problems;
  }
  std::vector<std::size_t> owner(f.order(), kNone);
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    const auto& b = p.blocks[i];
    for (Vertex v : b.vertices) {
      if (v >= f.order()) {
        problems.push_back("block vertex out of range");
        return problems;
      }
      if (owner[v] != kNone)
        problems.push_back("vertex " + std::to_string(v) + " in two blocks");
      owner[v] = i;
    }
    const auto sub = induced_subgraph(f, b.vertices);
    if (b.vertices.size() < 2 || !is_caterpillar(sub.graph))
      problems.push_back("block " + std::to_string(i) +
                         " is not a caterpillar on >= 2 vertices");
  }
  for (Vertex v = 0; v < f.order(); ++v) {
    const bool isolate = f.degree(v) == 0;
    if (isolate && owner[v] != kNone)
      problems.push_back("isolate " + std::to_string(v) + " placed in a block");
    if (!isolate && owner[v] == kNone)
      problems.push_back("vertex " + std::to_string(v) + " not covered");
  }
  if (!problems.empty()) return problems;

  auto block_degree = [&](Vertex v) {
    std::size_t d = 0;
    for (Vertex w : f.neighbors(v))
      if (owner[w] == owner[v]) ++d;
    return d;
  };
  std::vector<Edge> expected;
  for (const Edge& e : f.edges()) {
    if (owner[e.u] == owner[e.v]) continue;
    expected.push_back(e);
    if (block_degree(e.u) < 2 && block_degree(e.v) < 2)
      problems.push_back("branch edge " + std::to_string(e.u) + "-" +
                         std::to_string(e.v) + " joins two leaves");
  }
  if (expected != p.branch_edges)
    problems.push_back("branch edge list does not match the blocks");
  return problems;
}

namespace {

// Iterative-deepening search for one tree component.
class TreePartitionSearch {
 public:
  TreePartitionSearch(const Graph& f, std::vector<Vertex> comp)
      : f_(f), comp_(std::move(comp)) {
    for (Vertex v : comp_)
      for (Vertex w : f_.neighbors(v))
        if (v < w) edges_.emplace_back(v, w);
    std::sort(edges_.begin(), edges_.end());
    cut_.assign(edges_.size(), false);
    block_.assign(f_.order(), kNone);
    block_degree_.assign(f_.order(), 0);
  }

  // Blocks of a minimum partition of this component.
  std::vector<std::vector<Vertex>> run() {
    for (std::size_t budget = 0; budget <= edges_.size(); ++budget) {
      visited_.clear();
      if (dfs(budget)) return blocks();
    }
    throw InvariantError("no caterpillar partition found for a tree");
  }

  std::size_t nodes() const noexcept { return nodes_; }

 private:
  enum class Status { kDead, kFeasible, kOpen };

  std::size_t edge_index(Vertex a, Vertex b) const {
    return static_cast<std::size_t>(
        std::lower_bound(edges_.begin(), edges_.end(), Edge(a, b)) -
        edges_.begin());
  }
  bool is_cut(Vertex a, Vertex b) const { return cut_[edge_index(a, b)]; }

  // Recomputes blocks for the current cut set and classifies the state.
  // On kOpen fills `claw_` with the candidate edges to branch on and
  // `open_blocks_` with the number of non-caterpillar blocks.
  Status evaluate() {
    for (Vertex v : comp_) {
      block_[v] = kNone;
      block_degree_[v] = 0;
      for (Vertex w : f_.neighbors(v))
        if (!is_cut(v, w)) ++block_degree_[v];
      if (block_degree_[v] == 0) return Status::kDead;  // singleton block
    }
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (cut_[i] && block_degree_[edges_[i].u] < 2 &&
          block_degree_[edges_[i].v] < 2)
        return Status::kDead;  // branch edge between two leaves
    std::size_t next = 0;
    for (Vertex s : comp_) {
      if (block_[s] != kNone) continue;
      std::vector<Vertex> stack{s};
      block_[s] = next;
      while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex w : f_.neighbors(x))
          if (block_[w] == kNone && !is_cut(x, w)) {
            block_[w] = next;
            stack.push_back(w);
          }
      }
      ++next;
    }
    block_count_ = next;

    // A block is a caterpillar iff no vertex has three non-leaf neighbors in
    // it; such a vertex is the center of a subdivided claw.
    std::set<std::size_t> open;
    claw_.clear();
    for (Vertex c : comp_) {
      std::vector<Vertex> inner;
      for (Vertex w : f_.neighbors(c))
        if (!is_cut(c, w) && block_degree_[w] >= 2) inner.push_back(w);
      if (inner.size() < 3) continue;
      open.insert(block_[c]);
      if (!claw_.empty()) continue;
      // A leg ending in a leaf contributes only its inner edge: cutting the
      // outer one would isolate the leaf.
      for (std::size_t k = 0; k < 3; ++k) {
        const Vertex w = inner[k];
        claw_.push_back(edge_index(c, w));
        std::optional<Vertex> outer;
        for (Vertex x : f_.neighbors(w)) {
          if (x == c || is_cut(w, x)) continue;
          if (block_degree_[x] < 2) {
            outer.reset();
            break;
          }
          if (!outer) outer = x;
        }
        if (outer) claw_.push_back(edge_index(w, *outer));
      }
      std::sort(claw_.begin(), claw_.end());
    }
    open_blocks_ = open.size();
    return open.empty() ? Status::kFeasible : Status::kOpen;
  }

  bool dfs(std::size_t remaining) {
    ++nodes_;
    const Status s = evaluate();
    if (s == Status::kFeasible) return true;
    if (s == Status::kDead || open_blocks_ > remaining) return false;
    const auto candidates = claw_;
    for (std::size_t e : candidates) {
      if (cut_[e]) continue;
      cut_[e] = true;
      if (visited_.insert(cut_).second && dfs(remaining - 1)) return true;
      cut_[e] = false;
    }
    return false;
  }

  std::vector<std::vector<Vertex>> blocks() {
    evaluate();
    std::vector<std::vector<Vertex>> out(block_count_);
    for (Vertex v : comp_) out[block_[v]].push_back(v);
    return out;
  }

  const Graph& f_;
  std::vector<Vertex> comp_;
  std::vector<Edge> edges_;
  std::vector<bool> cut_;
  std::vector<std::size_t> block_;
  std::vector<std::size_t> block_degree_;
  std::vector<std::size_t> claw_;
  std::size_t block_count_ = 0;
  std::size_t open_blocks_ = 0;
  std::size_t nodes_ = 0;
  std::set<std::vector<bool>> visited_;
};

}  // namespace

CaterpillarPartition minimum_caterpillar_partition(const Graph& f) {
  if (!is_forest(f))
    throw ArgumentError("minimum_caterpillar_partition requires a forest");
  std::vector<std::vector<Vertex>> blocks;
  std::size_t nodes = 0;
  for (auto& comp : components(f)) {
    if (comp.size() < 2) continue;
    TreePartitionSearch search(f, std::move(comp));
    for (auto& b : search.run()) blocks.push_back(std::move(b));
    nodes += search.nodes();
  }
  auto p = make_partition(f, std::move(blocks));
  p.certified_minimum = true;
  p.search_nodes = nodes;
  return p;
}

std::size_t min_partition_size(const Graph& f) {
  return minimum_caterpillar_partition(f).size();
}

CanopyGraph canopy_graph(const Graph& f, const CaterpillarPartition& p) {
  if (auto problems = partition_problems(f, p); !problems.empty())
    throw InvariantError("invalid caterpillar partition: " + problems.front());
  std::vector<std::size_t> owner(f.order(), kNone);
  for (std::size_t i = 0; i < p.blocks.size(); ++i)
    for (Vertex v : p.blocks[i].vertices) owner[v] = i;
  std::map<Edge, std::vector<Edge>> joins;
  for (const Edge& e : p.branch_edges)
    joins[Edge(static_cast<Vertex>(owner[e.u]), static_cast<Vertex>(owner[e.v]))]
        .push_back(e);
  CanopyGraph out;
  std::vector<Edge> edges;
  for (auto& [canopy_edge, realising] : joins) {
    if (realising.size() > 1)
      throw InvariantError("two branch edges join the same pair of blocks");
    edges.push_back(canopy_edge);
    out.realising_edges.push_back(realising);
  }
  out.graph = Graph(p.blocks.size(), edges);
  if (!is_forest(out.graph))
    throw InvariantError("canopy graph contains a cycle");
  return out;
}

bool is_caterpillar_critical(const Graph& f) {
  if (!is_forest(f))
    throw ArgumentError("is_caterpillar_critical requires a forest");
  const std::size_t base = min_partition_size(f);
  for (const Edge& e : f.edges()) {
    if (!f.is_leaf(e.u) && !f.is_leaf(e.v)) continue;
    if (min_partition_size(delete_edge(f, e.u, e.v)) >= base) return false;
  }
  return true;
}

std::vector<LeafCaterpillar> classify_leaf_caterpillars(
    [[maybe_unused]] const Graph& f, const CaterpillarPartition& p) {
  std::vector<LeafCaterpillar> out;
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    const Block& b = p.blocks[i];
    if (b.branch_vertices.size() != 1) continue;
    LeafCaterpillar lc{i, b.branch_vertices.front(),
                       LeafCaterpillarClass::kOther};
    if (b.vertices.size() == 2) {
      lc.kind = LeafCaterpillarClass::kP2;
    } else if (b.vertices.size() == 5 && b.spine.size() == 5 &&
               lc.branch_vertex == b.spine[2]) {
      lc.kind = LeafCaterpillarClass::kP5Center;
    }
    out.push_back(lc);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> adjacent_rank_one_pairs(
    [[maybe_unused]] const Graph& f, const CaterpillarPartition& p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const Edge& e : p.branch_edges) {
    auto bu = p.block_of(e.u);
    auto bv = p.block_of(e.v);
    if (!bu || !bv) continue;
    if (p.blocks[*bu].rank(e.u) == 1 && p.blocks[*bv].rank(e.v) == 1)
      out.emplace_back(std::min(*bu, *bv), std::max(*bu, *bv));
  }
  return out;
}

std::string to_string(LeafCaterpillarClass c) {
  switch (c) {
    case LeafCaterpillarClass::kP2:
      return "P2";
    case LeafCaterpillarClass::kP5Center:
      return "P5-center";
    case LeafCaterpillarClass::kOther:
      break;
  }
  return "other";
}

}  // namespace grundy
