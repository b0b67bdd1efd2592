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

#include "grundy/labeling.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <tuple>

#include "grundy/errors.hpp"

namespace grundy {

std::size_t LabelingTrace::label(Vertex v) const {
  auto it = std::find(sequence.begin(), sequence.end(), v);
  return it == sequence.end()
             ? 0
             : static_cast<std::size_t>(it - sequence.begin()) + 1;
}

std::vector<Vertex> caterpillar_order(const Graph& f,
                                      std::span<const Vertex> block,
                                      std::span<const Vertex> spine) {
  if (spine.size() < 2) throw ArgumentError("spine needs two vertices");
  const auto sub = induced_subgraph(f, block);
  auto local = [&](Vertex v) { return *sub.old_to_new.at(v); };
  const Vertex first = spine.front();
  const Vertex last = spine.back();
  if (spine.size() == 2) return {first};

  std::vector<Vertex> order;
  for (std::size_t i = 1; i + 1 < spine.size(); ++i) {
    std::vector<Vertex> leaves;
    for (Vertex w : sub.graph.neighbors(local(spine[i]))) {
      const Vertex g = sub.new_to_old[w];
      if (sub.graph.is_leaf(w) && g != first && g != last) leaves.push_back(g);
    }
    std::sort(leaves.begin(), leaves.end());
    if (i == 1) order.push_back(first);
    order.insert(order.end(), leaves.begin(), leaves.end());
    order.push_back(spine[i]);
  }
  return order;
}

LabelingTrace caterpillar_labeling(const Graph& c) {
  if (c.order() < 2 || !is_caterpillar(c))
    throw ArgumentError("caterpillar_labeling requires a caterpillar on >= 2 "
                        "vertices");
  std::vector<Vertex> all(c.order());
  for (Vertex v = 0; v < c.order(); ++v) all[v] = v;
  const auto spine = choose_spine(c, all);
  LabelingTrace trace;
  trace.graph_order = c.order();
  trace.partition_size = 1;
  trace.sequence = caterpillar_order(c, all, spine);
  LabelingIteration it;
  it.j = 1;
  it.labeled = trace.sequence;
  it.removed_blocks = {0};
  it.removed_vertices = all;
  trace.iterations.push_back(std::move(it));
  trace.unlabeled = {spine.back()};
  certify_sequence(c, trace.sequence);
  return trace;
}

namespace {

constexpr auto kNone = std::numeric_limits<std::size_t>::max();

struct RunOutcome {
  LabelingTrace trace;
  std::optional<std::size_t> failed_block;
  std::string failure;
};

// One pass of the Forest Labeling for fixed spine orientations.
class ForestLabeler {
 public:
  ForestLabeler(const Graph& f, const CaterpillarPartition& p,
                const std::vector<bool>& reversed)
      : f_(f), p_(p), owner_(f.order(), kNone), key_(f.order(), 0) {
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
      const Block& b = p.blocks[i];
      for (Vertex v : b.vertices) owner_[v] = i;
      std::vector<Vertex> spine = b.spine;
      if (reversed[i]) std::reverse(spine.begin(), spine.end());
      const auto pos = spine_positions(f, b.vertices, spine);
      for (std::size_t k = 0; k < b.vertices.size(); ++k)
        key_[b.vertices[k]] = pos[k];
    }
  }

  RunOutcome run() {
    RunOutcome out;
    LabelingTrace& trace = out.trace;
    trace.graph_order = f_.order();
    trace.partition_size = p_.size();
    trace.unlabeled.assign(p_.size(), std::nullopt);

    std::vector<bool> alive(f_.order(), false);
    std::vector<bool> labeled(f_.order(), false);
    std::vector<bool> dominated(f_.order(), false);
    for (const auto& b : p_.blocks)
      for (Vertex v : b.vertices) alive[v] = true;
    std::vector<bool> active(p_.size(), true);

    auto fail = [&](std::size_t block, std::string why) {
      out.failed_block = block;
      out.failure = std::move(why);
      return std::move(out);
    };

    for (std::size_t j = 1;; ++j) {
      std::vector<std::size_t> live;
      for (std::size_t i = 0; i < p_.size(); ++i)
        if (active[i]) live.push_back(i);
      if (live.empty()) break;

      LabelingIteration it;
      it.j = j;
      auto give_label = [&](Vertex v) {
        labeled[v] = true;
        dominated[v] = true;
        for (Vertex w : f_.neighbors(v)) dominated[w] = true;
        trace.sequence.push_back(v);
        it.labeled.push_back(v);
      };

      // Current caterpillars with spines oriented by the original positions.
      std::map<std::size_t, Current> cur;
      for (std::size_t i : live) {
        Current c;
        for (Vertex v : p_.blocks[i].vertices)
          if (alive[v]) c.vertices.push_back(v);
        try {
          c.spine = choose_spine(f_, c.vertices, SpineRule{key_});
        } catch (const ArgumentError&) {
          return fail(i, "remaining block is not a caterpillar");
        }
        c.positions = spine_positions(f_, c.vertices, c.spine);
        cur.emplace(i, std::move(c));
      }
      for (const Edge& e : f_.edges()) {
        if (!alive[e.u] || !alive[e.v] || owner_[e.u] == owner_[e.v]) continue;
        for (Vertex v : {e.u, e.v}) {
          auto& bv = cur.at(owner_[v]).branch;
          if (std::find(bv.begin(), bv.end(), v) == bv.end()) bv.push_back(v);
        }
      }
      for (auto& [i, c] : cur)
        std::sort(c.branch.begin(), c.branch.end(), [&](Vertex x, Vertex y) {
          return std::make_tuple(c.position(x), c.on_spine(x), x) <
                 std::make_tuple(c.position(y), c.on_spine(y), y);
        });
      auto rank_one = [&](Vertex v) {
        const auto& bv = cur.at(owner_[v]).branch;
        return !bv.empty() && bv.front() == v;
      };
      record_start(alive, cur, rank_one, it);

      // Step 2: label up to the position of the rank-1 branch vertex.
      std::set<std::size_t> fully_labeled;
      for (std::size_t i : live) {
        const Current& c = cur.at(i);
        const auto order = caterpillar_order(f_, c.vertices, c.spine);
        if (c.branch.empty()) {
          for (Vertex v : order) give_label(v);
          fully_labeled.insert(i);
          continue;
        }
        const std::size_t limit = c.position(c.branch.front());
        for (Vertex v : order) {
          const std::size_t pos = c.position(v);
          const bool on_spine =
              std::find(c.spine.begin(), c.spine.end(), v) != c.spine.end();
          const bool branch =
              std::find(c.branch.begin(), c.branch.end(), v) != c.branch.end();
          if (pos < limit || (pos == limit && !on_spine && !branch))
            give_label(v);
        }
      }

      // Step 3: adjacent rank-1 branch vertices, leaves before non-leaves.
      std::vector<Vertex> chosen;
      for (std::size_t i : live) {
        const Current& c = cur.at(i);
        if (c.branch.empty()) continue;
        const Vertex r = c.branch.front();
        if (c.position(r) == c.max_position()) continue;
        bool paired = false;
        for (Vertex w : f_.neighbors(r))
          if (alive[w] && owner_[w] != i && rank_one(w)) paired = true;
        if (paired) chosen.push_back(r);
      }
      std::sort(chosen.begin(), chosen.end());
      for (const auto& group : adjacency_groups(chosen)) {
        std::vector<Vertex> leaves, inner;
        for (Vertex v : group)
          (cur.at(owner_[v]).block_degree(f_, v, alive) == 1 ? leaves : inner)
              .push_back(v);
        // A leaf whose block neighbour is already dominated can only
        // footprint itself, so it goes before the other leaves.
        auto has_target = [&](Vertex v) {
          for (Vertex w : f_.neighbors(v))
            if (alive[w] && owner_[w] == owner_[v] && !dominated[w])
              return true;
          return false;
        };
        std::stable_sort(leaves.begin(), leaves.end(), [&](Vertex x, Vertex y) {
          return !has_target(x) && has_target(y);
        });
        for (auto* part : {&leaves, &inner})
          for (Vertex v : *part) {
            const std::size_t i = owner_[v];
            const Current& c = cur.at(i);
            BranchLabel bl{v, i, j, part == &leaves, {}, false};
            if (bl.leaf) bl.expected_targets.push_back(v);
            for (Vertex w : f_.neighbors(v))
              if (alive[w] && owner_[w] == i &&
                  c.position(w) == c.position(v) + 1)
                bl.expected_targets.push_back(w);
            trace.branch_labels.push_back(std::move(bl));
            give_label(v);
          }
      }

      // Step 4: caterpillars without unlabeled branch vertices.
      for (std::size_t i : live) {
        if (fully_labeled.count(i)) continue;
        const Current& c = cur.at(i);
        if (std::any_of(c.branch.begin(), c.branch.end(),
                        [&](Vertex v) { return !labeled[v]; }))
          continue;
        std::vector<Vertex> rest;
        for (Vertex v : c.vertices)
          if (!labeled[v]) rest.push_back(v);
        if (rest.size() < 2) continue;
        std::vector<Vertex> spine;
        try {
          spine = choose_spine(f_, rest, SpineRule{key_});
        } catch (const ArgumentError&) {
          return fail(i, "unlabeled remainder is not a caterpillar");
        }
        for (Vertex v : caterpillar_order(f_, rest, spine)) give_label(v);
      }

      // Step 5: drop finished caterpillars and every labeled vertex.
      for (std::size_t i : live) {
        std::vector<Vertex> rest;
        for (Vertex v : cur.at(i).vertices)
          if (!labeled[v]) rest.push_back(v);
        if (rest.empty()) return fail(i, "every vertex of a block was labeled");
        if (rest.size() == 1) {
          active[i] = false;
          trace.unlabeled[i] = rest.front();
          alive[rest.front()] = false;
          it.removed_blocks.push_back(i);
          it.removed_vertices.push_back(rest.front());
        }
      }
      for (Vertex v : it.labeled) {
        alive[v] = false;
        it.removed_vertices.push_back(v);
      }
      std::sort(it.removed_vertices.begin(), it.removed_vertices.end());
      if (it.labeled.empty() && it.removed_blocks.empty())
        return fail(live.front(), "iteration made no progress");
      trace.iterations.push_back(std::move(it));
    }

    // Step 7: isolates last, ascending.
    for (Vertex v : p_.isolates) trace.sequence.push_back(v);
    return out;
  }

 private:
  struct Current {
    std::vector<Vertex> vertices;  // ascending
    std::vector<Vertex> spine;
    std::vector<std::size_t> positions;
    std::vector<Vertex> branch;  // by rank

    std::size_t position(Vertex v) const {
      auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
      return positions[static_cast<std::size_t>(it - vertices.begin())];
    }
    bool on_spine(Vertex v) const {
      return std::find(spine.begin(), spine.end(), v) != spine.end();
    }
    std::size_t max_position() const {
      return *std::max_element(positions.begin(), positions.end());
    }
    std::size_t block_degree(const Graph& f, Vertex v,
                             const std::vector<bool>& alive) const {
      std::size_t d = 0;
      for (Vertex w : f.neighbors(v))
        if (alive[w] &&
            std::binary_search(vertices.begin(), vertices.end(), w))
          ++d;
      return d;
    }
  };

  template <typename RankOne>
  void record_start(const std::vector<bool>& alive,
                    const std::map<std::size_t, Current>& cur,
                    const RankOne& rank_one, LabelingIteration& it) const {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < f_.order(); ++v)
      if (alive[v]) keep.push_back(v);
    const auto sub = induced_subgraph(f_, keep);
    for (const auto& comp : components(sub.graph)) {
      if (comp.size() < 2) continue;
      const auto part = induced_subgraph(sub.graph, comp);
      if (!is_caterpillar(part.graph)) it.had_noncaterpillar_component = true;
    }
    for (const auto& [i, c] : cur)
      for (Vertex r : c.branch)
        for (Vertex w : f_.neighbors(r))
          if (alive[w] && owner_[w] != i && rank_one(r) && rank_one(w))
            it.rank_one_pair_present = true;
  }

  // Connected groups of `vs` under adjacency in f, ordered by smallest
  // member; each group ascending.
  std::vector<std::vector<Vertex>> adjacency_groups(
      const std::vector<Vertex>& vs) const {
    std::vector<std::vector<Vertex>> groups;
    std::set<Vertex> pending(vs.begin(), vs.end());
    while (!pending.empty()) {
      std::vector<Vertex> group{*pending.begin()};
      pending.erase(pending.begin());
      for (std::size_t k = 0; k < group.size(); ++k)
        for (Vertex w : f_.neighbors(group[k]))
          if (pending.erase(w)) group.push_back(w);
      std::sort(group.begin(), group.end());
      groups.push_back(std::move(group));
    }
    return groups;
  }

  const Graph& f_;
  const CaterpillarPartition& p_;
  std::vector<std::size_t> owner_;
  std::vector<std::size_t> key_;
};

// Block responsible for the first certification problem, if any.
std::optional<std::size_t> offending_block(const Graph& f,
                                           const CaterpillarPartition& p,
                                           const std::vector<Vertex>& seq,
                                           const std::set<std::size_t>& skip) {
  auto check = validate_sequence(f, seq);
  if (auto* bad = std::get_if<SequenceViolation>(&check)) {
    if (auto b = p.block_of(bad->vertex)) return b;
    return 0;
  }
  std::vector<bool> in_seq(f.order(), false);
  for (Vertex v : seq) in_seq[v] = true;
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    if (skip.count(i)) continue;
    std::size_t missing = 0;
    for (Vertex v : p.blocks[i].vertices)
      if (!in_seq[v]) ++missing;
    if (missing != 1) return i;
  }
  return std::nullopt;
}

}  // namespace

LabelingTrace forest_labeling(const Graph& f, const CaterpillarPartition& p,
                              const ForestLabelingOptions& options) {
  if (!is_forest(f)) throw ArgumentError("forest_labeling requires a forest");
  if (auto problems = partition_problems(f, p); !problems.empty())
    throw ArgumentError("invalid caterpillar partition: " + problems.front());

  const std::size_t target = f.order() - p.size();
  std::vector<bool> reversed(p.size(), false);
  RunOutcome outcome;
  std::optional<std::size_t> bad;
  std::vector<std::string> notes;
  while (true) {
    outcome = ForestLabeler(f, p, reversed).run();
    bad = outcome.failed_block;
    if (!bad) bad = offending_block(f, p, outcome.trace.sequence, {});
    if (!bad) break;
    if (reversed[*bad]) break;
    reversed[*bad] = true;
    notes.push_back("block " + std::to_string(*bad) +
                    " re-run with reversed spine");
  }
  LabelingTrace trace = std::move(outcome.trace);
  trace.notes = std::move(notes);
  for (std::size_t i = 0; i < reversed.size(); ++i)
    if (reversed[i]) trace.reversed_blocks.push_back(i);
  if (!outcome.failure.empty()) trace.notes.push_back(outcome.failure);

  if (bad) {
    // Replace whole components by exact witnesses until certified.
    trace.fallback = true;
    const auto comp_id = component_ids(f);
    std::set<std::size_t> replaced_components;
    std::set<std::size_t> replaced_blocks;
    const std::vector<Vertex> original = trace.sequence;
    while (bad) {
      const std::size_t comp = comp_id[p.blocks[*bad].vertices.front()];
      if (!replaced_components.insert(comp).second)
        throw InvariantError("exact witness for a component failed "
                             "certification");
      for (std::size_t i = 0; i < p.blocks.size(); ++i)
        if (comp_id[p.blocks[i].vertices.front()] == comp)
          replaced_blocks.insert(i);
      std::vector<Vertex> seq;
      for (Vertex v : original)
        if (!replaced_components.count(comp_id[v])) seq.push_back(v);
      for (std::size_t c : replaced_components) {
        std::vector<Vertex> members;
        for (Vertex v = 0; v < f.order(); ++v)
          if (comp_id[v] == c) members.push_back(v);
        const auto sub = induced_subgraph(f, members);
        const auto exact = grundy_exact(sub.graph, options.fallback_cap);
        for (Vertex v : exact.witness.order) seq.push_back(sub.new_to_old[v]);
      }
      trace.sequence = std::move(seq);
      bad = offending_block(f, p, trace.sequence, replaced_blocks);
      trace.notes.push_back("component " + std::to_string(comp) +
                            " replaced by exact witness");
    }
  }

  const auto legal = certify_sequence(f, trace.sequence);
  if (trace.sequence.size() != target)
    throw InvariantError("labeling produced " +
                         std::to_string(trace.sequence.size()) +
                         " labels, expected " + std::to_string(target));
  std::vector<bool> in_seq(f.order(), false);
  for (Vertex v : trace.sequence) in_seq[v] = true;
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    std::vector<Vertex> missing;
    for (Vertex v : p.blocks[i].vertices)
      if (!in_seq[v]) missing.push_back(v);
    trace.unlabeled[i] =
        missing.size() == 1 ? std::optional<Vertex>(missing.front())
                            : std::nullopt;
  }
  for (auto& bl : trace.branch_labels) {
    bl.footprint_ok = false;
    for (std::size_t s = 0; s < legal.length(); ++s) {
      if (legal.order[s] != bl.vertex) continue;
      for (Vertex t : bl.expected_targets)
        if (legal.footprints[s].contains(t)) bl.footprint_ok = true;
    }
  }
  return trace;
}

LabelingTrace forest_labeling(const Graph& f,
                              const ForestLabelingOptions& options) {
  if (!is_forest(f)) throw ArgumentError("forest_labeling requires a forest");
  return forest_labeling(f, minimum_caterpillar_partition(f), options);
}

GrundyResult grundy_forest(const Graph& f,
                           const ForestLabelingOptions& options) {
  const auto trace = forest_labeling(f, options);
  GrundyResult result;
  result.value = f.order() - trace.partition_size;
  result.witness = certify_sequence(f, trace.sequence);
  if (result.witness.length() != result.value)
    throw InvariantError("forest witness length differs from |V|-|P|");
  return result;
}

}  // namespace grundy
