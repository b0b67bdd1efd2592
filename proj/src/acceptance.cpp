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

#include "grundy/acceptance.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "grundy/caterpillar.hpp"
#include "grundy/errors.hpp"
#include "grundy/generators.hpp"
#include "grundy/labeling.hpp"
#include "grundy/theorems.hpp"

namespace grundy {

namespace {

struct NamedBlock {
  std::vector<std::string> spine;
  std::vector<std::pair<std::string, std::string>> leaves;  // leaf, parent
};

// Numbered names come first in numeric order, then "c<k>" names by k.
LabeledFixture build_fixture(
    std::string name, const std::vector<NamedBlock>& blocks,
    const std::vector<std::pair<std::string, std::string>>& branch) {
  auto rank = [](const std::string& s) {
    return s[0] == 'c' ? std::make_pair(1, std::stoi(s.substr(1)))
                       : std::make_pair(0, std::stoi(s));
  };
  std::vector<std::string> names;
  for (const auto& b : blocks) {
    names.insert(names.end(), b.spine.begin(), b.spine.end());
    for (const auto& [leaf, parent] : b.leaves) names.push_back(leaf);
  }
  std::sort(names.begin(), names.end(),
            [&](const auto& x, const auto& y) { return rank(x) < rank(y); });
  std::map<std::string, Vertex> id;
  for (std::size_t i = 0; i < names.size(); ++i)
    id[names[i]] = static_cast<Vertex>(i);

  LabeledFixture fx;
  fx.name = std::move(name);
  std::vector<Edge> edges;
  for (const auto& b : blocks) {
    std::vector<Vertex> members;
    for (std::size_t i = 0; i < b.spine.size(); ++i) {
      members.push_back(id.at(b.spine[i]));
      if (i > 0) edges.emplace_back(id.at(b.spine[i - 1]), id.at(b.spine[i]));
    }
    for (const auto& [leaf, parent] : b.leaves) {
      members.push_back(id.at(leaf));
      edges.emplace_back(id.at(leaf), id.at(parent));
    }
    std::sort(members.begin(), members.end());
    fx.blocks.push_back(std::move(members));
  }
  for (const auto& [a, b] : branch) edges.emplace_back(id.at(a), id.at(b));
  fx.graph = Graph(names.size(), edges);
  return fx;
}

std::vector<std::string> chain(std::vector<std::string> head, int group,
                               int count) {
  for (int i = 1; i <= count; ++i)
    head.push_back("c" + std::to_string(group) + std::to_string(i));
  return head;
}

Rng criterion_rng(const AcceptanceOptions& options, int id) {
  std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                    static_cast<std::uint32_t>(options.seed >> 32),
                    static_cast<std::uint32_t>(id)};
  return Rng(seq);
}

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Json edge_list(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(to_json(e));
  return {{"n", g.order()}, {"edges", edges}};
}

constexpr std::size_t kExampleLimit = 5;

void keep_example(Json& list, Json example) {
  if (list.size() < kExampleLimit) list.push_back(std::move(example));
}

// Criteria 1 and 2: the forest formula and labeling certification on all
// trees up to 8 vertices, random trees on 9 and 10, and random forests.
std::pair<CriterionResult, CriterionResult> forest_corpus(
    const AcceptanceOptions& options) {
  CriterionResult formula{1, "forest formula equals exact Grundy number",
                          false, 0, Json::object()};
  CriterionResult labeling{2, "forest labeling certified with rare fallback",
                           false, 0, Json::object()};
  std::size_t mismatches = 0, fallbacks = 0, uncertified = 0;
  Json mismatch_examples = Json::array();
  Json fallback_examples = Json::array();
  Json per_source = Json::object();

  auto visit = [&](const Graph& f, const std::string& source) {
    ++formula.instances;
    auto& count = per_source[source];
    count = count.is_null() ? 1 : count.get<std::size_t>() + 1;
    const std::size_t exact = grundy_number(f, options.cap);
    LabelingTrace trace;
    try {
      trace = forest_labeling(f);
    } catch (const std::exception& e) {
      ++mismatches;
      ++uncertified;
      keep_example(mismatch_examples,
                   {{"graph", edge_list(f)}, {"error", e.what()}});
      return;
    }
    const std::size_t formula_value = f.order() - trace.partition_size;
    if (formula_value != exact) {
      ++mismatches;
      keep_example(mismatch_examples, {{"graph", edge_list(f)},
                                       {"formula", formula_value},
                                       {"exact", exact}});
    }
    if (!is_legal(f, trace.sequence) || trace.length() != formula_value)
      ++uncertified;
    if (trace.fallback) {
      ++fallbacks;
      keep_example(fallback_examples,
                   {{"graph", edge_list(f)}, {"notes", trace.notes}});
    }
  };

  for (std::size_t n = 2; n <= 8; ++n)
    for_each_labeled_tree(n, [&](const Graph& t) {
      visit(t, "all trees n=" + std::to_string(n));
    });
  Rng rng = criterion_rng(options, 1);
  for (std::size_t n : {9, 10})
    for (int k = 0; k < 50000; ++k)
      visit(random_tree(n, rng), "random trees n=" + std::to_string(n));
  for (int k = 0; k < 5000; ++k) {
    const std::size_t n = uniform(rng, 1, 12);
    visit(random_forest(n, uniform_real(rng, 0.0, 0.4), rng),
          "random forests n<=12");
  }

  labeling.instances = formula.instances;
  formula.passed = mismatches == 0;
  formula.details = {{"corpus", per_source},
                     {"mismatches", mismatches},
                     {"examples", mismatch_examples}};
  const double rate = static_cast<double>(fallbacks) /
                      static_cast<double>(labeling.instances);
  labeling.passed = uncertified == 0 && rate < 0.001;
  labeling.details = {{"uncertified", uncertified},
                      {"fallbacks", fallbacks},
                      {"fallback_rate", rate},
                      {"fallback_limit", 0.001},
                      {"examples", fallback_examples}};
  return {formula, labeling};
}

CriterionResult labeled_fixtures(const AcceptanceOptions&) {
  CriterionResult r{3, "labeled example forests reproduce their counts", true,
                    0, Json::array()};
  for (const auto& fx : {path_blocks_fixture(), mixed_blocks_fixture()}) {
    ++r.instances;
    const auto p = make_partition(fx.graph, fx.blocks);
    const auto trace = forest_labeling(fx.graph, p);
    const bool first_ok =
        !trace.iterations.empty() &&
        trace.iterations.front().labeled == fx.expected_first_iteration;
    const bool ok = trace.length() == fx.expected_labels &&
                    p.size() == fx.blocks.size() &&
                    trace.iterations.size() == fx.expected_iterations &&
                    first_ok && !trace.fallback &&
                    is_legal(fx.graph, trace.sequence);
    r.passed = r.passed && ok;
    r.details.push_back({{"fixture", fx.name},
                         {"labels", trace.length()},
                         {"expected_labels", fx.expected_labels},
                         {"blocks", p.size()},
                         {"iterations", trace.iterations.size()},
                         {"expected_iterations", fx.expected_iterations},
                         {"first_iteration_matches", first_ok},
                         {"fallback", trace.fallback},
                         {"ok", ok}});
  }
  return r;
}

struct ProductPair {
  Graph g;
  Graph h;
};

std::vector<ProductPair> product_pairs(const AcceptanceOptions& options,
                                       bool forest_g) {
  Rng rng = criterion_rng(options, forest_g ? 4 : 40);
  std::vector<ProductPair> pairs;
  for (int k = 0; k < 600; ++k) {
    const std::size_t a = uniform(rng, 1, 11);
    const std::size_t b = uniform(rng, 1, 22 / a);
    Graph g = forest_g ? random_forest(a, uniform_real(rng, 0.0, 0.3), rng)
                       : random_graph(a, uniform_real(rng, 0.2, 0.8), rng);
    Graph h = random_graph(b, uniform_real(rng, 0.2, 0.8), rng);
    pairs.push_back({std::move(g), std::move(h)});
  }
  return pairs;
}

CriterionResult product_identity(const AcceptanceOptions& options) {
  CriterionResult r{4, "product identity on forests and lower bound", false,
                    0, Json::object()};
  std::size_t identity_failures = 0, bound_failures = 0, identity_cases = 0;
  Json examples = Json::array();
  for (bool forest_g : {true, false})
    for (const auto& [g, h] : product_pairs(options, forest_g)) {
      ++r.instances;
      const auto report = check_product_identity(g, h, options.cap);
      if (!report.lower_bound_holds) ++bound_failures;
      if (forest_g) {
        ++identity_cases;
        if (!report.identity_holds) ++identity_failures;
      }
      if (!report.lower_bound_holds || (forest_g && !report.identity_holds))
        keep_example(examples, {{"G", edge_list(g)},
                                {"H", edge_list(h)},
                                {"gamma_G", report.gamma_g},
                                {"gamma_H", report.gamma_h},
                                {"gamma_product", report.gamma_product}});
    }
  r.passed = identity_failures == 0 && bound_failures == 0;
  r.details = {{"forest_pairs", identity_cases},
               {"arbitrary_pairs", r.instances - identity_cases},
               {"identity_failures", identity_failures},
               {"lower_bound_failures", bound_failures},
               {"examples", examples}};
  return r;
}

CriterionResult fiber_bound(const AcceptanceOptions& options) {
  CriterionResult r{5, "fiber footprint bound under the exact witness", false,
                    0, Json::object()};
  std::size_t fibers = 0, too_large = 0, illegal = 0;
  Json examples = Json::array();
  for (bool forest_g : {true, false})
    for (const auto& [g, h] : product_pairs(options, forest_g)) {
      ++r.instances;
      const auto report = check_product_identity(g, h, options.cap);
      for (const auto& fb : report.fibers) {
        ++fibers;
        if (fb.size > fb.bound) ++too_large;
        if (!fb.projection_legal) ++illegal;
        if (!fb.ok)
          keep_example(examples, {{"G", edge_list(g)},
                                  {"H", edge_list(h)},
                                  {"v", fb.view.fixed},
                                  {"size", fb.size},
                                  {"bound", fb.bound}});
      }
    }
  r.passed = too_large == 0 && illegal == 0;
  r.details = {{"fibers", fibers},
               {"over_bound", too_large},
               {"illegal_projections", illegal},
               {"examples", examples}};
  return r;
}

CriterionResult perturbation(const AcceptanceOptions& options) {
  CriterionResult r{6, "edge and vertex deletion windows", false, 0,
                    Json::object()};
  Rng rng = criterion_rng(options, 6);
  std::map<int, std::size_t> edge_hist, vertex_hist, simplicial_hist,
      twin_hist;
  std::size_t violations = 0;
  Json examples = Json::array();
  for (int k = 0; k < 1000; ++k) {
    ++r.instances;
    const Graph g =
        random_graph(uniform(rng, 1, 12), uniform_real(rng, 0.1, 0.9), rng);
    const auto report = perturbation_audit(g, options.cap);
    for (const auto& e : report.edges) ++edge_hist[e.delta];
    for (const auto& v : report.vertices) {
      ++vertex_hist[v.delta];
      if (v.simplicial) ++simplicial_hist[v.delta];
      if (v.twin) ++twin_hist[v.delta];
    }
    violations += report.violations();
    if (!report.ok())
      keep_example(examples, {{"graph", edge_list(g)},
                              {"report", to_json(report)}});
  }
  auto hist = [](const std::map<int, std::size_t>& h) {
    Json out = Json::object();
    for (const auto& [d, c] : h) out[std::to_string(d)] = c;
    return out;
  };
  r.passed = violations == 0;
  r.details = {{"edge_deltas", hist(edge_hist)},
               {"vertex_deltas", hist(vertex_hist)},
               {"simplicial_deltas", hist(simplicial_hist)},
               {"twin_deltas", hist(twin_hist)},
               {"violations", violations},
               {"examples", examples}};
  return r;
}

CriterionResult leaf_edges(const AcceptanceOptions& options) {
  CriterionResult r{7, "leaf-edge deletion never lowers a forest's number",
                    false, 0, Json::object()};
  Rng rng = criterion_rng(options, 7);
  std::size_t edges = 0, decreases = 0;
  std::map<int, std::size_t> hist;
  Json examples = Json::array();
  for (int k = 0; k < 1000; ++k) {
    ++r.instances;
    const Graph f =
        random_forest(uniform(rng, 2, 12), uniform_real(rng, 0.0, 0.3), rng);
    for (const auto& d : leaf_edge_deltas(f, options.cap)) {
      ++edges;
      ++hist[d.delta];
      if (d.delta < 0) {
        ++decreases;
        keep_example(examples,
                     {{"graph", edge_list(f)}, {"edge", to_json(d.edge)}});
      }
    }
  }
  Json h = Json::object();
  for (const auto& [d, c] : hist) h[std::to_string(d)] = c;
  r.passed = decreases == 0;
  r.details = {{"leaf_edges", edges},
               {"deltas", h},
               {"decreases", decreases},
               {"examples", examples}};
  return r;
}

// Replays the deletion chain and checks every claimed value.
bool certificate_valid(const Graph& g, const SpanningTreeResult& r,
                       std::size_t cap) {
  Graph cur = g;
  std::size_t gamma = grundy_number(g, cap);
  if (gamma != r.gamma_graph) return false;
  for (const auto& step : r.steps) {
    if (!cur.adjacent(step.edge.u, step.edge.v) || step.before != gamma)
      return false;
    cur = delete_edge(cur, step.edge.u, step.edge.v);
    const std::size_t after = grundy_number(cur, cap);
    if (after != step.after || after < gamma) return false;
    gamma = after;
  }
  return cur == r.tree && is_tree(cur) && cur.order() == g.order() &&
         gamma == r.gamma_tree;
}

CriterionResult spanning_trees(const AcceptanceOptions& options) {
  CriterionResult r{8, "spanning tree with no smaller Grundy number", false, 0,
                    Json::object()};
  Rng rng = criterion_rng(options, 8);
  std::size_t failures = 0, deletions = 0;
  Json examples = Json::array();
  for (int k = 0; k < 500; ++k) {
    ++r.instances;
    const Graph g = random_connected_graph(uniform(rng, 2, 10),
                                           uniform_real(rng, 0.1, 0.7), rng);
    bool ok = false;
    std::string why;
    try {
      const auto result = spanning_tree_ge(g, options.cap);
      deletions += result.steps.size();
      ok = result.gamma_tree >= result.gamma_graph &&
           grundy_number(result.tree, options.cap) >=
               grundy_number(g, options.cap) &&
           certificate_valid(g, result, options.cap);
    } catch (const std::exception& e) {
      why = e.what();
    }
    if (!ok) {
      ++failures;
      keep_example(examples, {{"graph", edge_list(g)}, {"error", why}});
    }
  }
  r.passed = failures == 0;
  r.details = {{"deleted_edges", deletions},
               {"failures", failures},
               {"examples", examples}};
  return r;
}

CriterionResult total_domination(const AcceptanceOptions& options) {
  CriterionResult r{9, "maximum legal set without isolated vertices", false,
                    0, Json::object()};
  Rng rng = criterion_rng(options, 9);
  std::size_t failures = 0, alarms = 0, repairs = 0;
  Json examples = Json::array();
  while (r.instances < 500) {
    const Graph g = random_connected_graph(uniform(rng, 3, 12),
                                           uniform_real(rng, 0.1, 0.7), rng);
    if (is_complete(g)) continue;
    ++r.instances;
    try {
      const auto result = total_dominating_grundy_set(g, options.cap);
      repairs += result.repairs.size();
      const bool ok =
          is_legal(g, result.sequence.order) &&
          result.sequence.length() == grundy_number(g, options.cap) &&
          isolated_in_set(g, result.sequence.order).empty();
      if (!ok) {
        ++failures;
        keep_example(examples, {{"graph", edge_list(g)},
                                {"result", to_json(result)}});
      }
    } catch (const InvariantError& e) {
      ++alarms;
      keep_example(examples, {{"graph", edge_list(g)}, {"alarm", e.what()}});
    }
  }
  r.passed = failures == 0 && alarms == 0;
  r.details = {{"repairs", repairs},
               {"failures", failures},
               {"alarms", alarms},
               {"examples", examples}};
  return r;
}

}  // namespace

LabeledFixture path_blocks_fixture() {
  std::vector<NamedBlock> blocks = {
      {chain({"1", "2"}, 1, 3), {}},
      {chain({"3", "4", "14"}, 2, 4), {}},
      {chain({"5", "6", "15"}, 3, 7), {}},
      {chain({"7", "8", "16"}, 4, 6), {}},
      {{"9", "10", "17", "18", "c51"}, {}},
      {chain({"11", "12"}, 6, 5), {}},
      {chain({"13"}, 7, 3), {}},
  };
  auto fx = build_fixture("path_blocks_47", blocks,
                          {{"c11", "c22"},
                           {"14", "15"},
                           {"c33", "c61"},
                           {"c35", "c45"},
                           {"16", "17"},
                           {"c63", "c71"}});
  fx.expected_labels = 40;
  fx.expected_iterations = 3;
  for (Vertex v = 0; v < 18; ++v) fx.expected_first_iteration.push_back(v);
  return fx;
}

LabeledFixture mixed_blocks_fixture() {
  std::vector<NamedBlock> blocks = {
      {{"1", "3", "10", "11", "c11"}, {{"2", "3"}, {"8", "10"}}},
      {{"4", "6", "9", "c12", "c13", "c14"},
       {{"5", "6"}, {"c15", "c12"}, {"c16", "c13"}}},
      {{"7", "c17", "c18"}, {}},
  };
  auto fx = build_fixture("mixed_blocks_19", blocks,
                          {{"9", "8"}, {"c15", "c17"}});
  fx.expected_labels = 16;
  fx.expected_iterations = 2;
  for (Vertex v = 0; v < 11; ++v) fx.expected_first_iteration.push_back(v);
  return fx;
}

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  switch (id) {
    case 1:
      return forest_corpus(options).first;
    case 2:
      return forest_corpus(options).second;
    case 3:
      return labeled_fixtures(options);
    case 4:
      return product_identity(options);
    case 5:
      return fiber_bound(options);
    case 6:
      return perturbation(options);
    case 7:
      return leaf_edges(options);
    case 8:
      return spanning_trees(options);
    case 9:
      return total_domination(options);
  }
  throw ArgumentError("no criterion " + std::to_string(id));
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  auto [formula, labeling] = forest_corpus(options);
  std::vector<CriterionResult> out{std::move(formula), std::move(labeling)};
  for (int id = 3; id <= kCriterionCount; ++id)
    out.push_back(run_criterion(id, options));
  return out;
}

Json to_json(const CriterionResult& r) {
  return {{"id", r.id},
          {"title", r.title},
          {"passed", r.passed},
          {"instances", r.instances},
          {"details", r.details}};
}

Json acceptance_report(const std::vector<CriterionResult>& results,
                       const AcceptanceOptions& options) {
  Json criteria = Json::array();
  bool all = true;
  for (const auto& r : results) {
    criteria.push_back(to_json(r));
    all = all && r.passed;
  }
  return {{"seed", options.seed},
          {"cap", options.cap},
          {"criteria", criteria},
          {"passed", all}};
}

}  // namespace grundy
