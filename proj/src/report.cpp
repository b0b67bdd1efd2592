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

#include "grundy/report.hpp"

#include <algorithm>
#include <sstream>

namespace grundy {

Json to_json(const VertexSet& s) { return s.to_vector(); }

Json to_json(const Edge& e) { return Json::array({e.u, e.v}); }

namespace {

Json edges_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(to_json(e));
  return out;
}

}  // namespace

Json to_json(const LegalSequence& s) {
  Json fp = Json::array();
  for (const auto& f : s.footprints) fp.push_back(to_json(f));
  return {{"length", s.length()}, {"sequence", s.order}, {"footprints", fp}};
}

Json to_json(const CaterpillarPartition& p, const Graph& f) {
  Json blocks = Json::array();
  for (const Block& b : p.blocks) {
    Json pos = Json::object();
    for (std::size_t i = 0; i < b.vertices.size(); ++i)
      pos[std::to_string(b.vertices[i])] = b.positions[i];
    blocks.push_back({{"vertices", b.vertices},
                      {"spine", b.spine},
                      {"positions", pos},
                      {"branch_vertices", b.branch_vertices}});
  }
  Json out = {{"size", p.size()},
              {"certified_minimum", p.certified_minimum},
              {"blocks", blocks},
              {"branch_edges", edges_json(p.branch_edges)},
              {"isolates", p.isolates}};
  out["canopy_edges"] = edges_json(canopy_graph(f, p).graph.edges());
  return out;
}

Json to_json(const LabelingTrace& t) {
  Json iterations = Json::array();
  for (const auto& it : t.iterations)
    iterations.push_back(
        {{"j", it.j},
         {"labeled", it.labeled},
         {"removed_blocks", it.removed_blocks},
         {"removed_vertices", it.removed_vertices},
         {"had_noncaterpillar_component", it.had_noncaterpillar_component},
         {"rank_one_pair_present", it.rank_one_pair_present}});
  Json unlabeled = Json::array();
  for (const auto& u : t.unlabeled)
    unlabeled.push_back(u ? Json(*u) : Json(nullptr));
  Json branch = Json::array();
  for (const auto& b : t.branch_labels)
    branch.push_back({{"vertex", b.vertex},
                      {"block", b.block},
                      {"iteration", b.iteration},
                      {"leaf", b.leaf},
                      {"expected_targets", b.expected_targets},
                      {"footprint_ok", b.footprint_ok}});
  return {{"length", t.length()},
          {"partition_size", t.partition_size},
          {"sequence", t.sequence},
          {"iterations", iterations},
          {"unlabeled", unlabeled},
          {"branch_labels", branch},
          {"reversed_blocks", t.reversed_blocks},
          {"fallback", t.fallback},
          {"notes", t.notes}};
}

Json to_json(const ProductCheckReport& r) {
  Json fibers = Json::array();
  for (const auto& f : r.fibers)
    fibers.push_back({{"v", f.view.fixed},
                      {"members", f.view.members},
                      {"footprinters", f.view.footprinters},
                      {"projection", f.view.projection},
                      {"size", f.size},
                      {"bound", f.bound},
                      {"projection_legal", f.projection_legal},
                      {"ok", f.ok}});
  return {{"gamma_G", r.gamma_g},
          {"gamma_H", r.gamma_h},
          {"gamma_product", r.gamma_product},
          {"G_is_forest", r.g_is_forest},
          {"lower_bound_holds", r.lower_bound_holds},
          {"identity_holds", r.identity_holds},
          {"witness_G", r.witness_g.order},
          {"witness_H", r.witness_h.order},
          {"witness_product", r.witness_product.order},
          {"fibers", fibers},
          {"fiber_bound_violations", r.fiber_bound_violations},
          {"ok", r.consistent()}};
}

Json to_json(const PeelBound& b) {
  return {{"lhs", b.lhs},
          {"gamma_H", b.gamma_h},
          {"gamma_rest", b.gamma_rest},
          {"rhs", b.rhs},
          {"ok", b.ok}};
}

Json to_json(const SpanningTreeResult& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps)
    steps.push_back(
        {{"edge", to_json(s.edge)}, {"before", s.before}, {"after", s.after}});
  return {{"gamma_G", r.gamma_graph},
          {"gamma_T", r.gamma_tree},
          {"tree_edges", edges_json(r.tree.edges())},
          {"deleted", steps},
          {"ok", r.gamma_tree >= r.gamma_graph}};
}

Json to_json(const TotalDominationResult& r) {
  Json repairs = Json::array();
  for (const auto& x : r.repairs)
    repairs.push_back(
        {{"removed", x.removed}, {"partner", x.partner}, {"added", x.added}});
  return {{"length", r.sequence.length()},
          {"sequence", r.sequence.order},
          {"set", to_json(r.sequence.vertex_set())},
          {"initial", r.initial},
          {"repairs", repairs}};
}

Json to_json(const PerturbationReport& r) {
  Json edges = Json::array();
  for (const auto& e : r.edges)
    edges.push_back({{"edge", to_json(e.edge)},
                     {"delta", e.delta},
                     {"leaf_edge", e.leaf_edge},
                     {"ok", e.ok}});
  Json vertices = Json::array();
  for (const auto& v : r.vertices)
    vertices.push_back({{"vertex", v.vertex},
                        {"delta", v.delta},
                        {"simplicial", v.simplicial},
                        {"twin", v.twin},
                        {"ok", v.ok}});
  auto histogram = [](const std::map<int, std::size_t>& h) {
    Json out = Json::object();
    for (const auto& [d, c] : h) out[std::to_string(d)] = c;
    return out;
  };
  return {{"gamma", r.gamma},
          {"edges", edges},
          {"vertices", vertices},
          {"edge_histogram", histogram(r.edge_histogram)},
          {"vertex_histogram", histogram(r.vertex_histogram)},
          {"violations", r.violations()},
          {"ok", r.ok()}};
}

namespace {

bool is_flat(const Json& j) {
  for (const auto& x : j)
    if (x.is_structured() && !(x.is_array() && x.size() <= 2 &&
                               std::all_of(x.begin(), x.end(), [](const Json& y) {
                                 return y.is_primitive();
                               })))
      return false;
  return true;
}

std::string scalar(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s;
    for (const auto& x : j) s += (s.empty() ? "" : "-") + scalar(x);
    return s;
  }
  return j.dump();
}

void render(std::ostringstream& out, const Json& j, const std::string& key,
            int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (j.is_object()) {
    if (!key.empty()) out << pad << key << ":\n";
    for (const auto& [k, v] : j.items())
      render(out, v, k, key.empty() ? depth : depth + 1);
  } else if (j.is_array() && is_flat(j)) {
    out << pad << key << ":";
    for (const auto& x : j) out << ' ' << scalar(x);
    out << '\n';
  } else if (j.is_array()) {
    out << pad << key << ":\n";
    for (std::size_t i = 0; i < j.size(); ++i)
      render(out, j[i], "[" + std::to_string(i) + "]", depth + 1);
  } else {
    out << pad << key << " = " << scalar(j) << '\n';
  }
}

}  // namespace

std::string to_text(const Json& report) {
  std::ostringstream out;
  render(out, report, "", 0);
  return out.str();
}

}  // namespace grundy
