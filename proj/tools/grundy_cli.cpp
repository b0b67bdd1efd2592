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

// Command-line front end: one subcommand per check, one graph per file,
// directories processed as sorted batches.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "grundy/acceptance.hpp"
#include "grundy/caterpillar.hpp"
#include "grundy/errors.hpp"
#include "grundy/graph_io.hpp"
#include "grundy/labeling.hpp"
#include "grundy/report.hpp"
#include "grundy/theorems.hpp"

namespace fs = std::filesystem;
using namespace grundy;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;

struct Config {
  std::size_t cap = kDefaultExactCap;
  std::uint64_t seed = 42;
  std::string format = "text";
  unsigned jobs = 1;
};

// Result of one input file.
struct Outcome {
  Json report;
  int status = kExitOk;
};

using Task = std::function<Outcome(const Graph&)>;

std::vector<fs::path> expand(const fs::path& input) {
  if (!fs::is_directory(input)) return {input};
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(input))
    if (entry.is_regular_file() && (entry.path().extension() == ".el" ||
                                    entry.path().extension() == ".g6"))
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  return files;
}

Outcome run_file(const fs::path& file, const Task& task) {
  Outcome out;
  try {
    out = task(load_graph(file));
  } catch (const InvariantError& e) {
    out = {{{"error", e.what()}, {"kind", "invariant"}}, kExitInvariant};
  } catch (const ParseError& e) {
    out = {{{"error", file.string() + ": " + e.what()},
            {"kind", "parse"}},
           kExitUsage};
  } catch (const std::exception& e) {
    out = {{{"error", e.what()}, {"kind", "input"}}, kExitUsage};
  }
  Json report = {{"file", file.string()}};
  report.update(out.report);
  out.report = std::move(report);
  return out;
}

void print(const Json& report, const Config& cfg) {
  if (cfg.format == "json")
    std::cout << report.dump(2) << '\n';
  else
    std::cout << to_text(report);
}

int worst(int a, int b) {
  auto weight = [](int s) { return s == kExitInvariant ? 2 : s; };
  return weight(a) >= weight(b) ? a : b;
}

int run_inputs(const fs::path& input, const Task& task, const Config& cfg) {
  const bool batch = fs::is_directory(input);
  const auto files = expand(input);
  std::vector<Outcome> outcomes(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++)
      outcomes[i] = run_file(files[i], task);
  };
  const unsigned threads =
      std::max(1u, std::min<unsigned>(cfg.jobs, files.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int status = kExitOk;
  for (const auto& o : outcomes) status = worst(status, o.status);
  if (!batch) {
    const auto& o = outcomes.front();
    if (o.status == kExitUsage && o.report.contains("error")) {
      std::cerr << "error: " << o.report["error"].get<std::string>() << '\n';
      return kExitUsage;
    }
    print(o.report, cfg);
    if (o.status == kExitInvariant)
      std::cerr << "invariant violation in " << files.front().string() << '\n';
    return o.status;
  }
  Json reports = Json::array();
  std::size_t ok = 0, invariant = 0, errors = 0;
  for (const auto& o : outcomes) {
    reports.push_back(o.report);
    ok += o.status == kExitOk;
    invariant += o.status == kExitInvariant;
    errors += o.status == kExitUsage;
  }
  print({{"reports", reports},
         {"summary",
          {{"files", files.size()},
           {"ok", ok},
           {"invariant_violations", invariant},
           {"errors", errors}}}},
        cfg);
  return status;
}

Json sequence_json(const LegalSequence& s) {
  return {{"gamma_gr", s.length()}, {"witness", s.order}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grundy domination toolkit"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--cap", cfg.cap, "largest order handed to the exact solver")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for generated corpora");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", cfg.jobs, "files processed in parallel")
      ->check(CLI::PositiveNumber);
  // Accept the global flags after the subcommand too.
  app.fallthrough();

  std::string input, second, blocks_file;
  bool exact = false, forest = false;

  auto* gamma = app.add_subcommand("gamma", "Grundy domination number");
  gamma->add_option("input", input, "graph file or directory")->required();
  auto* exact_flag = gamma->add_flag("--exact", exact, "use the exact solver");
  gamma->add_flag("--forest", forest, "use the forest formula")
      ->excludes(exact_flag);

  auto* partition =
      app.add_subcommand("partition", "minimum caterpillar partition");
  partition->add_option("input", input)->required();

  auto* label = app.add_subcommand("label", "forest labeling trace");
  label->add_option("input", input)->required();
  label->add_option("--blocks", blocks_file,
                    "file with one block per line (default: computed)");

  auto* product =
      app.add_subcommand("product-check", "strong product identity for G, H");
  product->add_option("G", input, "first factor (file or directory)")
      ->required();
  product->add_option("H", second, "second factor")->required();

  auto* tree =
      app.add_subcommand("spanning-tree", "spanning tree with >= Grundy number");
  tree->add_option("input", input)->required();

  auto* total =
      app.add_subcommand("total-set", "maximum legal set with no isolates");
  total->add_option("input", input)->required();

  auto* perturb =
      app.add_subcommand("perturb", "edge and vertex deletion audit");
  perturb->add_option("input", input)->required();

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (selftest->parsed()) {
    AcceptanceOptions options{cfg.seed, cfg.cap};
    const auto results = run_acceptance(options);
    const Json report = acceptance_report(results, options);
    if (cfg.format == "json") {
      std::cout << report.dump(2) << '\n';
    } else {
      for (const auto& r : results)
        std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id
                  << ": " << r.title << " (" << r.instances
                  << " instances)\n";
    }
    return report["passed"].get<bool>() ? kExitOk : kExitInvariant;
  }

  Task task;
  std::optional<Graph> h;
  if (gamma->parsed()) {
    task = [&](const Graph& g) -> Outcome {
      const bool use_forest = forest || (!exact && is_forest(g));
      if (forest && !is_forest(g))
        throw ArgumentError("--forest requires a forest");
      const auto r = use_forest ? grundy_forest(g) : grundy_exact(g, cfg.cap);
      Json out = {{"method", use_forest ? "forest" : "exact"}};
      out.update(sequence_json(r.witness));
      return {out, kExitOk};
    };
  } else if (partition->parsed()) {
    task = [&](const Graph& g) -> Outcome {
      if (!is_forest(g)) throw ArgumentError("partition requires a forest");
      return {to_json(minimum_caterpillar_partition(g), g), kExitOk};
    };
  } else if (label->parsed()) {
    task = [&](const Graph& g) -> Outcome {
      if (!is_forest(g)) throw ArgumentError("label requires a forest");
      if (blocks_file.empty()) return {to_json(forest_labeling(g)), kExitOk};
      std::ifstream in(blocks_file);
      if (!in) throw std::runtime_error("cannot open " + blocks_file);
      std::vector<std::vector<Vertex>> blocks;
      for (std::string line; std::getline(in, line);) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::vector<Vertex> block;
        for (Vertex v; fields >> v;) block.push_back(v);
        blocks.push_back(std::move(block));
      }
      return {to_json(forest_labeling(g, make_partition(g, blocks))),
              kExitOk};
    };
  } else if (product->parsed()) {
    try {
      h = load_graph(second);
    } catch (const ParseError& e) {
      std::cerr << "error: " << second << ": " << e.what() << '\n';
      return kExitUsage;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    task = [&](const Graph& g) -> Outcome {
      const auto r = check_product_identity(g, *h, cfg.cap);
      return {to_json(r), r.consistent() ? kExitOk : kExitInvariant};
    };
  } else if (tree->parsed()) {
    task = [&](const Graph& g) -> Outcome {
      return {to_json(spanning_tree_ge(g, cfg.cap)), kExitOk};
    };
  } else if (total->parsed()) {
    task = [&](const Graph& g) -> Outcome {
      return {to_json(total_dominating_grundy_set(g, cfg.cap)), kExitOk};
    };
  } else if (perturb->parsed()) {
    task = [&](const Graph& g) -> Outcome {
      const auto r = perturbation_audit(g, cfg.cap);
      return {to_json(r), r.ok() ? kExitOk : kExitInvariant};
    };
  }

  if (!fs::exists(input)) {
    std::cerr << "error: cannot open " << input << '\n';
    return kExitUsage;
  }
  return run_inputs(input, task, cfg);
}
