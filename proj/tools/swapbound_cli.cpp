// Copyright 2026 The swapbound Authors
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

// swapbound: SWAP-count bounds for mapping circuits onto coupling graphs.
//
// Exit codes: 0 success, 1 input error, 2 stalled run, 3 size guard.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "swapbound/assignment.hpp"
#include "swapbound/circuit.hpp"
#include "swapbound/errors.hpp"
#include "swapbound/instances.hpp"
#include "swapbound/oracle.hpp"
#include "swapbound/report.hpp"
#include "swapbound/spectral.hpp"
#include "swapbound/uncomplexity.hpp"

namespace {

using namespace swapbound;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitStall = 2;
constexpr int kExitGuard = 3;

struct RunConfig {
  std::string circuit_path;
  std::string device_path;
  std::optional<double> beta;
  bool sweep = false;
  std::string beta_grid = "default";
  std::string format = "json";
  double iso_tolerance = kIsoTolerance;
  double improvement_tolerance = kImprovementTolerance;
  std::optional<std::size_t> stall_budget;
  std::size_t class_budget = 100'000;
  bool force_shortcut = false;
  std::size_t jobs = 1;
  std::uint64_t seed = 0;
};

BetaGrid parse_grid(const std::string& spec) {
  if (spec == "default") return BetaGrid::standard();
  std::vector<BetaValue> values;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw ValidationError("bad beta value '" + item + "' in --beta-grid");
    }
    values.emplace_back(v);
  }
  return BetaGrid(std::move(values));
}

BoundOptions bound_options(const RunConfig& cfg) {
  BoundOptions options;
  options.uncomplexity.iso_tolerance = cfg.iso_tolerance;
  options.uncomplexity.improvement_tolerance = cfg.improvement_tolerance;
  options.uncomplexity.stall_budget = cfg.stall_budget;
  options.assignment.enumeration.max_classes = cfg.class_budget;
  options.assignment.force_shortcut = cfg.force_shortcut;
  options.grid = parse_grid(cfg.beta_grid);
  options.jobs = cfg.jobs;
  if (cfg.beta && !cfg.sweep) options.beta = BetaValue(*cfg.beta);
  return options;
}

void add_tolerance_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--iso-tol", cfg.iso_tolerance,
                  "qJSD at or below this counts as equal states")
      ->check(CLI::Range(1e-15, 1e-3));
  cmd->add_option("--improve-tol", cfg.improvement_tolerance,
                  "minimum qJSD decrease for an improving swap")
      ->check(CLI::Range(0.0, 1e-3));
  cmd->add_option("--stall-budget", cfg.stall_budget,
                  "forced swaps allowed per run (default: maximal bound)")
      ->check(CLI::Range(std::size_t{0}, std::size_t{1'000'000}));
  cmd->add_option("--class-budget", cfg.class_budget,
                  "subgraph classes before falling back to the shortcut")
      ->check(CLI::Range(std::size_t{1}, std::size_t{100'000'000}));
  cmd->add_flag("--shortcut", cfg.force_shortcut,
                "place on the most-connected subgraph instead of searching");
  cmd->add_option("--beta-grid", cfg.beta_grid,
                  "'default' or a comma-separated ascending list");
  cmd->add_option("--jobs", cfg.jobs, "parallel workers")
      ->check(CLI::Range(std::size_t{1}, std::size_t{256}));
}

void add_pair_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--circuit", cfg.circuit_path, "circuit JSON or .qasm")
      ->required();
  cmd->add_option("--device", cfg.device_path, "device JSON")->required();
}

struct Inputs {
  Circuit circuit;
  DeviceSpec device;
  InteractionGraph ig;
};

Inputs load_inputs(const RunConfig& cfg) {
  Inputs in;
  in.circuit = load_circuit(cfg.circuit_path);
  in.device = load_device(cfg.device_path);
  in.ig = interaction_graph(in.circuit);
  return in;
}

int cmd_bound(const RunConfig& cfg) {
  Inputs in = load_inputs(cfg);
  const BoundOptions options = bound_options(cfg);
  const BoundReport report = compute_bound(in.ig, in.device.coupling, options);
  if (cfg.format == "csv") {
    std::cout << bound_csv_header()
              << bound_csv_row(report, in.circuit, in.device, in.ig);
  } else {
    std::cout << bound_report_json(report, in.circuit, in.device, in.ig).dump(2)
              << "\n";
  }
  return report.stalled ? kExitStall : kExitOk;
}

int cmd_assign(const RunConfig& cfg) {
  Inputs in = load_inputs(cfg);
  const AssignmentResult result =
      assign_qubits(in.ig, in.device.coupling, bound_options(cfg).assignment);
  nlohmann::json doc = assignment_json(result);
  doc["m_swap_max"] = max_swap_bound(in.ig, result.assignment);
  std::cout << doc.dump(2) << "\n";
  return kExitOk;
}

int cmd_oracle(const RunConfig& cfg, bool over_assignments) {
  Inputs in = load_inputs(cfg);
  nlohmann::json doc;
  if (over_assignments) {
    const OracleOptimum best =
        brute_force_over_assignments(in.ig.graph, in.device.coupling);
    doc = {{"oracle", best.swaps},
           {"nodes", best.initial.nodes()},
           {"ig_to_cg", best.initial.ig_to_cg()}};
  } else {
    const AssignmentResult placement =
        assign_qubits(in.ig, in.device.coupling, bound_options(cfg).assignment);
    const std::size_t swaps =
        brute_force_min_swaps(in.ig.graph, placement.assignment);
    doc = {{"oracle", swaps},
           {"nodes", placement.assignment.nodes()},
           {"ig_to_cg", placement.assignment.ig_to_cg()}};
  }
  std::cout << doc.dump(2) << "\n";
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg) {
  Inputs in = load_inputs(cfg);
  const BoundOptions options = bound_options(cfg);
  const AssignmentResult placement =
      assign_qubits(in.ig, in.device.coupling, options.assignment);
  std::vector<BetaResult> rows;
  try {
    rows = beta_sweep(in.ig, placement.assignment, options.grid,
                      options.uncomplexity, options.jobs)
               .per_beta;
  } catch (const SweepError& e) {
    std::cout << sweep_csv(e.partial());
    std::cerr << "swapbound: " << e.what() << "\n";
    return kExitStall;
  }
  std::cout << sweep_csv(rows);
  return kExitOk;
}

int cmd_curve(const std::string& circuit_path, const std::string& device_path,
              const std::string& grid_spec) {
  Graph g;
  if (!circuit_path.empty()) {
    g = interaction_graph(load_circuit(circuit_path)).graph;
  } else {
    g = load_device(device_path).coupling;
  }
  const BetaGrid grid = parse_grid(grid_spec);
  std::cout << entropy_curve_csv(entropy_curve(g, grid.values()));
  return kExitOk;
}

struct BenchConfig {
  std::string manifest;
  std::string summary_path;
  std::size_t random_count = 0;
  bool no_oracle = false;
  bool timings = false;
};

int cmd_bench(const RunConfig& cfg, const BenchConfig& bench) {
  BenchOptions options;
  options.bound = bound_options(cfg);
  options.bound.jobs = 1;
  options.run_oracle = !bench.no_oracle;
  options.jobs = cfg.jobs;

  std::vector<BenchRow> rows;
  if (!bench.manifest.empty()) {
    std::ifstream file(bench.manifest);
    if (!file) throw ValidationError("cannot open " + bench.manifest);
    std::stringstream text;
    text << file.rdbuf();
    const std::string base =
        std::filesystem::path(bench.manifest).parent_path().string();
    const auto entries = parse_manifest(text.str(), base.empty() ? "." : base);
    rows = run_bench(entries, options);
  }
  std::mt19937_64 rng(cfg.seed);
  for (std::size_t i = 0; i < bench.random_count; ++i) {
    const RandomInstance inst = random_instance(rng, InstanceShape{}, i);
    rows.push_back(bench_row(inst.circuit, inst.device, options));
  }

  std::cout << bench_csv(rows, bench.timings);
  const std::string summary =
      bench_summary_json(summarize_bench(rows)).dump(2) + "\n";
  if (bench.summary_path.empty()) {
    std::cerr << summary;
  } else {
    std::ofstream out(bench.summary_path);
    if (!out) throw ValidationError("cannot write " + bench.summary_path);
    out << summary;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SWAP-count lower and upper bounds for circuit mapping"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* bound = app.add_subcommand("bound", "lower bound, maximal bound, GED");
  add_pair_flags(bound, cfg);
  add_tolerance_flags(bound, cfg);
  auto* beta_opt = bound->add_option("--beta", cfg.beta, "single inverse temperature")
                       ->check(CLI::Range(0.0, 1e300));
  bound->add_flag("--sweep", cfg.sweep, "sweep the beta grid (default)")
      ->excludes(beta_opt);
  bound->add_option("--format", cfg.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* assign = app.add_subcommand("assign", "initial qubit assignment");
  add_pair_flags(assign, cfg);
  add_tolerance_flags(assign, cfg);

  bool over_assignments = false;
  auto* oracle = app.add_subcommand("oracle", "exact optimum (<= 8 qubits)");
  add_pair_flags(oracle, cfg);
  add_tolerance_flags(oracle, cfg);
  oracle->add_flag("--over-assignments", over_assignments,
                   "minimize over every initial placement too");

  auto* sweep = app.add_subcommand("sweep", "swap count per beta as CSV");
  add_pair_flags(sweep, cfg);
  add_tolerance_flags(sweep, cfg);

  std::string curve_circuit, curve_device, curve_grid = "default";
  auto* curve = app.add_subcommand("curve", "entropy versus beta as CSV");
  auto* cc = curve->add_option("--circuit", curve_circuit, "use the circuit's IG");
  auto* cd = curve->add_option("--device", curve_device, "use the device's CG");
  cc->excludes(cd);
  curve->add_option("--beta-grid", curve_grid,
                    "'default' or a comma-separated ascending list");

  BenchConfig bench_cfg;
  auto* bench = app.add_subcommand("bench", "run a manifest of circuit/device pairs");
  add_tolerance_flags(bench, cfg);
  bench->add_option("--manifest", bench_cfg.manifest, "manifest JSON");
  bench->add_option("--random", bench_cfg.random_count,
                    "append N seeded random small instances");
  bench->add_option("--seed", cfg.seed, "seed for --random instances");
  bench->add_option("--summary", bench_cfg.summary_path,
                    "write the summary JSON here instead of stderr");
  bench->add_flag("--no-oracle", bench_cfg.no_oracle, "skip the exact optimum");
  bench->add_flag("--timings", bench_cfg.timings, "add per-stage runtime columns");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*bound) return cmd_bound(cfg);
    if (*assign) return cmd_assign(cfg);
    if (*oracle) return cmd_oracle(cfg, over_assignments);
    if (*sweep) return cmd_sweep(cfg);
    if (*curve) {
      if (curve_circuit.empty() && curve_device.empty()) {
        throw ValidationError("curve needs --circuit or --device");
      }
      return cmd_curve(curve_circuit, curve_device, curve_grid);
    }
    if (*bench) {
      if (bench_cfg.manifest.empty() && bench_cfg.random_count == 0) {
        throw ValidationError("bench needs --manifest and/or --random");
      }
      return cmd_bench(cfg, bench_cfg);
    }
  } catch (const SizeGuardError& e) {
    std::cerr << "swapbound: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "swapbound: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
