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

#pragma once

#include <cstddef>
#include <nlohmann/json.hpp>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "swapbound/assignment.hpp"
#include "swapbound/circuit.hpp"
#include "swapbound/spectral.hpp"
#include "swapbound/uncomplexity.hpp"

namespace swapbound {

/// "%.15g"; non-finite values print as "nan"/"inf".
std::string format_real(double value);

/// Full bound report; the layout is pinned by schemas/bound_report.schema.json.
nlohmann::json bound_report_json(const BoundReport& report,
                                 const Circuit& circuit,
                                 const DeviceSpec& device,
                                 const InteractionGraph& ig);

std::string bound_csv_header();
std::string bound_csv_row(const BoundReport& report, const Circuit& circuit,
                          const DeviceSpec& device, const InteractionGraph& ig);

nlohmann::json assignment_json(const AssignmentResult& result);

/// "beta,swaps,stalled" rows.
std::string sweep_csv(std::span<const BetaResult> per_beta);
/// "beta,entropy" rows.
std::string entropy_curve_csv(std::span<const EntropyPoint> curve);

// ---- benchmark harness ---------------------------------------------------

struct ManifestEntry {
  std::string circuit_path;
  std::string device_path;
};

/// {"entries": [{"circuit": path, "device": path}, ...]}. Relative paths
/// resolve against `base_dir`.
std::vector<ManifestEntry> parse_manifest(std::string_view text,
                                          const std::string& base_dir);

struct BenchRow {
  std::string benchmark;
  std::string device;
  std::size_t ig_nodes = 0;
  std::size_t ig_edges = 0;
  std::size_t gate_count = 0;
  std::size_t ged = 0;
  std::string assignment_path;
  std::size_t u_swap = 0;
  double beta_star = 0.0;
  std::size_t m_swap_max = 0;
  std::optional<std::size_t> oracle;
  double assign_ms = 0.0;
  double sweep_ms = 0.0;
  double oracle_ms = 0.0;
  bool stalled = false;
  /// Non-empty when the entry failed; other fields are then unset.
  std::string error;
};

struct BenchOptions {
  BoundOptions bound;
  bool run_oracle = true;
  std::size_t jobs = 1;
};

/// One row per (circuit, device) pair. Entry failures are captured in the
/// row, never thrown.
BenchRow bench_row(const Circuit& circuit, const DeviceSpec& device,
                   const BenchOptions& options);
std::vector<BenchRow> run_bench(std::span<const ManifestEntry> manifest,
                                const BenchOptions& options);

/// Rows as CSV, including column-sum-normalized swap columns. Timing
/// columns are emitted only when `timings` is set.
std::string bench_csv(std::span<const BenchRow> rows, bool timings);

/// Pearson correlation; NaN when either column has zero variance.
double pearson(std::span<const double> x, std::span<const double> y);

struct BenchSummary {
  std::size_t rows = 0;
  std::size_t errors = 0;
  std::size_t stalled = 0;
  std::size_t sandwich_violations = 0;
  std::vector<std::string> correlation_labels;
  std::vector<std::vector<double>> correlation;
  /// beta* counts per decade 10^-5 .. 10^5 over non-isomorphic rows.
  std::vector<std::size_t> beta_histogram;
  std::size_t routed_rows = 0;
  std::size_t high_temperature = 0;
  bool beta_star_in_grid = true;
};

BenchSummary summarize_bench(std::span<const BenchRow> rows);
nlohmann::json bench_summary_json(const BenchSummary& summary);

}  // namespace swapbound
