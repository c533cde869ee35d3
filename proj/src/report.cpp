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

#include "swapbound/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <future>
#include <numeric>
#include <sstream>

#include "swapbound/errors.hpp"
#include "swapbound/oracle.hpp"

namespace swapbound {

namespace {

using nlohmann::json;

json edge_json(Vertex a, Vertex b) { return json::array({a, b}); }

json trace_json(const AlgoTrace& trace, const Assignment& a) {
  json steps = json::array();
  for (const TraceEvent& event : trace.steps) {
    if (const auto* s = std::get_if<SwapEvent>(&event)) {
      steps.push_back({{"type", "swap"},
                       {"edge", edge_json(a.nodes()[s->swap.pair.u],
                                          a.nodes()[s->swap.pair.v])},
                       {"qjsd_before", s->qjsd_before},
                       {"qjsd_after", s->qjsd_after},
                       {"forced", s->forced}});
    } else if (const auto* e = std::get_if<EraseEvent>(&event)) {
      json edges = json::array();
      for (const Edge& x : e->edges) edges.push_back(edge_json(x.u, x.v));
      steps.push_back({{"type", "erase"}, {"edges", edges}});
    } else if (const auto* st = std::get_if<StallEvent>(&event)) {
      steps.push_back({{"type", "stall"}, {"reason", st->reason}});
    }
  }
  return steps;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - since)
      .count();
}

}  // namespace

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

json assignment_json(const AssignmentResult& result) {
  return {{"path", to_string(result.path)},
          {"ged", result.ged},
          {"nodes", result.assignment.nodes()},
          {"ig_to_cg", result.assignment.ig_to_cg()},
          {"classes_considered", result.classes_considered}};
}

json bound_report_json(const BoundReport& report, const Circuit& circuit,
                       const DeviceSpec& device, const InteractionGraph& ig) {
  json per_beta = json::array();
  for (const BetaResult& r : report.per_beta) {
    per_beta.push_back(
        {{"beta", r.beta.value()}, {"swaps", r.swaps}, {"stalled", r.stalled}});
  }
  return {
      {"circuit", circuit.name},
      {"device", device.name},
      {"num_qubits", ig.graph.num_vertices()},
      {"ig_edges", ig.graph.num_edges()},
      {"gate_count", ig.gate_count()},
      {"assignment",
       {{"path", to_string(report.assignment_path)},
        {"ged", report.ged},
        {"nodes", report.assignment.nodes()},
        {"ig_to_cg", report.assignment.ig_to_cg()}}},
      {"u_swap", report.u_swap},
      {"beta_star", report.beta_star.value()},
      {"m_swap_max", report.m_swap_max},
      {"stalled", report.stalled},
      {"initial_qjsd", report.trace.initial_qjsd},
      {"trace", trace_json(report.trace, report.assignment)},
      {"per_beta", per_beta},
  };
}

std::string bound_csv_header() {
  return "circuit,device,num_qubits,ig_edges,gate_count,ged,assignment_path,"
         "u_swap,beta_star,m_swap_max,stalled\n";
}

std::string bound_csv_row(const BoundReport& report, const Circuit& circuit,
                          const DeviceSpec& device, const InteractionGraph& ig) {
  std::ostringstream out;
  out << csv_field(circuit.name) << ',' << csv_field(device.name) << ','
      << ig.graph.num_vertices() << ',' << ig.graph.num_edges() << ','
      << ig.gate_count() << ',' << report.ged << ','
      << to_string(report.assignment_path) << ',' << report.u_swap << ','
      << format_real(report.beta_star.value()) << ',' << report.m_swap_max
      << ',' << (report.stalled ? "true" : "false") << '\n';
  return out.str();
}

std::string sweep_csv(std::span<const BetaResult> per_beta) {
  std::string out = "beta,swaps,stalled\n";
  for (const BetaResult& r : per_beta) {
    out += format_real(r.beta.value()) + "," + std::to_string(r.swaps) + "," +
           (r.stalled ? "true" : "false") + "\n";
  }
  return out;
}

std::string entropy_curve_csv(std::span<const EntropyPoint> curve) {
  std::string out = "beta,entropy\n";
  for (const EntropyPoint& p : curve) {
    out += format_real(p.beta) + "," + format_real(p.entropy) + "\n";
  }
  return out;
}

std::vector<ManifestEntry> parse_manifest(std::string_view text,
                                          const std::string& base_dir) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed manifest JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("entries") ||
      !doc["entries"].is_array()) {
    throw ParseError("manifest must be an object with an \"entries\" array");
  }
  auto resolve = [&](const std::string& p) {
    return p.empty() || p.front() == '/' ? p : base_dir + "/" + p;
  };
  std::vector<ManifestEntry> entries;
  for (const json& item : doc["entries"]) {
    if (!item.is_object() || !item.contains("circuit") ||
        !item.contains("device") || !item["circuit"].is_string() ||
        !item["device"].is_string()) {
      throw ParseError("manifest entries need string \"circuit\" and \"device\"");
    }
    entries.push_back({resolve(item["circuit"].get<std::string>()),
                       resolve(item["device"].get<std::string>())});
  }
  return entries;
}

BenchRow bench_row(const Circuit& circuit, const DeviceSpec& device,
                   const BenchOptions& options) {
  BenchRow row;
  row.benchmark = circuit.name;
  row.device = device.name;
  try {
    const InteractionGraph ig = interaction_graph(circuit);
    row.ig_nodes = ig.graph.num_vertices();
    row.ig_edges = ig.graph.num_edges();
    row.gate_count = ig.gate_count();

    auto start = std::chrono::steady_clock::now();
    const AssignmentResult placement =
        assign_qubits(ig, device.coupling, options.bound.assignment);
    row.assign_ms = elapsed_ms(start);

    start = std::chrono::steady_clock::now();
    const BoundReport report = compute_bound(ig, placement, options.bound);
    row.sweep_ms = elapsed_ms(start);

    row.ged = report.ged;
    row.assignment_path = to_string(report.assignment_path);
    row.u_swap = report.u_swap;
    row.beta_star = report.beta_star.value();
    row.m_swap_max = report.m_swap_max;
    row.stalled = report.stalled;

    if (options.run_oracle && ig.graph.num_vertices() <= kOracleMaxQubits) {
      start = std::chrono::steady_clock::now();
      row.oracle = brute_force_min_swaps(ig.graph, placement.assignment);
      row.oracle_ms = elapsed_ms(start);
    }
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

std::vector<BenchRow> run_bench(std::span<const ManifestEntry> manifest,
                                const BenchOptions& options) {
  auto one = [&](const ManifestEntry& entry) {
    try {
      return bench_row(load_circuit(entry.circuit_path),
                       load_device(entry.device_path), options);
    } catch (const std::exception& e) {
      BenchRow row;
      row.benchmark = entry.circuit_path;
      row.device = entry.device_path;
      row.error = e.what();
      return row;
    }
  };
  std::vector<BenchRow> rows(manifest.size());
  const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
  for (std::size_t start = 0; start < manifest.size(); start += jobs) {
    const std::size_t stop = std::min(manifest.size(), start + jobs);
    std::vector<std::future<BenchRow>> batch;
    for (std::size_t i = start; i < stop; ++i) {
      batch.push_back(std::async(jobs > 1 ? std::launch::async
                                          : std::launch::deferred,
                                 one, std::cref(manifest[i])));
    }
    for (std::size_t i = start; i < stop; ++i) rows[i] = batch[i - start].get();
  }
  return rows;
}

std::string bench_csv(std::span<const BenchRow> rows, bool timings) {
  double u_sum = 0, m_sum = 0, o_sum = 0;
  for (const BenchRow& r : rows) {
    if (!r.error.empty()) continue;
    u_sum += static_cast<double>(r.u_swap);
    m_sum += static_cast<double>(r.m_swap_max);
    if (r.oracle) o_sum += static_cast<double>(*r.oracle);
  }
  auto normalized = [](double v, double sum) {
    return sum > 0 ? format_real(v / sum) : std::string("0");
  };

  std::string out =
      "benchmark,device,ig_nodes,ig_edges,gate_count,ged,assignment_path,"
      "u_swap,beta_star,m_swap_max,oracle,u_swap_norm,m_swap_max_norm,"
      "oracle_norm,stalled";
  if (timings) out += ",assign_ms,sweep_ms,oracle_ms";
  out += ",error\n";
  for (const BenchRow& r : rows) {
    std::ostringstream line;
    line << csv_field(r.benchmark) << ',' << csv_field(r.device) << ',';
    if (r.error.empty()) {
      line << r.ig_nodes << ',' << r.ig_edges << ',' << r.gate_count << ','
           << r.ged << ',' << r.assignment_path << ',' << r.u_swap << ','
           << format_real(r.beta_star) << ',' << r.m_swap_max << ','
           << (r.oracle ? std::to_string(*r.oracle) : "") << ','
           << normalized(static_cast<double>(r.u_swap), u_sum) << ','
           << normalized(static_cast<double>(r.m_swap_max), m_sum) << ','
           << (r.oracle ? normalized(static_cast<double>(*r.oracle), o_sum) : "")
           << ',' << (r.stalled ? "true" : "false");
      if (timings) {
        line << ',' << format_real(r.assign_ms) << ','
             << format_real(r.sweep_ms) << ','
             << (r.oracle ? format_real(r.oracle_ms) : "");
      }
      line << ",\n";
    } else {
      line << ",,,,,,,,,,,,";
      if (timings) line << ",,,";
      line << ',' << csv_field(r.error) << '\n';
    }
    out += line.str();
  }
  return out;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw ValidationError("pearson: columns differ in length");
  }
  const auto n = static_cast<double>(x.size());
  if (x.size() < 2) return std::nan("");
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return std::nan("");
  return sxy / std::sqrt(sxx * syy);
}

BenchSummary summarize_bench(std::span<const BenchRow> rows) {
  BenchSummary s;
  s.rows = rows.size();
  s.beta_histogram.assign(11, 0);
  const BetaGrid standard_grid = BetaGrid::standard();
  const std::vector<BetaValue>& grid = standard_grid.values();

  std::vector<const BenchRow*> ok;
  bool all_have_oracle = true;
  for (const BenchRow& r : rows) {
    if (!r.error.empty()) {
      ++s.errors;
      continue;
    }
    ok.push_back(&r);
    if (r.stalled) ++s.stalled;
    if (!r.oracle) all_have_oracle = false;
    if (r.oracle && !r.stalled &&
        (r.u_swap > *r.oracle || *r.oracle > r.m_swap_max)) {
      ++s.sandwich_violations;
    }
    if (r.assignment_path == to_string(AssignmentPath::kIsomorphism)) continue;
    ++s.routed_rows;
    const bool on_grid =
        std::any_of(grid.begin(), grid.end(),
                    [&](BetaValue b) { return b.value() == r.beta_star; });
    if (!on_grid) s.beta_star_in_grid = false;
    const int decade = static_cast<int>(std::floor(std::log10(r.beta_star) + 1e-9));
    if (decade >= -5 && decade <= 5) ++s.beta_histogram[static_cast<std::size_t>(decade + 5)];
    if (r.beta_star >= 1e-5 && r.beta_star <= 1e-3) ++s.high_temperature;
  }

  std::vector<std::vector<double>> columns(all_have_oracle && !ok.empty() ? 3 : 2);
  for (const BenchRow* r : ok) {
    columns[0].push_back(static_cast<double>(r->u_swap));
    columns[1].push_back(static_cast<double>(r->m_swap_max));
    if (columns.size() == 3) columns[2].push_back(static_cast<double>(*r->oracle));
  }
  s.correlation_labels = {"u_swap", "m_swap_max"};
  if (columns.size() == 3) s.correlation_labels.push_back("oracle");
  s.correlation.assign(columns.size(), std::vector<double>(columns.size()));
  for (std::size_t i = 0; i < columns.size(); ++i)
    for (std::size_t j = 0; j < columns.size(); ++j)
      s.correlation[i][j] = pearson(columns[i], columns[j]);
  return s;
}

json bench_summary_json(const BenchSummary& s) {
  json matrix = json::array();
  for (const auto& row : s.correlation) {
    json r = json::array();
    for (double v : row) {
      if (std::isnan(v)) r.push_back(nullptr);
      else r.push_back(v);
    }
    matrix.push_back(r);
  }
  json histogram = json::array();
  for (std::size_t i = 0; i < s.beta_histogram.size(); ++i) {
    histogram.push_back({{"decade", static_cast<int>(i) - 5},
                         {"count", s.beta_histogram[i]}});
  }
  return {{"rows", s.rows},
          {"errors", s.errors},
          {"stalled", s.stalled},
          {"sandwich_violations", s.sandwich_violations},
          {"pearson", {{"labels", s.correlation_labels}, {"matrix", matrix}}},
          {"beta_star_histogram", histogram},
          {"routed_rows", s.routed_rows},
          {"high_temperature_count", s.high_temperature},
          {"high_temperature_fraction",
           s.routed_rows ? static_cast<double>(s.high_temperature) /
                               static_cast<double>(s.routed_rows)
                         : 0.0},
          {"beta_star_in_grid", s.beta_star_in_grid}};
}

}  // namespace swapbound
