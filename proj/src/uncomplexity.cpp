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

#include "swapbound/uncomplexity.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <limits>
#include <string>

namespace swapbound {

namespace {

// qJSD values closer than this are treated as tied between candidates.
constexpr double kTieTolerance = 1e-14;

std::vector<Vertex> logical_by_slot(const Assignment& a) {
  std::vector<Vertex> image(a.size());
  for (Vertex s = 0; s < a.size(); ++s) image[s] = a.logical_at(s);
  return image;
}

std::vector<Edge> executable_edges(const Graph& remaining, const Assignment& a) {
  std::vector<Edge> out;
  for (const Edge& e : remaining.edges())
    if (a.adjacent(e.u, e.v)) out.push_back(e);
  return out;
}

Graph without_edges(const Graph& g, const std::vector<Edge>& drop) {
  std::vector<Edge> keep;
  for (const Edge& e : g.edges())
    if (!std::binary_search(drop.begin(), drop.end(), e)) keep.push_back(e);
  return Graph(g.num_vertices(), keep);
}

}  // namespace

BetaGrid::BetaGrid(std::vector<BetaValue> values) : values_(std::move(values)) {
  if (values_.empty()) throw ValidationError("beta grid is empty");
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (!(values_[i - 1] < values_[i])) {
      throw ValidationError("beta grid must be strictly increasing");
    }
  }
}

BetaGrid BetaGrid::standard() {
  std::vector<BetaValue> values;
  for (int exponent = -5; exponent <= 5; ++exponent) {
    for (int mantissa = 1; mantissa <= 9; ++mantissa) {
      // Parsing "Ae±a" gives the double nearest the decimal value.
      const std::string text =
          std::to_string(mantissa) + "e" + std::to_string(exponent);
      values.emplace_back(std::strtod(text.c_str(), nullptr));
    }
  }
  return BetaGrid(std::move(values));
}

Graph remove_trivial_edges(const Graph& ig, const Assignment& a) {
  if (ig.num_vertices() != a.size()) {
    throw ValidationError("assignment size does not match the IG");
  }
  return without_edges(ig, executable_edges(ig, a));
}

Graph region_in_ig_frame(const Assignment& a) {
  return relabel(a.subgraph(), logical_by_slot(a));
}

double aligned_qjsd(const Graph& ig_remaining, const Assignment& a,
                    BetaValue beta) {
  if (ig_remaining.num_vertices() != a.size()) {
    throw ValidationError("assignment size does not match the IG");
  }
  return qjsd(gibbs_state(ig_remaining, beta),
              gibbs_state(region_in_ig_frame(a), beta));
}

UncomplexityRun swap_uncomplexity(const InteractionGraph& ig,
                                  const Assignment& a, BetaValue beta,
                                  const UncomplexityOptions& options) {
  if (ig.graph.num_vertices() != a.size()) {
    throw ValidationError("assignment size does not match the IG");
  }
  UncomplexityRun run;
  AlgoTrace& trace = run.trace;
  trace.beta = beta;

  // The region's spectrum is fixed; swaps only permute its basis.
  const DensityMatrix region_state = gibbs_state(a.subgraph(), beta);
  auto frame_state = [&](const Assignment& x) {
    return region_state.permuted(logical_by_slot(x));
  };

  trace.initial_qjsd = qjsd(gibbs_state(ig.graph, beta), frame_state(a));
  if (trace.initial_qjsd <= options.iso_tolerance &&
      ig.graph == region_in_ig_frame(a)) {
    return run;
  }

  // Trivial edges are dropped up front and are not measurement events.
  Graph remaining = remove_trivial_edges(ig.graph, a);
  Assignment current = a;
  auto erase_executable = [&] {
    std::vector<Edge> ready = executable_edges(remaining, current);
    if (ready.empty()) return false;
    remaining = without_edges(remaining, ready);
    trace.steps.push_back(EraseEvent{std::move(ready)});
    return true;
  };

  const std::vector<Edge>& candidates = a.subgraph().edges();
  std::size_t budget = options.stall_budget.value_or(max_swap_bound(ig, a));
  const std::size_t improving_cap = remaining.num_edges() * candidates.size();
  std::size_t improving = 0;
  DensityMatrix remaining_state = gibbs_state(remaining, beta);

  auto stall = [&](std::string reason) {
    trace.stalled = true;
    trace.steps.push_back(StallEvent{std::move(reason)});
  };

  while (true) {
    const double before = qjsd(remaining_state, frame_state(current));
    double best_after = std::numeric_limits<double>::infinity();
    const Edge* best_edge = nullptr;
    for (const Edge& e : candidates) {
      const Assignment next = apply_transposition(current, {e});
      const double after = qjsd(remaining_state, frame_state(next));
      if (best_edge == nullptr || after < best_after - kTieTolerance) {
        best_after = after;
        best_edge = &e;
      }
    }

    bool forced = false;
    if (best_edge == nullptr || best_after >= before - options.improvement_tolerance) {
      if (remaining.num_edges() == 0) break;
      if (erase_executable()) {
        remaining_state = gibbs_state(remaining, beta);
        continue;
      }
      if (budget == 0 || best_edge == nullptr) {
        stall("no improving swap and the stall budget is exhausted");
        break;
      }
      --budget;
      forced = true;
    } else if (improving++ >= improving_cap) {
      stall("improving-swap cap reached");
      break;
    }

    current = apply_transposition(current, {*best_edge});
    ++run.swaps;
    trace.steps.push_back(SwapEvent{{*best_edge}, before, best_after, forced});
    if (erase_executable()) remaining_state = gibbs_state(remaining, beta);
  }

  trace.swap_count = run.swaps;
  return run;
}

SweepResult beta_sweep(const InteractionGraph& ig, const Assignment& a,
                       const BetaGrid& grid, const UncomplexityOptions& options,
                       std::size_t jobs) {
  const auto& betas = grid.values();
  std::vector<UncomplexityRun> runs(betas.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < betas.size(); ++i) {
      runs[i] = swap_uncomplexity(ig, a, betas[i], options);
    }
  } else {
    for (std::size_t start = 0; start < betas.size(); start += jobs) {
      std::vector<std::future<UncomplexityRun>> batch;
      const std::size_t stop = std::min(betas.size(), start + jobs);
      for (std::size_t i = start; i < stop; ++i) {
        batch.push_back(std::async(std::launch::async, [&, i] {
          return swap_uncomplexity(ig, a, betas[i], options);
        }));
      }
      for (std::size_t i = start; i < stop; ++i) runs[i] = batch[i - start].get();
    }
  }

  SweepResult result;
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    result.per_beta.push_back(
        {betas[i], runs[i].swaps, runs[i].trace.stalled});
    if (runs[i].trace.stalled) continue;
    if (!best || runs[i].swaps < runs[*best].swaps) best = i;
  }
  if (!best) {
    throw SweepError("every run of the beta sweep stalled",
                     std::move(result.per_beta));
  }
  result.beta_star = betas[*best];
  result.min_swaps = runs[*best].swaps;
  result.best_trace = std::move(runs[*best].trace);
  return result;
}

BoundReport compute_bound(const InteractionGraph& ig,
                          const AssignmentResult& placement,
                          const BoundOptions& options) {
  BoundReport report;
  report.assignment = placement.assignment;
  report.ged = placement.ged;
  report.assignment_path = placement.path;
  report.m_swap_max = max_swap_bound(ig, placement.assignment);

  if (options.beta) {
    UncomplexityRun run = swap_uncomplexity(ig, placement.assignment,
                                            *options.beta, options.uncomplexity);
    report.u_swap = run.swaps;
    report.beta_star = *options.beta;
    report.stalled = run.trace.stalled;
    report.per_beta.push_back({*options.beta, run.swaps, run.trace.stalled});
    report.trace = std::move(run.trace);
    return report;
  }

  try {
    SweepResult sweep = beta_sweep(ig, placement.assignment, options.grid,
                                   options.uncomplexity, options.jobs);
    report.u_swap = sweep.min_swaps;
    report.beta_star = sweep.beta_star;
    report.trace = std::move(sweep.best_trace);
    report.per_beta = std::move(sweep.per_beta);
  } catch (const SweepError& e) {
    const BetaResult* least = &e.partial().front();
    for (const BetaResult& r : e.partial())
      if (r.swaps < least->swaps) least = &r;
    UncomplexityRun run = swap_uncomplexity(ig, placement.assignment,
                                            least->beta, options.uncomplexity);
    report.u_swap = run.swaps;
    report.beta_star = least->beta;
    report.stalled = true;
    report.trace = std::move(run.trace);
    report.per_beta = e.partial();
  }
  return report;
}

BoundReport compute_bound(const InteractionGraph& ig, const Graph& cg,
                          const BoundOptions& options) {
  return compute_bound(ig, assign_qubits(ig, cg, options.assignment), options);
}

}  // namespace swapbound
