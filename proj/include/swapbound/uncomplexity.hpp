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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "swapbound/assignment.hpp"
#include "swapbound/channels.hpp"
#include "swapbound/circuit.hpp"
#include "swapbound/errors.hpp"
#include "swapbound/placement.hpp"
#include "swapbound/spectral.hpp"

namespace swapbound {

/// Minimum qJSD decrease for a swap to count as an improvement.
inline constexpr double kImprovementTolerance = 1e-12;

struct SwapEvent {
  Transposition swap;
  double qjsd_before = 0.0;
  double qjsd_after = 0.0;
  /// Applied by the stall policy rather than because it improved qJSD.
  bool forced = false;
};

struct EraseEvent {
  std::vector<Edge> edges;  // IG labels
};

struct StallEvent {
  std::string reason;
};

using TraceEvent = std::variant<SwapEvent, EraseEvent, StallEvent>;

struct AlgoTrace {
  BetaValue beta;
  std::vector<TraceEvent> steps;
  std::size_t swap_count = 0;
  bool stalled = false;
  double initial_qjsd = 0.0;
};

/// The 99 inverse temperatures A * 10^a, A in 1..9, a in -5..5, ascending.
class BetaGrid {
 public:
  /// Throws ValidationError unless `values` is non-empty and strictly
  /// increasing.
  explicit BetaGrid(std::vector<BetaValue> values);
  static BetaGrid standard();

  const std::vector<BetaValue>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<BetaValue> values_;
};

struct UncomplexityOptions {
  double iso_tolerance = kIsoTolerance;
  double improvement_tolerance = kImprovementTolerance;
  /// Forced swaps allowed when nothing improves; defaults to the instance's
  /// maximal bound.
  std::optional<std::size_t> stall_budget;
};

/// IG without the edges whose endpoints already sit on adjacent nodes.
Graph remove_trivial_edges(const Graph& ig, const Assignment& a);

/// The region's coupling graph expressed on logical (IG) labels.
Graph region_in_ig_frame(const Assignment& a);

/// qJSD between the Gibbs states of the remaining IG and of the region
/// relabelled into the IG frame.
double aligned_qjsd(const Graph& ig_remaining, const Assignment& a,
                    BetaValue beta);

struct UncomplexityRun {
  std::size_t swaps = 0;
  AlgoTrace trace;
};

/// qJSD-guided descent over nearest-neighbour swaps with edge erasure.
/// Never throws on stalls; check trace.stalled instead.
UncomplexityRun swap_uncomplexity(const InteractionGraph& ig,
                                  const Assignment& a, BetaValue beta,
                                  const UncomplexityOptions& options = {});

struct BetaResult {
  BetaValue beta;
  std::size_t swaps = 0;
  bool stalled = false;
};

struct SweepResult {
  BetaValue beta_star;
  std::size_t min_swaps = 0;
  std::vector<BetaResult> per_beta;
  /// Trace of the run at beta_star.
  AlgoTrace best_trace;
};

class SweepError : public Error {
 public:
  SweepError(const std::string& what, std::vector<BetaResult> partial)
      : Error(what), partial_(std::move(partial)) {}
  const std::vector<BetaResult>& partial() const { return partial_; }

 private:
  std::vector<BetaResult> partial_;
};

/// Minimum swap count over the grid, ignoring stalled runs; ties go to the
/// smallest beta. `jobs` > 1 evaluates grid points concurrently.
SweepResult beta_sweep(const InteractionGraph& ig, const Assignment& a,
                       const BetaGrid& grid,
                       const UncomplexityOptions& options = {},
                       std::size_t jobs = 1);

struct BoundReport {
  std::size_t u_swap = 0;
  BetaValue beta_star;
  std::size_t m_swap_max = 0;
  std::size_t ged = 0;
  AssignmentPath assignment_path = AssignmentPath::kIsomorphism;
  Assignment assignment;
  AlgoTrace trace;
  bool stalled = false;
  /// Filled by sweeps; a single-beta run holds one entry.
  std::vector<BetaResult> per_beta;
};

struct BoundOptions {
  AssignmentOptions assignment;
  UncomplexityOptions uncomplexity;
  /// Single inverse temperature instead of a sweep.
  std::optional<BetaValue> beta;
  BetaGrid grid = BetaGrid::standard();
  std::size_t jobs = 1;
};

/// Assignment, lower bound and maximal bound for one circuit/device pair.
/// A sweep in which every run stalls yields stalled = true with the
/// smallest stalled count rather than an exception.
BoundReport compute_bound(const InteractionGraph& ig, const Graph& cg,
                          const BoundOptions& options = {});
BoundReport compute_bound(const InteractionGraph& ig,
                          const AssignmentResult& placement,
                          const BoundOptions& options = {});

}  // namespace swapbound
