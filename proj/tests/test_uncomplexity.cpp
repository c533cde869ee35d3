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

#include <cmath>
#include <random>
#include <variant>
#include <vector>

#include "doctest.h"
#include "support.hpp"
#include "swapbound/assignment.hpp"
#include "swapbound/errors.hpp"
#include "swapbound/instances.hpp"
#include "swapbound/oracle.hpp"
#include "swapbound/uncomplexity.hpp"

using namespace swapbound;
using doctest::Approx;

namespace {

// qjsd(I/4, gibbs(P4, 0.7)) from tests/oracles/spectral_values.py.
constexpr double kEdgelessVsP4 = 0.07381310403163721;

Assignment star_on_path() {
  return Assignment(path_graph(4), {0, 1, 2, 3}, {1, 0, 2, 3});
}

std::size_t count_swaps(const AlgoTrace& t) {
  std::size_t n = 0;
  for (const auto& ev : t.steps) n += std::holds_alternative<SwapEvent>(ev);
  return n;
}

std::size_t count_erased(const AlgoTrace& t) {
  std::size_t n = 0;
  for (const auto& ev : t.steps) {
    if (const auto* e = std::get_if<EraseEvent>(&ev)) n += e->edges.size();
  }
  return n;
}

}  // namespace

TEST_CASE("beta grid") {
  const BetaGrid grid = BetaGrid::standard();
  REQUIRE(grid.size() == 99);
  CHECK(grid.values().front().value() == 1e-5);
  CHECK(grid.values().back().value() == 9e5);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    CHECK(grid.values()[i - 1] < grid.values()[i]);
  }
  CHECK_THROWS_AS(BetaGrid({BetaValue(1.0), BetaValue(1.0)}), ValidationError);
  CHECK_THROWS_AS(BetaGrid({}), ValidationError);
}

TEST_CASE("trivial edge removal") {
  const Graph p4 = path_graph(4);
  const Assignment id = testing::identity_assignment(p4, 4);
  CHECK(remove_trivial_edges(p4, id).num_edges() == 0);
  CHECK(remove_trivial_edges(complete_graph(4), id) ==
        Graph(4, {{0, 2}, {1, 3}, {0, 3}}));
  CHECK(remove_trivial_edges(Graph(4), id) == Graph(4));
}

TEST_CASE("aligned qjsd") {
  const Graph p4 = path_graph(4);
  const Assignment id = testing::identity_assignment(p4, 4);
  CHECK(aligned_qjsd(p4, id, BetaValue(0.7)) <= kIsoTolerance);
  CHECK(aligned_qjsd(Graph(4), id, BetaValue(0.7)) ==
        Approx(kEdgelessVsP4).epsilon(1e-12));

  // The region in the logical frame tracks the placement.
  const Assignment moved = star_on_path();
  CHECK(region_in_ig_frame(moved) == Graph(4, {{0, 1}, {0, 2}, {2, 3}}));
  const Graph star = star_graph(3);
  const BetaValue b(0.3);
  const DensityMatrix ig_state = gibbs_state(star, b);
  const DensityMatrix cg_state = gibbs_state(region_in_ig_frame(moved), b);
  CHECK(aligned_qjsd(star, moved, b) == Approx(qjsd(cg_state, ig_state)));
}

TEST_CASE("isomorphic placements need no swaps") {
  const Graph p4 = path_graph(4);
  const Assignment id = testing::identity_assignment(p4, 4);
  const BetaGrid grid = BetaGrid::standard();
  for (const BetaValue& b : grid.values()) {
    const UncomplexityRun run = swap_uncomplexity(interaction_graph(p4), id, b);
    CHECK(run.swaps == 0);
    CHECK_FALSE(run.trace.stalled);
  }
  // At beta = 0 both states are I/n; the graph-level check still routes.
  const UncomplexityRun hot = swap_uncomplexity(
      interaction_graph(complete_graph(4)), id, BetaValue(0.0));
  CHECK(hot.swaps > 0);
}

TEST_CASE("small routing instances") {
  const InteractionGraph star = interaction_graph(star_graph(3));
  for (double beta : {1e-5, 1e-4, 1e-3}) {
    CHECK(swap_uncomplexity(star, star_on_path(), BetaValue(beta)).swaps <= 1);
  }
  const InteractionGraph k4 = interaction_graph(complete_graph(4));
  const Assignment id = testing::identity_assignment(path_graph(4), 4);
  CHECK(beta_sweep(k4, id, BetaGrid::standard()).min_swaps <= 3);
  const SweepResult s = beta_sweep(star, star_on_path(), BetaGrid::standard());
  CHECK(s.min_swaps == 1);
}

TEST_CASE("sweep bookkeeping") {
  const Graph p4 = path_graph(4);
  const Assignment id = testing::identity_assignment(p4, 4);
  const SweepResult iso =
      beta_sweep(interaction_graph(p4), id, BetaGrid::standard());
  CHECK(iso.min_swaps == 0);
  CHECK(iso.beta_star.value() == 1e-5);
  CHECK(iso.per_beta.size() == 99);

  const InteractionGraph k4 = interaction_graph(complete_graph(4));
  const SweepResult serial = beta_sweep(k4, id, BetaGrid::standard());
  const SweepResult parallel = beta_sweep(k4, id, BetaGrid::standard(), {}, 4);
  CHECK(serial.beta_star == parallel.beta_star);
  CHECK(serial.min_swaps == parallel.min_swaps);
  REQUIRE(serial.per_beta.size() == parallel.per_beta.size());
  for (std::size_t i = 0; i < serial.per_beta.size(); ++i) {
    CHECK(serial.per_beta[i].swaps == parallel.per_beta[i].swaps);
    CHECK(serial.per_beta[i].beta == parallel.per_beta[i].beta);
  }
  for (const auto& r : serial.per_beta) {
    if (!r.stalled) CHECK(r.swaps >= serial.min_swaps);
    if (!r.stalled && r.swaps == serial.min_swaps) {
      CHECK(serial.beta_star <= r.beta);
    }
  }

  UncomplexityOptions none;
  none.stall_budget = 0;
  try {
    beta_sweep(interaction_graph(complete_graph(5)),
               testing::identity_assignment(path_graph(5), 5),
               BetaGrid({BetaValue(1e-5), BetaValue(1e5)}), none);
  } catch (const SweepError& e) {
    CHECK(e.partial().size() == 2);
  }
}

TEST_CASE("trace invariants on random instances") {
  std::mt19937_64 rng(41);
  const BetaGrid grid = BetaGrid::standard();
  for (int trial = 0; trial < 60; ++trial) {
    const RandomInstance inst = random_instance(rng, InstanceShape{}, trial);
    const InteractionGraph ig = interaction_graph(inst.circuit);
    const AssignmentResult placed = assign_qubits(ig, inst.device.coupling);
    const Assignment& a = placed.assignment;
    const std::size_t budget = max_swap_bound(ig, a);
    const std::size_t remaining = remove_trivial_edges(ig.graph, a).num_edges();
    const std::size_t cap = budget + remaining * a.subgraph().num_edges();
    for (std::size_t i = 0; i < grid.size(); i += 7) {
      const BetaValue b = grid.values()[i];
      const UncomplexityRun run = swap_uncomplexity(ig, a, b);
      const AlgoTrace& t = run.trace;
      CHECK(count_swaps(t) == run.swaps);
      CHECK(t.swap_count == run.swaps);
      CHECK(run.swaps <= cap);
      if (!t.stalled) {
        CHECK(count_erased(t) == remaining);
      }
      for (const auto& ev : t.steps) {
        if (const auto* s = std::get_if<SwapEvent>(&ev)) {
          if (!s->forced) {
            CHECK(s->qjsd_after < s->qjsd_before - kImprovementTolerance);
          }
        }
        if (const auto* e = std::get_if<EraseEvent>(&ev)) {
          CHECK_FALSE(e->edges.empty());
        }
      }
      const UncomplexityRun again = swap_uncomplexity(ig, a, b);
      CHECK(again.swaps == run.swaps);
      CHECK(again.trace.steps.size() == t.steps.size());
    }
  }
}

TEST_CASE("bound report") {
  const InteractionGraph k4 = interaction_graph(complete_graph(4));
  const BoundReport r = compute_bound(k4, path_graph(4));
  CHECK(r.m_swap_max == 12);
  CHECK(r.u_swap <= 3);
  CHECK_FALSE(r.stalled);
  CHECK(r.per_beta.size() == 99);

  BoundOptions single;
  single.beta = BetaValue(0.01);
  const BoundReport one = compute_bound(k4, path_graph(4), single);
  CHECK(one.per_beta.size() == 1);
  CHECK(one.beta_star.value() == 0.01);

  const BoundReport iso = compute_bound(interaction_graph(path_graph(3)), path_graph(4));
  CHECK(iso.u_swap == 0);
  CHECK(iso.ged == 0);
  CHECK(iso.trace.initial_qjsd <= kIsoTolerance);
}
