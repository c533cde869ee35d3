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

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "support.hpp"
#include "swapbound/errors.hpp"
#include "swapbound/instances.hpp"
#include "swapbound/oracle.hpp"
#include "swapbound/uncomplexity.hpp"

using namespace swapbound;

namespace {

Assignment random_assignment(std::mt19937_64& rng, const Graph& cg,
                             std::size_t k) {
  // Grow a random connected region, then place logical qubits at random.
  std::vector<Vertex> nodes{static_cast<Vertex>(rng() % cg.num_vertices())};
  while (nodes.size() < k) {
    std::vector<Vertex> frontier;
    for (Vertex v : nodes) {
      for (Vertex w : cg.neighbors(v)) {
        if (std::find(nodes.begin(), nodes.end(), w) == nodes.end() &&
            std::find(frontier.begin(), frontier.end(), w) == frontier.end()) {
          frontier.push_back(w);
        }
      }
    }
    nodes.push_back(frontier[rng() % frontier.size()]);
  }
  std::sort(nodes.begin(), nodes.end());
  return Assignment(cg, nodes, testing::random_permutation(rng, k));
}

}  // namespace

TEST_CASE("hand-checked optima") {
  const Graph p4 = path_graph(4);
  const Assignment id = testing::identity_assignment(p4, 4);
  CHECK(brute_force_min_swaps(p4, id) == 0);
  const Assignment star_start(p4, {0, 1, 2, 3}, {1, 0, 2, 3});
  CHECK(brute_force_min_swaps(star_graph(3), star_start) == 1);
  CHECK(brute_force_min_swaps(complete_graph(4), id) == 3);
}

TEST_CASE("optimum over all starts") {
  CHECK(brute_force_over_assignments(path_graph(3), path_graph(4)).swaps == 0);
  CHECK(brute_force_over_assignments(star_graph(3), path_graph(4)).swaps == 1);
  CHECK(brute_force_over_assignments(complete_graph(4), path_graph(4)).swaps == 3);
  const OracleOptimum best =
      brute_force_over_assignments(star_graph(3), path_graph(4));
  CHECK(brute_force_min_swaps(star_graph(3), best.initial) == 1);
}

TEST_CASE("size guard") {
  const Graph big = path_graph(9);
  CHECK_THROWS_AS(brute_force_min_swaps(big, testing::identity_assignment(big, 9)),
                  SizeGuardError);
  CHECK_THROWS_AS(brute_force_over_assignments(big, big), SizeGuardError);
}

TEST_CASE("breadth-first oracle matches iterative deepening") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 4 + rng() % 3;
    Graph cg = testing::graph_from_mask(n, rng() & rng());
    while (!is_connected(cg)) cg = testing::graph_from_mask(n, rng() & rng());
    const std::size_t k = 3 + rng() % (n - 2);
    const Graph ig = testing::graph_from_mask(k, rng());
    const Assignment a = random_assignment(rng, cg, k);
    const std::size_t bfs = brute_force_min_swaps(ig, a);
    CHECK(testing::iddfs_min_swaps(ig, a, bfs) == bfs);
    CHECK((bfs == 0) == (remove_trivial_edges(ig, a).num_edges() == 0));
  }
}

TEST_CASE("oracle is relabel invariant") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 4 + rng() % 3;
    Graph cg = testing::graph_from_mask(n, rng() & rng());
    while (!is_connected(cg)) cg = testing::graph_from_mask(n, rng() & rng());
    const std::size_t k = 3 + rng() % (n - 2);
    const Graph ig = testing::graph_from_mask(k, rng());
    const Assignment a = random_assignment(rng, cg, k);

    // Relabel the coupling graph and the logical qubits together.
    const auto cg_perm = testing::random_permutation(rng, n);
    const auto ig_perm = testing::random_permutation(rng, k);
    const Graph cg2 = relabel(cg, cg_perm);
    const Graph ig2 = relabel(ig, ig_perm);
    std::vector<Vertex> nodes2;
    for (Vertex v : a.nodes()) nodes2.push_back(cg_perm[v]);
    std::vector<Vertex> order(k);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::sort(order.begin(), order.end(),
              [&](Vertex x, Vertex y) { return nodes2[x] < nodes2[y]; });
    std::vector<Vertex> sorted_nodes(k), new_slot_of_old_slot(k);
    for (std::size_t i = 0; i < k; ++i) {
      sorted_nodes[i] = nodes2[order[i]];
      new_slot_of_old_slot[order[i]] = i;
    }
    std::vector<Vertex> slots2(k);
    for (Vertex q = 0; q < k; ++q) {
      slots2[ig_perm[q]] = new_slot_of_old_slot[a.slot_of(q)];
    }
    const Assignment a2(cg2, sorted_nodes, slots2);
    CHECK(brute_force_min_swaps(ig2, a2) == brute_force_min_swaps(ig, a));
  }
}

TEST_CASE("adding an interaction never helps") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 4 + rng() % 3;
    Graph cg = testing::graph_from_mask(n, rng() & rng());
    while (!is_connected(cg)) cg = testing::graph_from_mask(n, rng() & rng());
    const std::size_t k = 3 + rng() % (n - 2);
    const Graph ig = testing::graph_from_mask(k, rng());
    if (is_complete(ig)) continue;
    const Assignment a = random_assignment(rng, cg, k);
    std::vector<Edge> more = ig.edges();
    Vertex u = 0, v = 1;
    do {
      u = rng() % k;
      v = rng() % k;
    } while (u == v || ig.has_edge(u, v));
    more.emplace_back(u, v);
    CHECK(brute_force_min_swaps(Graph(k, more), a) >= brute_force_min_swaps(ig, a));
  }
}

TEST_CASE("maximal bound dominates the optimum") {
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 100; ++trial) {
    const RandomInstance inst = random_instance(rng, InstanceShape{}, trial);
    const InteractionGraph ig = interaction_graph(inst.circuit);
    const AssignmentResult placed = assign_qubits(ig, inst.device.coupling);
    CHECK(brute_force_min_swaps(ig.graph, placed.assignment) <=
          max_swap_bound(ig, placed.assignment));
  }
}
