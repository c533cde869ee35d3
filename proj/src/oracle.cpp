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

#include "swapbound/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "swapbound/assignment.hpp"
#include "swapbound/errors.hpp"

namespace swapbound {

namespace {

// State key: 4 bits per logical qubit's slot, then the unexecuted-edge mask.
// k <= 8 and |E| <= 28 fit in 64 bits.
using StateKey = std::uint64_t;

class RoutingSearch {
 public:
  RoutingSearch(const Graph& ig, const Graph& region)
      : k_(ig.num_vertices()), edges_(ig.edges()) {
    adjacent_.assign(k_ * k_, 0);
    for (const Edge& e : region.edges()) {
      adjacent_[e.u * k_ + e.v] = 1;
      adjacent_[e.v * k_ + e.u] = 1;
    }
    swaps_ = region.edges();
  }

  // Multi-source BFS from every start placement. Returns the optimum and the
  // index of the start it came from.
  std::pair<std::size_t, std::size_t> solve(
      const std::vector<std::vector<Vertex>>& starts) const {
    std::unordered_map<StateKey, std::uint32_t> origin;
    std::vector<StateKey> frontier;
    const std::uint32_t all = edges_.empty()
                                  ? 0
                                  : static_cast<std::uint32_t>(
                                        (std::uint64_t{1} << edges_.size()) - 1);
    for (std::size_t s = 0; s < starts.size(); ++s) {
      const std::uint32_t remaining = close(starts[s], all);
      if (remaining == 0) return {0, s};
      const StateKey key = encode(starts[s], remaining);
      if (origin.emplace(key, static_cast<std::uint32_t>(s)).second) {
        frontier.push_back(key);
      }
    }
    std::vector<Vertex> slots(k_);
    for (std::size_t depth = 1; !frontier.empty(); ++depth) {
      std::vector<StateKey> next;
      for (StateKey key : frontier) {
        const std::uint32_t from = origin.at(key);
        std::uint32_t remaining = decode(key, slots);
        for (const Edge& swap : swaps_) {
          std::vector<Vertex> moved = slots;
          for (Vertex& s : moved) {
            if (s == swap.u) s = swap.v;
            else if (s == swap.v) s = swap.u;
          }
          const std::uint32_t left = close(moved, remaining);
          if (left == 0) return {depth, from};
          const StateKey child = encode(moved, left);
          if (origin.emplace(child, from).second) next.push_back(child);
        }
      }
      frontier = std::move(next);
    }
    throw ValidationError("routing search exhausted without completing");
  }

 private:
  std::uint32_t close(const std::vector<Vertex>& slots,
                      std::uint32_t remaining) const {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if ((remaining >> i & 1u) &&
          adjacent_[slots[edges_[i].u] * k_ + slots[edges_[i].v]]) {
        remaining &= ~(std::uint32_t{1} << i);
      }
    }
    return remaining;
  }

  StateKey encode(const std::vector<Vertex>& slots,
                  std::uint32_t remaining) const {
    StateKey key = remaining;
    for (std::size_t q = 0; q < k_; ++q) {
      key |= static_cast<StateKey>(slots[q]) << (32 + 4 * q);
    }
    return key;
  }

  std::uint32_t decode(StateKey key, std::vector<Vertex>& slots) const {
    for (std::size_t q = 0; q < k_; ++q) slots[q] = (key >> (32 + 4 * q)) & 0xF;
    return static_cast<std::uint32_t>(key & 0xFFFFFFFFu);
  }

  std::size_t k_;
  std::vector<Edge> edges_;
  std::vector<Edge> swaps_;
  std::vector<std::uint8_t> adjacent_;
};

void check_guard(const Graph& ig) {
  if (ig.num_vertices() > kOracleMaxQubits) {
    throw SizeGuardError("brute-force oracle is limited to " +
                         std::to_string(kOracleMaxQubits) + " qubits, got " +
                         std::to_string(ig.num_vertices()));
  }
}

}  // namespace

std::size_t brute_force_min_swaps(const Graph& ig, const Assignment& a) {
  check_guard(ig);
  if (ig.num_vertices() != a.size()) {
    throw ValidationError("assignment size does not match the IG");
  }
  return RoutingSearch(ig, a.subgraph()).solve({a.slots()}).first;
}

OracleOptimum brute_force_over_assignments(const Graph& ig, const Graph& cg) {
  check_guard(ig);
  const std::size_t k = ig.num_vertices();
  EnumerationResult classes = enumerate_connected_subgraph_classes(cg, k);

  std::vector<std::vector<Vertex>> starts;
  std::vector<Vertex> perm(k);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    starts.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::optional<OracleOptimum> best;
  for (const SubgraphClass& cls : classes.classes) {
    const Graph region = induced_subgraph(cg, cls.representative_nodes);
    auto [swaps, start] = RoutingSearch(ig, region).solve(starts);
    if (!best || swaps < best->swaps) {
      best = OracleOptimum{swaps,
                           Assignment(cg, cls.representative_nodes, starts[start])};
    }
    if (best->swaps == 0) break;
  }
  return *best;
}

}  // namespace swapbound
