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

#include "swapbound/graph.hpp"
#include "swapbound/placement.hpp"

namespace swapbound {

/// Largest IG the exhaustive search accepts.
inline constexpr std::size_t kOracleMaxQubits = 8;

/// Fewest nearest-neighbour swaps inside the assigned region after which
/// every IG edge has, at some point, sat on adjacent nodes. Breadth-first
/// search over (placement, unexecuted edges); executable edges close for
/// free before each branch.
/// Throws SizeGuardError for IGs above kOracleMaxQubits.
std::size_t brute_force_min_swaps(const Graph& ig, const Assignment& a);

struct OracleOptimum {
  std::size_t swaps = 0;
  Assignment initial;
};

/// Minimum of brute_force_min_swaps over every connected region class of
/// the coupling graph and every initial placement on it.
OracleOptimum brute_force_over_assignments(const Graph& ig, const Graph& cg);

}  // namespace swapbound
