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
#include <cstdint>
#include <random>
#include <string>

#include "swapbound/circuit.hpp"
#include "swapbound/graph.hpp"

namespace swapbound {

/// Random spanning tree plus each remaining pair with probability
/// `extra_edge_probability`.
Graph random_connected_graph(std::mt19937_64& rng, std::size_t n,
                             double extra_edge_probability);

/// G(n, p) with at least one edge when n >= 2.
Graph random_graph(std::mt19937_64& rng, std::size_t n, double p);

struct RandomInstance {
  std::string name;
  Circuit circuit;
  DeviceSpec device;
};

struct InstanceShape {
  std::size_t ig_min = 3;
  std::size_t ig_max = 5;
  std::size_t cg_min = 5;
  std::size_t cg_max = 7;
  double ig_edge_probability = 0.5;
  double cg_extra_edge_probability = 0.2;
  std::size_t max_multiplicity = 3;
};

/// Circuit whose interaction graph is G(k, p) with random gate multiplicities,
/// paired with a random connected device.
RandomInstance random_instance(std::mt19937_64& rng, const InstanceShape& shape,
                               std::size_t index);

}  // namespace swapbound
