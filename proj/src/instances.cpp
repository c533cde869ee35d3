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

#include "swapbound/instances.hpp"

#include <vector>

namespace swapbound {

Graph random_connected_graph(std::mt19937_64& rng, std::size_t n,
                             double extra_edge_probability) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    edges.emplace_back(v, std::uniform_int_distribution<Vertex>(0, v - 1)(rng));
  }
  std::bernoulli_distribution extra(extra_edge_probability);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (extra(rng)) edges.emplace_back(a, b);
  return Graph(n, edges);
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(p);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (coin(rng)) edges.emplace_back(a, b);
  if (edges.empty() && n >= 2) {
    Vertex a = std::uniform_int_distribution<Vertex>(0, n - 1)(rng);
    Vertex b = std::uniform_int_distribution<Vertex>(0, n - 2)(rng);
    edges.emplace_back(a, b >= a ? b + 1 : b);
  }
  return Graph(n, edges);
}

RandomInstance random_instance(std::mt19937_64& rng, const InstanceShape& shape,
                               std::size_t index) {
  const std::size_t k =
      std::uniform_int_distribution<std::size_t>(shape.ig_min, shape.ig_max)(rng);
  const std::size_t n =
      std::uniform_int_distribution<std::size_t>(shape.cg_min, shape.cg_max)(rng);
  RandomInstance out;
  out.name = "random_" + std::to_string(index);
  out.device.name = "random_device_" + std::to_string(index);
  out.device.num_qubits = n;
  out.device.coupling =
      random_connected_graph(rng, n, shape.cg_extra_edge_probability);

  const Graph ig = random_graph(rng, k, shape.ig_edge_probability);
  out.circuit.name = out.name;
  out.circuit.num_qubits = k;
  std::uniform_int_distribution<std::size_t> repeats(1, shape.max_multiplicity);
  for (const Edge& e : ig.edges()) {
    const std::size_t times = repeats(rng);
    for (std::size_t i = 0; i < times; ++i) out.circuit.two_qubit_gates.push_back(e);
  }
  return out;
}

}  // namespace swapbound
