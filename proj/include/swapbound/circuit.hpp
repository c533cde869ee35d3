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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "swapbound/graph.hpp"

namespace swapbound {

/// Two-qubit gate skeleton of a circuit. Single-qubit gates are never stored.
struct Circuit {
  std::string name;
  std::size_t num_qubits = 0;
  /// Unordered qubit pairs in program order; repeats are kept.
  std::vector<Edge> two_qubit_gates;
};

/// Unweighted interaction graph plus how many gates act on each pair.
struct InteractionGraph {
  Graph graph;
  std::map<Edge, std::size_t> multiplicity;

  /// Total number of two-qubit gates (sum of multiplicities).
  std::size_t gate_count() const;
};

struct DeviceSpec {
  std::string name;
  std::size_t num_qubits = 0;
  Graph coupling;
};

/// Circuit JSON: {"name": str, "qubits": int, "gates": [[i, j], ...]}.
/// "name" is optional.
Circuit parse_circuit_json(std::string_view text);

/// OpenQASM 2.0 subset: one qreg; cx/cz/swap are kept as two-qubit gates and
/// every other statement is skipped.
Circuit parse_circuit_qasm_subset(std::string_view text);

/// Device JSON: {"name": str, "num_qubits": int, "edges": [[u, v], ...]}.
/// Rejects disconnected coupling graphs.
DeviceSpec parse_device(std::string_view text);
std::string serialize_device(const DeviceSpec& device);
std::string serialize_circuit_json(const Circuit& circuit);

InteractionGraph interaction_graph(const Circuit& circuit);
/// Interaction graph with unit multiplicity on every edge of `g`.
InteractionGraph interaction_graph(const Graph& g);

/// Reads a file, dispatching on extension (.qasm uses the QASM reader).
Circuit load_circuit(const std::string& path);
DeviceSpec load_device(const std::string& path);

}  // namespace swapbound
