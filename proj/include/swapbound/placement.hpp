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
#include <vector>

#include "swapbound/graph.hpp"

namespace swapbound {

/// Placement of k logical qubits onto a connected k-node region of a
/// coupling graph.
///
/// The region's nodes are numbered by "slot" 0..k-1 in the order given by
/// nodes(); subgraph() is the coupling graph induced on them in slot labels.
/// Logical qubit q sits in slot slot_of(q), i.e. physical node
/// nodes()[slot_of(q)].
class Assignment {
 public:
  Assignment() = default;
  /// Throws ValidationError unless `nodes` are distinct coupling vertices,
  /// `slot_of` is a permutation of [0, nodes.size()) and the induced region
  /// is connected.
  Assignment(const Graph& coupling, std::vector<Vertex> nodes,
             std::vector<Vertex> slot_of);

  /// Same region, different logical placement.
  Assignment with_slots(std::vector<Vertex> slot_of) const;

  std::size_t size() const { return nodes_.size(); }
  const std::vector<Vertex>& nodes() const { return nodes_; }
  const Graph& subgraph() const { return subgraph_; }
  const std::vector<Vertex>& slots() const { return slot_of_; }
  Vertex slot_of(Vertex logical) const { return slot_of_[logical]; }
  Vertex logical_at(Vertex slot) const { return logical_at_[slot]; }
  Vertex physical_of(Vertex logical) const { return nodes_[slot_of_[logical]]; }
  /// Logical qubit -> coupling-graph vertex.
  std::vector<Vertex> ig_to_cg() const;

  /// True when logical qubits a and b sit on adjacent nodes.
  bool adjacent(Vertex a, Vertex b) const {
    return subgraph_.has_edge(slot_of_[a], slot_of_[b]);
  }

  friend bool operator==(const Assignment& a, const Assignment& b) {
    return a.nodes_ == b.nodes_ && a.slot_of_ == b.slot_of_;
  }

 private:
  std::vector<Vertex> nodes_;
  Graph subgraph_;
  std::vector<Vertex> slot_of_;
  std::vector<Vertex> logical_at_;
};

}  // namespace swapbound
