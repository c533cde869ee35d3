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

#include "swapbound/placement.hpp"

#include <string>

#include "swapbound/errors.hpp"

namespace swapbound {

Assignment::Assignment(const Graph& coupling, std::vector<Vertex> nodes,
                       std::vector<Vertex> slot_of)
    : nodes_(std::move(nodes)),
      subgraph_(induced_subgraph(coupling, nodes_)) {
  if (!is_connected(subgraph_)) {
    throw ValidationError("assigned coupling region is not connected");
  }
  *this = with_slots(std::move(slot_of));
}

Assignment Assignment::with_slots(std::vector<Vertex> slot_of) const {
  if (slot_of.size() != nodes_.size()) {
    throw ValidationError("assignment covers " +
                          std::to_string(slot_of.size()) +
                          " logical qubits but the region has " +
                          std::to_string(nodes_.size()) + " nodes");
  }
  Assignment out;
  out.nodes_ = nodes_;
  out.subgraph_ = subgraph_;
  out.logical_at_.assign(nodes_.size(), nodes_.size());
  for (Vertex q = 0; q < slot_of.size(); ++q) {
    const Vertex s = slot_of[q];
    if (s >= nodes_.size() || out.logical_at_[s] != nodes_.size()) {
      throw ValidationError("assignment is not injective at logical qubit " +
                            std::to_string(q));
    }
    out.logical_at_[s] = q;
  }
  out.slot_of_ = std::move(slot_of);
  return out;
}

std::vector<Vertex> Assignment::ig_to_cg() const {
  std::vector<Vertex> map(slot_of_.size());
  for (Vertex q = 0; q < slot_of_.size(); ++q) map[q] = physical_of(q);
  return map;
}

}  // namespace swapbound
