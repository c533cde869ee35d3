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

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "swapbound/graph.hpp"
#include "swapbound/placement.hpp"

namespace swapbound {

/// Bijection on [0, n); image()[i] is where i is sent.
class PermutationMap {
 public:
  PermutationMap() = default;
  /// Throws ValidationError unless `image` is a bijection.
  explicit PermutationMap(std::vector<Vertex> image);
  static PermutationMap identity(std::size_t n);

  std::size_t size() const { return image_.size(); }
  const std::vector<Vertex>& image() const { return image_; }
  Vertex operator()(Vertex i) const { return image_[i]; }

  /// (this * other)(i) = this(other(i)).
  PermutationMap compose(const PermutationMap& other) const;
  PermutationMap inverse() const;
  /// Matrix with a one at (i, image[i]).
  Eigen::MatrixXd matrix() const;

  friend auto operator<=>(const PermutationMap&, const PermutationMap&) = default;
  friend bool operator==(const PermutationMap&, const PermutationMap&) = default;

 private:
  std::vector<Vertex> image_;
};

/// Exchange of the occupants of two adjacent slots.
struct Transposition {
  Edge pair;
};

struct BirkhoffTerm {
  double weight;
  PermutationMap permutation;
};

struct BirkhoffDecomposition {
  std::vector<BirkhoffTerm> terms;
};

/// Removes one edge. Throws ValidationError when `e` is not in `g`.
Graph erase_edge(const Graph& g, const Edge& e);

/// Swaps the logical qubits on the two slots of `t`. Throws ValidationError
/// unless the slots are adjacent in the assignment's region.
Assignment apply_transposition(const Assignment& a, const Transposition& t);

/// Greedy Birkhoff-von Neumann decomposition: repeatedly take a perfect
/// matching on the support and peel off its smallest entry.
/// Throws ValidationError when the rows/columns do not sum to 1 within 1e-9
/// and DecompositionError when the support admits no perfect matching.
BirkhoffDecomposition birkhoff_decompose(const Eigen::MatrixXd& d);

/// Largest-weight term; ties go to the lexicographically smallest image.
const BirkhoffTerm& max_weight_term(const BirkhoffDecomposition& d);

}  // namespace swapbound
