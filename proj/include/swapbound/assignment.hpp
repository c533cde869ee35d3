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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swapbound/channels.hpp"
#include "swapbound/circuit.hpp"
#include "swapbound/graph.hpp"
#include "swapbound/placement.hpp"

namespace swapbound {

/// Isomorphism-invariant key: equal keys iff isomorphic graphs.
struct CanonicalKey {
  std::size_t n = 0;
  std::vector<std::uint64_t> bits;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
};

/// Lexicographically smallest upper-triangle adjacency string (filled column
/// by column) over all vertex orderings that respect the colour-refinement
/// partition of `g`.
CanonicalKey canonical_key(const Graph& g);

struct SubgraphClass {
  CanonicalKey canonical;
  /// Lexicographically smallest sorted node set in the class.
  std::vector<Vertex> representative_nodes;
  std::size_t all_embeddings_count = 0;
  /// Every member node set; filled only when requested.
  std::vector<std::vector<Vertex>> members;
};

struct EnumerationOptions {
  std::size_t max_subsets = 2'000'000;
  std::size_t max_classes = 100'000;
  bool keep_members = false;
};

struct EnumerationResult {
  /// Sorted by representative node set.
  std::vector<SubgraphClass> classes;
  std::size_t subsets_seen = 0;
  /// False when a budget stopped the enumeration early.
  bool complete = true;
};

/// Isomorphism classes of connected induced k-node subgraphs of `cg`.
/// Throws ValidationError unless 1 <= k <= cg.num_vertices().
EnumerationResult enumerate_connected_subgraph_classes(
    const Graph& cg, std::size_t k, const EnumerationOptions& options = {});

struct Vf2Options {
  /// Also require non-edges to map to non-edges.
  bool induced = false;
  /// Only accept embeddings whose image induces a connected host subgraph.
  bool connected_image = false;
};

/// Pattern vertex -> host vertex map sending every pattern edge onto a host
/// edge, or nullopt. Pattern vertices are tried by descending degree, host
/// candidates by ascending index; the first embedding found is returned.
std::optional<std::vector<Vertex>> vf2_embed(const Graph& pattern,
                                             const Graph& host,
                                             const Vf2Options& options = {});

struct GedResult {
  std::size_t distance = 0;
  /// g vertex -> h vertex.
  PermutationMap best_bijection;
};

/// Exact edge-only graph edit distance between equal-size graphs by
/// depth-first branch and bound. Among optimal bijections the
/// lexicographically smallest is returned.
GedResult graph_edit_distance(const Graph& g, const Graph& h);

/// Number of vertex pairs whose adjacency differs under `g_to_h`.
std::size_t edit_cost(const Graph& g, const Graph& h,
                      const std::vector<Vertex>& g_to_h);

/// Connected k-subset with many induced edges: greedy growth from the
/// highest-degree vertex followed by single-vertex exchanges. Sorted.
std::vector<Vertex> most_connected_subgraph(const Graph& cg, std::size_t k);

enum class AssignmentPath {
  kIsomorphism,
  kSimilarity,
  kCompleteShortcut,
  kBudgetShortcut,
};

std::string to_string(AssignmentPath path);

struct AssignmentOptions {
  EnumerationOptions enumeration;
  /// Use the most-connected-subgraph placement even for non-complete IGs.
  bool force_shortcut = false;
};

struct AssignmentResult {
  Assignment assignment;
  std::size_t ged = 0;
  AssignmentPath path = AssignmentPath::kIsomorphism;
  std::size_t classes_considered = 0;
};

/// Initial placement: an exact embedding when one exists, otherwise the
/// connected subgraph class with the smallest edit distance to the IG.
AssignmentResult assign_qubits(const InteractionGraph& ig, const Graph& cg,
                               const AssignmentOptions& options = {});

/// gate_count * (diameter(region) - 1), zero for regions of diameter <= 1.
std::size_t max_swap_bound(const InteractionGraph& ig, const Assignment& a);

}  // namespace swapbound
