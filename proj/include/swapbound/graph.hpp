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
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace swapbound {

using Vertex = std::size_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on dense vertex indices [0, n). Immutable once
/// built; edges are kept sorted and deduplicated.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  /// Throws ValidationError on self-loops or out-of-range endpoints.
  /// Duplicate and reversed pairs collapse to one edge.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool has_edge(Vertex a, Vertex b) const {
    return a != b && a < n_ && b < n_ && matrix_[a * n_ + b] != 0;
  }

  /// Copy of this graph without `e`. Throws ValidationError if absent.
  Graph without_edge(const Edge& e) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint8_t> matrix_;
};

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// Star with `leaves` leaves; vertex 0 is the center.
Graph star_graph(std::size_t leaves);

bool is_complete(const Graph& g);
bool is_connected(const Graph& g);
/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Hop-count distances from `source`; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);

/// Longest shortest path. Throws ValidationError when `g` is disconnected.
/// Graphs with fewer than two vertices have diameter 0.
std::size_t graph_diameter(const Graph& g);

/// Subgraph induced by `vertices`, relabeled 0..k-1 in list order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Graph with vertex v renamed to image[v].
Graph relabel(const Graph& g, std::span<const Vertex> image);

}  // namespace swapbound
