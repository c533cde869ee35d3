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
#include <Eigen/QR>
#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "swapbound/graph.hpp"
#include "swapbound/placement.hpp"
#include "swapbound/spectral.hpp"

namespace swapbound::testing {

inline Eigen::MatrixXd gaussian_matrix(std::mt19937_64& rng, Eigen::Index rows,
                                       Eigen::Index cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = normal(rng);
  }
  return m;
}

// Random density matrix of random rank (full rank half of the time).
inline DensityMatrix random_density(std::mt19937_64& rng, std::size_t n) {
  const auto dim = static_cast<Eigen::Index>(n);
  Eigen::Index rank = dim;
  if (rng() % 2 == 0) {
    rank = 1 + static_cast<Eigen::Index>(rng() % n);
  }
  const Eigen::MatrixXd g = gaussian_matrix(rng, dim, rank);
  Eigen::MatrixXd rho = g * g.transpose();
  rho /= rho.trace();
  rho = 0.5 * (rho + rho.transpose()).eval();
  return DensityMatrix(rho);
}

inline Eigen::MatrixXd random_orthogonal(std::mt19937_64& rng, std::size_t n) {
  const auto dim = static_cast<Eigen::Index>(n);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(gaussian_matrix(rng, dim, dim));
  return qr.householderQ() * Eigen::MatrixXd::Identity(dim, dim);
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng,
                                              std::size_t n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Graph on n vertices whose edge set is the bitmask over the pairs (i<j)
// in row-major order.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j, ++bit) {
      if ((mask >> bit) & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

inline std::vector<Graph> all_graphs(std::size_t n) {
  const std::size_t pairs = n * (n - 1) / 2;
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    out.push_back(graph_from_mask(n, mask));
  }
  return out;
}

inline std::size_t exhaustive_ged(const Graph& g, const Graph& h) {
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  std::size_t best = g.num_edges() + h.num_edges();
  do {
    std::size_t cost = 0;
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = i + 1; j < n; ++j) {
        if (g.has_edge(i, j) != h.has_edge(p[i], p[j])) ++cost;
      }
    }
    best = std::min(best, cost);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline bool exhaustive_isomorphic(const Graph& g, const Graph& h) {
  return g.num_vertices() == h.num_vertices() &&
         g.num_edges() == h.num_edges() && exhaustive_ged(g, h) == 0;
}

// Iterative-deepening search over swap sequences. Deliberately shares no
// code with the BFS oracle.
namespace detail {

inline std::vector<Edge> pending(const std::vector<Edge>& todo,
                                 const Graph& region,
                                 const std::vector<Vertex>& slot) {
  std::vector<Edge> out;
  for (const Edge& e : todo) {
    if (!region.has_edge(slot[e.u], slot[e.v])) out.push_back(e);
  }
  return out;
}

inline bool dfs(const Graph& region, std::vector<Vertex>& slot,
                const std::vector<Edge>& todo, std::size_t depth) {
  const std::vector<Edge> left = pending(todo, region, slot);
  if (left.empty()) return true;
  if (depth == 0) return false;
  for (const Edge& s : region.edges()) {
    std::vector<Vertex> next = slot;
    for (Vertex& x : next) {
      if (x == s.u) {
        x = s.v;
      } else if (x == s.v) {
        x = s.u;
      }
    }
    if (dfs(region, next, left, depth - 1)) return true;
  }
  return false;
}

}  // namespace detail

inline std::size_t iddfs_min_swaps(const Graph& ig, const Assignment& a,
                                   std::size_t limit) {
  std::vector<Vertex> slot = a.slots();
  for (std::size_t depth = 0; depth <= limit; ++depth) {
    if (detail::dfs(a.subgraph(), slot, ig.edges(), depth)) return depth;
  }
  return limit + 1;
}

inline Assignment identity_assignment(const Graph& cg, std::size_t k) {
  std::vector<Vertex> nodes(k);
  std::iota(nodes.begin(), nodes.end(), Vertex{0});
  return Assignment(cg, nodes, nodes);
}

}  // namespace swapbound::testing
