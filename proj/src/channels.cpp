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

#include "swapbound/channels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "swapbound/errors.hpp"

namespace swapbound {

namespace {

using Eigen::Index;

// Entries at or below this are outside the support during decomposition.
constexpr double kSupportTolerance = 1e-12;
constexpr double kResidualTolerance = 1e-10;

// Kuhn's augmenting-path matching of rows to columns over `support`.
// Returns row -> column, or an empty vector when no perfect matching exists.
std::vector<Vertex> perfect_matching(const std::vector<std::vector<Vertex>>& support) {
  const std::size_t n = support.size();
  std::vector<Vertex> col_owner(n, n);
  std::vector<char> visited(n);

  auto augment = [&](auto& self, Vertex row) -> bool {
    for (Vertex col : support[row]) {
      if (visited[col]) continue;
      visited[col] = 1;
      if (col_owner[col] == n || self(self, col_owner[col])) {
        col_owner[col] = row;
        return true;
      }
    }
    return false;
  };

  for (Vertex row = 0; row < n; ++row) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(augment, row)) return {};
  }
  std::vector<Vertex> row_to_col(n);
  for (Vertex col = 0; col < n; ++col) row_to_col[col_owner[col]] = col;
  return row_to_col;
}

// Perfect matching on the support whose smallest matched entry is as large
// as possible, so each step peels off the heaviest available permutation.
std::vector<Vertex> bottleneck_matching(const Eigen::MatrixXd& residual) {
  const auto n = static_cast<std::size_t>(residual.rows());
  std::vector<double> levels;
  for (Index i = 0; i < residual.rows(); ++i)
    for (Index j = 0; j < residual.cols(); ++j)
      if (residual(i, j) > kSupportTolerance) levels.push_back(residual(i, j));
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  auto match_at = [&](double floor) {
    std::vector<std::vector<Vertex>> support(n);
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = 0; j < n; ++j)
        if (residual(static_cast<Index>(i), static_cast<Index>(j)) >= floor)
          support[i].push_back(j);
    return perfect_matching(support);
  };

  if (levels.empty()) return {};
  std::vector<Vertex> best = match_at(levels.front());
  if (best.empty()) return {};
  std::size_t lo = 0, hi = levels.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi + 1) / 2;
    std::vector<Vertex> m = match_at(levels[mid]);
    if (m.empty()) {
      hi = mid - 1;
    } else {
      best = std::move(m);
      lo = mid;
    }
  }
  return best;
}

}  // namespace

PermutationMap::PermutationMap(std::vector<Vertex> image)
    : image_(std::move(image)) {
  std::vector<char> hit(image_.size(), 0);
  for (Vertex v : image_) {
    if (v >= image_.size() || hit[v]) {
      throw ValidationError("permutation image is not a bijection");
    }
    hit[v] = 1;
  }
}

PermutationMap PermutationMap::identity(std::size_t n) {
  std::vector<Vertex> image(n);
  std::iota(image.begin(), image.end(), Vertex{0});
  return PermutationMap(std::move(image));
}

PermutationMap PermutationMap::compose(const PermutationMap& other) const {
  if (other.size() != size()) {
    throw ValidationError("cannot compose permutations of different sizes");
  }
  std::vector<Vertex> image(size());
  for (Vertex i = 0; i < size(); ++i) image[i] = image_[other.image_[i]];
  return PermutationMap(std::move(image));
}

PermutationMap PermutationMap::inverse() const {
  std::vector<Vertex> image(size());
  for (Vertex i = 0; i < size(); ++i) image[image_[i]] = i;
  return PermutationMap(std::move(image));
}

Eigen::MatrixXd PermutationMap::matrix() const {
  const auto n = static_cast<Index>(size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Vertex i = 0; i < size(); ++i) {
    m(static_cast<Index>(i), static_cast<Index>(image_[i])) = 1.0;
  }
  return m;
}

Graph erase_edge(const Graph& g, const Edge& e) { return g.without_edge(e); }

Assignment apply_transposition(const Assignment& a, const Transposition& t) {
  const auto [u, v] = t.pair;
  if (!a.subgraph().has_edge(u, v)) {
    throw ValidationError("transposition (" + std::to_string(u) + "," +
                          std::to_string(v) +
                          ") is not an edge of the assigned region");
  }
  std::vector<Vertex> slots = a.slots();
  std::swap(slots[a.logical_at(u)], slots[a.logical_at(v)]);
  return a.with_slots(std::move(slots));
}

BirkhoffDecomposition birkhoff_decompose(const Eigen::MatrixXd& d) {
  if (d.rows() != d.cols() || d.rows() == 0) {
    throw ValidationError("doubly stochastic matrix must be square");
  }
  if (!d.allFinite() || d.minCoeff() < -1e-12) {
    throw ValidationError("doubly stochastic matrix has negative entries");
  }
  const auto n = static_cast<std::size_t>(d.rows());
  const Eigen::VectorXd rows = d.rowwise().sum();
  const Eigen::VectorXd cols = d.colwise().sum().transpose();
  if ((rows.array() - 1.0).abs().maxCoeff() > 1e-9 ||
      (cols.array() - 1.0).abs().maxCoeff() > 1e-9) {
    throw ValidationError("matrix is not doubly stochastic");
  }

  Eigen::MatrixXd residual = d.cwiseMax(0.0);
  BirkhoffDecomposition out;
  double remaining = 1.0;
  while (remaining > kResidualTolerance) {
    std::vector<Vertex> match = bottleneck_matching(residual);
    if (match.empty()) {
      if (residual.maxCoeff() <= kResidualTolerance) break;
      throw DecompositionError(
          "support has no perfect matching; residual mass " +
          std::to_string(remaining));
    }
    double theta = 1.0;
    for (Vertex i = 0; i < n; ++i) {
      theta = std::min(theta, residual(static_cast<Index>(i),
                                       static_cast<Index>(match[i])));
    }
    for (Vertex i = 0; i < n; ++i) {
      double& entry =
          residual(static_cast<Index>(i), static_cast<Index>(match[i]));
      entry -= theta;
      if (entry <= kSupportTolerance) entry = 0.0;
    }
    remaining -= theta;
    out.terms.push_back({theta, PermutationMap(std::move(match))});
  }

  double total = 0.0;
  for (const auto& term : out.terms) total += term.weight;
  if (total > 0.0) {
    for (auto& term : out.terms) term.weight /= total;
  }
  return out;
}

const BirkhoffTerm& max_weight_term(const BirkhoffDecomposition& d) {
  if (d.terms.empty()) {
    throw ValidationError("empty Birkhoff decomposition");
  }
  const BirkhoffTerm* best = &d.terms.front();
  for (const auto& term : d.terms) {
    if (term.weight > best->weight ||
        (term.weight == best->weight && term.permutation < best->permutation)) {
      best = &term;
    }
  }
  return *best;
}

}  // namespace swapbound
