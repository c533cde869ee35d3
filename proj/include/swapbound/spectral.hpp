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

namespace swapbound {

/// Eigenvalues at or above this are treated as part of the support; anything
/// in [-kClampTolerance, kClampTolerance] is clamped to zero.
inline constexpr double kClampTolerance = 1e-10;
/// qJSD at or below this means the two states are considered equal.
inline constexpr double kIsoTolerance = 1e-10;

/// Real symmetric matrix. Construction symmetrizes the input after checking
/// that it is symmetric to within `tolerance`.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(const Eigen::MatrixXd& m, double tolerance = 1e-12);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const Eigen::MatrixXd& matrix() const { return m_; }
  double operator()(std::size_t i, std::size_t j) const {
    return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

 private:
  Eigen::MatrixXd m_;
};

/// Non-negative inverse temperature.
class BetaValue {
 public:
  BetaValue() = default;
  /// Throws ValidationError unless finite and >= 0.
  explicit BetaValue(double beta);
  double value() const { return beta_; }

  friend auto operator<=>(const BetaValue&, const BetaValue&) = default;

 private:
  double beta_ = 0.0;
};

/// Unit-trace positive semidefinite real symmetric matrix with its spectrum
/// computed once at construction.
class DensityMatrix {
 public:
  /// Throws ValidationError unless `m` is symmetric, has trace 1 within
  /// 1e-12 and no eigenvalue below -kClampTolerance.
  explicit DensityMatrix(const Eigen::MatrixXd& m);

  /// Builds directly from an orthonormal eigenbasis and weights; used when
  /// the spectrum is known (Gibbs states).
  DensityMatrix(Eigen::MatrixXd eigenvectors, Eigen::VectorXd eigenvalues);

  static DensityMatrix maximally_mixed(std::size_t n);
  static DensityMatrix diagonal(std::span<const double> weights);

  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const Eigen::MatrixXd& matrix() const { return matrix_; }
  /// Eigenvalues in ascending order, negatives clamped to zero.
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  /// Columns are orthonormal eigenvectors matching eigenvalues().
  const Eigen::MatrixXd& eigenvectors() const { return eigenvectors_; }
  /// Von Neumann entropy, computed at construction.
  double entropy() const { return entropy_; }

  /// P rho P^T for the permutation sending basis vector i to image[i].
  /// Reuses the spectrum; no new eigendecomposition.
  DensityMatrix permuted(std::span<const Vertex> image) const;

 private:
  DensityMatrix() = default;
  void finish();

  Eigen::MatrixXd matrix_;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd eigenvectors_;
  double entropy_ = 0.0;
};

/// L = D - A.
SymmetricMatrix laplacian(const Graph& g);

/// e^{-beta L} / Tr e^{-beta L}, via the eigendecomposition of L.
/// Throws NumericalError on non-finite input.
DensityMatrix gibbs_state(const SymmetricMatrix& laplacian, BetaValue beta);
DensityMatrix gibbs_state(const Graph& g, BetaValue beta);

/// -sum p ln p over clamped eigenvalues, in nats.
double von_neumann_entropy(const DensityMatrix& rho);

/// Umegaki relative entropy Tr rho (ln rho - ln sigma). Returns +infinity
/// when rho has weight outside the support of sigma.
double quantum_relative_entropy(const DensityMatrix& rho,
                                const DensityMatrix& sigma);

/// S((rho + sigma)/2) - (S(rho) + S(sigma))/2. Range [0, ln 2].
double qjsd(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Same quantity through relative entropies to the midpoint state.
double qjsd_via_qre(const DensityMatrix& rho, const DensityMatrix& sigma);

/// (Tr sqrt(sqrt(sigma) rho sqrt(sigma)))^2, clamped into [0, 1].
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

struct EntropyPoint {
  double beta;
  double entropy;
};

/// Von Neumann entropy of the Gibbs state of `g` at each beta.
/// `betas` must be sorted ascending.
std::vector<EntropyPoint> entropy_curve(const Graph& g,
                                        std::span<const BetaValue> betas);

/// Kronecker product, used for additivity checks.
DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace swapbound
