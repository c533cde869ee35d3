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

#include "swapbound/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "swapbound/errors.hpp"

namespace swapbound {

namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr double kRootFloor = 1e-14;

double entropy_of(const VectorXd& weights) {
  double s = 0.0;
  for (Index i = 0; i < weights.size(); ++i) {
    const double p = weights[i];
    if (p > 0.0) s -= p * std::log(p);
  }
  return std::max(s, 0.0);
}

Eigen::SelfAdjointEigenSolver<MatrixXd> eigensolve(const MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("symmetric eigendecomposition failed to converge");
  }
  return solver;
}

VectorXd clamp_spectrum(const VectorXd& values) {
  for (Index i = 0; i < values.size(); ++i) {
    if (values[i] < -kClampTolerance) {
      throw ValidationError("density matrix has negative eigenvalue " +
                            std::to_string(values[i]));
    }
  }
  return values.cwiseMax(0.0);
}

void require_same_dim(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) {
    throw ValidationError("density matrix dimensions differ: " +
                          std::to_string(a.dim()) + " vs " +
                          std::to_string(b.dim()));
  }
}

}  // namespace

SymmetricMatrix::SymmetricMatrix(const MatrixXd& m, double tolerance) {
  if (m.rows() != m.cols()) throw ValidationError("matrix is not square");
  if (!m.allFinite()) throw NumericalError("matrix has non-finite entries");
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > tolerance) {
    throw ValidationError("matrix is not symmetric");
  }
  m_ = 0.5 * (m + m.transpose());
}

BetaValue::BetaValue(double beta) : beta_(beta) {
  if (!std::isfinite(beta) || beta < 0.0) {
    throw ValidationError("beta must be finite and non-negative, got " +
                          std::to_string(beta));
  }
}

DensityMatrix::DensityMatrix(const MatrixXd& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw ValidationError("density matrix must be square and non-empty");
  }
  if (!m.allFinite()) throw NumericalError("density matrix is not finite");
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw ValidationError("density matrix is not symmetric");
  }
  if (std::abs(m.trace() - 1.0) > 1e-12) {
    throw ValidationError("density matrix trace is " +
                          std::to_string(m.trace()) + ", expected 1");
  }
  matrix_ = 0.5 * (m + m.transpose());
  auto solver = eigensolve(matrix_);
  eigenvalues_ = clamp_spectrum(solver.eigenvalues());
  eigenvectors_ = solver.eigenvectors();
  finish();
}

DensityMatrix::DensityMatrix(MatrixXd eigenvectors, VectorXd eigenvalues) {
  if (eigenvectors.rows() != eigenvectors.cols() ||
      eigenvectors.cols() != eigenvalues.size()) {
    throw ValidationError("eigenbasis and spectrum sizes differ");
  }
  std::vector<Index> order(static_cast<std::size_t>(eigenvalues.size()));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return eigenvalues[a] < eigenvalues[b];
  });
  VectorXd sorted(eigenvalues.size());
  eigenvectors_.resize(eigenvectors.rows(), eigenvectors.cols());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto k = static_cast<Index>(i);
    sorted[k] = eigenvalues[order[i]];
    eigenvectors_.col(k) = eigenvectors.col(order[i]);
  }
  eigenvalues_ = clamp_spectrum(sorted);
  if (std::abs(eigenvalues_.sum() - 1.0) > 1e-12) {
    throw ValidationError("spectrum does not sum to 1");
  }
  matrix_ = eigenvectors_ * eigenvalues_.asDiagonal() *
            eigenvectors_.transpose();
  finish();
}

void DensityMatrix::finish() { entropy_ = entropy_of(eigenvalues_); }

DensityMatrix DensityMatrix::maximally_mixed(std::size_t n) {
  const auto dim = static_cast<Index>(n);
  return DensityMatrix(MatrixXd::Identity(dim, dim),
                       VectorXd::Constant(dim, 1.0 / static_cast<double>(n)));
}

DensityMatrix DensityMatrix::diagonal(std::span<const double> weights) {
  VectorXd w(static_cast<Index>(weights.size()));
  for (std::size_t i = 0; i < weights.size(); ++i) {
    w[static_cast<Index>(i)] = weights[i];
  }
  return DensityMatrix(MatrixXd(w.asDiagonal()));
}

DensityMatrix DensityMatrix::permuted(std::span<const Vertex> image) const {
  if (image.size() != dim()) {
    throw ValidationError("permutation size does not match dimension");
  }
  DensityMatrix out;
  out.eigenvalues_ = eigenvalues_;
  out.eigenvectors_.resize(eigenvectors_.rows(), eigenvectors_.cols());
  out.matrix_.resize(matrix_.rows(), matrix_.cols());
  for (std::size_t i = 0; i < image.size(); ++i) {
    out.eigenvectors_.row(static_cast<Index>(image[i])) =
        eigenvectors_.row(static_cast<Index>(i));
    for (std::size_t j = 0; j < image.size(); ++j) {
      out.matrix_(static_cast<Index>(image[i]), static_cast<Index>(image[j])) =
          matrix_(static_cast<Index>(i), static_cast<Index>(j));
    }
  }
  out.entropy_ = entropy_;
  return out;
}

SymmetricMatrix laplacian(const Graph& g) {
  const auto n = static_cast<Index>(g.num_vertices());
  MatrixXd l = MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    const auto u = static_cast<Index>(e.u);
    const auto v = static_cast<Index>(e.v);
    l(u, v) -= 1.0;
    l(v, u) -= 1.0;
    l(u, u) += 1.0;
    l(v, v) += 1.0;
  }
  return SymmetricMatrix(l, 0.0);
}

DensityMatrix gibbs_state(const SymmetricMatrix& laplacian, BetaValue beta) {
  if (laplacian.dim() == 0) {
    throw ValidationError("Gibbs state of an empty graph is undefined");
  }
  auto solver = eigensolve(laplacian.matrix());
  const VectorXd& lambda = solver.eigenvalues();
  // Shifting by the smallest eigenvalue leaves the normalized state unchanged
  // and keeps every exponent <= 0.
  const double shift = lambda.minCoeff();
  VectorXd weights(lambda.size());
  for (Index i = 0; i < lambda.size(); ++i) {
    weights[i] = std::exp(-beta.value() * (lambda[i] - shift));
  }
  const double z = weights.sum();
  if (!std::isfinite(z) || z <= 0.0) {
    throw NumericalError("partition function is not finite");
  }
  weights /= z;
  return DensityMatrix(solver.eigenvectors(), weights);
}

DensityMatrix gibbs_state(const Graph& g, BetaValue beta) {
  return gibbs_state(laplacian(g), beta);
}

double von_neumann_entropy(const DensityMatrix& rho) { return rho.entropy(); }

double quantum_relative_entropy(const DensityMatrix& rho,
                                const DensityMatrix& sigma) {
  require_same_dim(rho, sigma);
  const VectorXd& q = sigma.eigenvalues();
  const MatrixXd& v = sigma.eigenvectors();
  // Tr[rho ln sigma] = sum_k ln(q_k) <v_k|rho|v_k>
  const MatrixXd rho_v = rho.matrix() * v;
  double cross = 0.0;
  for (Index k = 0; k < q.size(); ++k) {
    const double weight = v.col(k).dot(rho_v.col(k));
    if (q[k] <= 0.0) {
      if (weight > kClampTolerance) {
        return std::numeric_limits<double>::infinity();
      }
      continue;
    }
    cross += weight * std::log(q[k]);
  }
  return std::max(0.0, -rho.entropy() - cross);
}

double qjsd(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma);
  const MatrixXd mid = 0.5 * (rho.matrix() + sigma.matrix());
  auto solver = eigensolve(mid);
  const double value = entropy_of(solver.eigenvalues().cwiseMax(0.0)) -
                       0.5 * (rho.entropy() + sigma.entropy());
  return std::max(0.0, value);
}

double qjsd_via_qre(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma);
  auto solver = eigensolve(0.5 * (rho.matrix() + sigma.matrix()));
  const DensityMatrix mid(solver.eigenvectors(),
                          solver.eigenvalues().cwiseMax(0.0) /
                              solver.eigenvalues().cwiseMax(0.0).sum());
  const double value = 0.5 * (quantum_relative_entropy(rho, mid) +
                              quantum_relative_entropy(sigma, mid));
  return std::max(0.0, value);
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma);
  // Tr sqrt(sqrt(s) r sqrt(s)) is the trace norm of sqrt(r) sqrt(s). Weights
  // at rounding level are zeroed so their square roots do not leak in.
  auto root = [](const DensityMatrix& d) {
    const VectorXd w =
        (d.eigenvalues().array() < kRootFloor).select(0.0, d.eigenvalues());
    return MatrixXd(d.eigenvectors() * w.cwiseSqrt().asDiagonal() *
                    d.eigenvectors().transpose());
  };
  const Eigen::JacobiSVD<MatrixXd> svd(root(rho) * root(sigma));
  const double root_trace = svd.singularValues().sum();
  return std::clamp(root_trace * root_trace, 0.0, 1.0);
}

std::vector<EntropyPoint> entropy_curve(const Graph& g,
                                        std::span<const BetaValue> betas) {
  if (!std::is_sorted(betas.begin(), betas.end())) {
    throw ValidationError("entropy curve betas must be sorted ascending");
  }
  const SymmetricMatrix l = laplacian(g);
  std::vector<EntropyPoint> curve;
  curve.reserve(betas.size());
  for (BetaValue beta : betas) {
    curve.push_back({beta.value(), gibbs_state(l, beta).entropy()});
  }
  return curve;
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  const Index na = a.matrix().rows();
  const Index nb = b.matrix().rows();
  MatrixXd out(na * nb, na * nb);
  for (Index i = 0; i < na; ++i)
    for (Index j = 0; j < na; ++j)
      out.block(i * nb, j * nb, nb, nb) = a.matrix()(i, j) * b.matrix();
  // Products of unit-trace matrices drift by a few ulps; renormalize.
  out /= out.trace();
  return DensityMatrix(out);
}

}  // namespace swapbound
