// Copyright 2026 The mptrotter Authors
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

// Test-only oracles and random generators. Nothing here calls into the
// library's numerical kernels, so the checks stay independent.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "mpt/linalg.hpp"

namespace mpt::testing {

inline Operator pauli_x() {
  Operator m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

inline Operator pauli_z() {
  Operator m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

/// Reference initial state sqrt(0.3)|00> + sqrt(0.7)|01>.
inline StateVector reference_state() {
  StateVector psi = StateVector::Zero(4);
  psi(0) = std::sqrt(0.3);
  psi(1) = std::sqrt(0.7);
  return psi;
}

/// Truncated Taylor series sum_{n <= terms} (-iHt)^n / n!, no scaling.
inline Operator taylor_oracle(const Operator& h, double t, int terms) {
  const Operator x = Complex(0.0, -t) * h;
  Operator sum = Operator::Identity(h.rows(), h.cols());
  Operator term = Operator::Identity(h.rows(), h.cols());
  for (int n = 1; n <= terms; ++n) {
    term = term * x / static_cast<double>(n);
    sum += term;
  }
  return sum;
}

/// Largest singular value from a Jacobi SVD.
inline double svd_norm(const Operator& m) {
  Eigen::JacobiSVD<Operator> svd(m);
  return svd.singularValues()(0);
}

inline Complex random_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  return {normal(rng), normal(rng)};
}

inline Operator random_matrix(std::mt19937_64& rng, Eigen::Index n) {
  Operator m(n, n);
  for (Eigen::Index i = 0; i < m.size(); ++i) m(i) = random_complex(rng);
  return m;
}

inline Operator random_hermitian(std::mt19937_64& rng, Eigen::Index n) {
  const Operator m = random_matrix(rng, n);
  return 0.5 * (m + m.adjoint());
}

/// Haar-random unitary: QR of a Ginibre matrix with the R phases removed.
inline Operator random_unitary(std::mt19937_64& rng, Eigen::Index n) {
  const Operator m = random_matrix(rng, n);
  Eigen::HouseholderQR<Operator> qr(m);
  Operator q = qr.householderQ();
  const Operator r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

inline StateVector random_state(std::mt19937_64& rng, Eigen::Index n) {
  StateVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = random_complex(rng);
  return v / v.norm();
}

/// Strictly increasing sample of `k` distinct integers from [1, max_value].
inline std::vector<std::int64_t> random_schedule(std::mt19937_64& rng, int k,
                                                 std::int64_t max_value) {
  std::vector<std::int64_t> pool(static_cast<std::size_t>(max_value));
  for (std::int64_t i = 0; i < max_value; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(static_cast<std::size_t>(k));
  std::sort(pool.begin(), pool.end());
  return pool;
}

/// sum_i c_i A_i |psi> / sum_i |c_i|, computed directly.
inline StateVector direct_lcu(const std::vector<double>& c,
                              const std::vector<Operator>& ops,
                              const StateVector& psi) {
  StateVector out = StateVector::Zero(psi.size());
  double abs_sum = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    out += c[i] * (ops[i] * psi);
    abs_sum += std::abs(c[i]);
  }
  return out / abs_sum;
}

/// Least-squares log-log slope, written out independently of fit_order.
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  Eigen::MatrixXd design(static_cast<Eigen::Index>(x.size()), 2);
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) {
    design(static_cast<Eigen::Index>(i), 0) = std::log(x[i]);
    design(static_cast<Eigen::Index>(i), 1) = 1.0;
    rhs(static_cast<Eigen::Index>(i)) = std::log(y[i]);
  }
  return design.colPivHouseholderQr().solve(rhs)(0);
}

}  // namespace mpt::testing
