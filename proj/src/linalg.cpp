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

#include "mpt/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace mpt {

namespace {

void require_square(const Operator& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    std::ostringstream msg;
    msg << what << ": expected a nonempty square matrix, got " << m.rows()
        << "x" << m.cols();
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

double spectral_norm(const Operator& m) {
  if (m.size() == 0) return 0.0;
  const Operator gram = m.adjoint() * m;
  Eigen::SelfAdjointEigenSolver<Operator> solver(gram, Eigen::EigenvaluesOnly);
  // Eigenvalues are ascending; roundoff can push a zero slightly negative.
  return std::sqrt(std::max(solver.eigenvalues()(gram.rows() - 1), 0.0));
}

double hermiticity_defect(const Operator& h) {
  require_square(h, "hermiticity_defect");
  return spectral_norm(h - h.adjoint());
}

double unitarity_defect(const Operator& u) {
  require_square(u, "unitarity_defect");
  return spectral_norm(u * u.adjoint() - Operator::Identity(u.rows(), u.cols()));
}

bool is_hermitian(const Operator& h, double tol) {
  return hermiticity_defect(h) < tol;
}

bool is_unitary(const Operator& u, double tol) {
  return unitarity_defect(u) < tol;
}

Operator hermitian_propagator(const Operator& h, double t) {
  require_square(h, "hermitian_propagator");
  if (!std::isfinite(t)) {
    throw std::invalid_argument("hermitian_propagator: time must be finite");
  }
  const double defect = hermiticity_defect(h);
  if (!(defect < kAlgebraicTol)) {
    std::ostringstream msg;
    msg << "hermitian_propagator: generator is not Hermitian, ||H - H^dagger|| = "
        << defect;
    throw std::invalid_argument(msg.str());
  }
  // Symmetrize so the solver sees an exactly Hermitian input.
  const Operator sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Operator> solver(sym);
  const Eigen::VectorXd& energies = solver.eigenvalues();
  Eigen::VectorXcd phases(energies.size());
  for (Eigen::Index i = 0; i < energies.size(); ++i) {
    phases(i) = std::polar(1.0, -energies(i) * t);
  }
  const Operator& v = solver.eigenvectors();
  return v * phases.asDiagonal() * v.adjoint();
}

Operator complete_unitary(const StateVector& target, Orientation orientation) {
  const Eigen::Index n = target.size();
  if (n == 0) {
    throw std::invalid_argument("complete_unitary: empty target vector");
  }
  const double norm = target.norm();
  if (!(std::abs(norm - 1.0) <= kAlgebraicTol)) {
    std::ostringstream msg;
    msg << "complete_unitary: target must have unit norm, got " << norm;
    throw std::invalid_argument(msg.str());
  }

  const double lead = std::abs(target(0));
  const Complex phase = lead > 0.0 ? target(0) / lead : Complex(1.0, 0.0);

  // u = conj(phase) * target has a real nonnegative leading entry, so
  // w = e_1 + u never cancels and H e_1 = -u.
  StateVector w = std::conj(phase) * target;
  w(0) += 1.0;
  const double scale = 2.0 / w.squaredNorm();
  Operator u = Operator::Identity(n, n) - scale * (w * w.adjoint());
  u *= -phase;
  for (Eigen::Index j = 1; j < n; ++j) u.col(j) = -u.col(j);
  // Pin the prescribed column to the input bits.
  u.col(0) = target;

  if (orientation == Orientation::kRow) return u.transpose();
  return u;
}

}  // namespace mpt
