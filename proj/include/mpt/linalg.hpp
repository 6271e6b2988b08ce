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

#include <complex>
#include <cstddef>
#include <limits>

#include <Eigen/Dense>

namespace mpt {

using Complex = std::complex<double>;

template <class Scalar>
using BasicOperator = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using BasicState = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Dense square complex matrix: gates, Hamiltonian terms, propagators.
using Operator = BasicOperator<Complex>;
/// Complex amplitude vector over a register. Post-selected states may carry
/// norm below one; the squared norm is then the success probability.
using StateVector = BasicState<Complex>;

// Tolerances shared by every module.
inline constexpr double kAlgebraicTol = 1e-10;
inline constexpr double kSpectralTol = 1e-9;
// Post-selected norms at or below this count as a vanished outcome.
inline constexpr double kDegenerateNorm = 1e-12;

/// Largest singular value, via the eigenvalues of M^† M.
double spectral_norm(const Operator& m);

/// ||H - H^†||_spec.
double hermiticity_defect(const Operator& h);
/// ||U U^† - I||_spec.
double unitarity_defect(const Operator& u);

bool is_hermitian(const Operator& h, double tol = kAlgebraicTol);
bool is_unitary(const Operator& u, double tol = kAlgebraicTol);

/// exp(-iHt) by Hermitian eigendecomposition.
///
/// Throws std::invalid_argument when H is not square or ||H - H^†|| exceeds
/// kAlgebraicTol; the message carries the measured defect.
Operator hermitian_propagator(const Operator& h, double t);

enum class Orientation { kColumn, kRow };

/// Unitary whose first column (or first row) is exactly `target`.
///
/// A single Householder reflector w = e_1 + conj(phase) v maps e_1 onto the
/// target up to the phase of its leading entry; the result is
/// U = -phase * H * diag(1, -1, ..., -1), so e_1 completes to the identity.
/// For kRow the transpose is returned (first row = target, not its
/// conjugate), matching C' = C^T.
Operator complete_unitary(const StateVector& target,
                          Orientation orientation = Orientation::kColumn);

template <class DerivedA, class DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA>& a,
          const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  BasicOperator<Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
          a(i, j) * b;
    }
  }
  return out;
}

/// exp(-iHt) by truncated Taylor series with scaling and squaring.
///
/// Scalar-generic so it can run in extended precision, where the Eigen
/// eigensolvers are unavailable. Assumes nothing about H beyond squareness.
template <class Scalar>
BasicOperator<Scalar> taylor_propagator(const BasicOperator<Scalar>& h,
                                        const Scalar& t) {
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  using std::abs;
  const Eigen::Index n = h.rows();
  const Scalar minus_i(Real(0), Real(-1));
  BasicOperator<Scalar> x = (minus_i * t) * h;

  Real norm1(0);
  for (Eigen::Index j = 0; j < n; ++j) {
    Real col(0);
    for (Eigen::Index i = 0; i < n; ++i) col += abs(x(i, j));
    if (col > norm1) norm1 = col;
  }
  int squarings = 0;
  while (norm1 > Real(0.25)) {
    norm1 /= Real(2);
    ++squarings;
  }
  x /= Scalar(std::ldexp(1.0, squarings));

  const Real eps = std::numeric_limits<Real>::epsilon();
  BasicOperator<Scalar> result = BasicOperator<Scalar>::Identity(n, n);
  BasicOperator<Scalar> term = BasicOperator<Scalar>::Identity(n, n);
  for (int k = 1; k < 200; ++k) {
    term = (term * x) / Scalar(Real(k));
    result += term;
    Real size(0);
    for (Eigen::Index i = 0; i < term.size(); ++i) size += abs(term(i));
    if (size < eps * Real(1e-3)) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

}  // namespace mpt
