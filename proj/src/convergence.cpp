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

#include "mpt/convergence.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/multiprecision/complex128.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/float128.hpp>

#include "mpt/product_formula.hpp"

namespace mpt {

namespace {

using QuadReal = boost::multiprecision::float128;
using QuadComplex = boost::multiprecision::complex128;
using QuadOperator = BasicOperator<QuadComplex>;
using QuadState = BasicState<QuadComplex>;

QuadComplex to_quad(const Complex& z) {
  return QuadComplex(QuadReal(z.real()), QuadReal(z.imag()));
}

QuadOperator to_quad(const Operator& m) {
  QuadOperator out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.size(); ++i) out(i) = to_quad(m(i));
  return out;
}

QuadOperator quad_propagate(const QuadOperator& h, const QuadComplex& t) {
  return taylor_propagator(h, t);
}

Operator to_double(const QuadOperator& m, const QuadReal& scale) {
  Operator out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const QuadComplex z = m(i) / QuadComplex(scale);
    out(i) = Complex(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  }
  return out;
}

// Spectral norm of a matrix formed in quad: rescale to unit max entry, then
// use the double eigen-based norm.
double quad_spectral_norm(const QuadOperator& m) {
  QuadReal scale(0);
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const QuadReal a = abs(m(i));
    if (a > scale) scale = a;
  }
  if (scale == QuadReal(0)) return 0.0;
  return static_cast<double>(scale) * spectral_norm(to_double(m, scale));
}

std::vector<ErrorReport> quad_curve(const HamiltonianDecomposition& decomp,
                                    const StateVector& psi0,
                                    const MpSchedule& schedule,
                                    std::span<const double> times) {
  std::vector<QuadOperator> terms;
  for (const Operator& term : decomp.terms()) {
    const QuadOperator q = to_quad(term);
    terms.push_back((q + q.adjoint()) / QuadComplex(2));
  }
  const Eigen::Index n = decomp.dim();
  QuadOperator h_total = QuadOperator::Zero(n, n);
  for (const auto& term : terms) h_total += term;

  QuadState psi(psi0.size());
  for (Eigen::Index i = 0; i < psi0.size(); ++i) psi(i) = to_quad(psi0(i));
  psi /= QuadComplex(psi.norm());

  const std::span<const std::int64_t> iterations(schedule.iterations());
  const std::vector<QuadReal> coefficients =
      detail::mp_coefficients<QuadReal>(iterations);
  const QuadOperator identity = QuadOperator::Identity(n, n);

  std::vector<ErrorReport> reports;
  reports.reserve(times.size());
  for (double t : times) {
    const QuadComplex tq = to_quad(Complex(t));
    const QuadOperator m = detail::mp_operator(
        terms, tq, iterations, std::span<const QuadReal>(coefficients),
        quad_propagate);
    const QuadOperator exact = taylor_propagator(h_total, tq);

    ErrorReport report;
    report.t = t;
    report.operator_error = quad_spectral_norm(m - exact);
    report.nonunitarity = quad_spectral_norm(m * m.adjoint() - identity);
    QuadState out = m * psi;
    const QuadReal norm = out.norm();
    if (!(norm > QuadReal(kDegenerateNorm))) {
      report.degenerate = true;
      report.state_error = std::numeric_limits<double>::quiet_NaN();
    } else {
      out /= QuadComplex(norm);
      report.state_error = static_cast<double>(QuadReal((exact * psi - out).norm()));
    }
    reports.push_back(report);
  }
  return reports;
}

}  // namespace

std::vector<ErrorReport> error_curve(const HamiltonianDecomposition& decomp,
                                     const StateVector& psi0,
                                     const MpSchedule& schedule,
                                     std::span<const double> times,
                                     Precision precision) {
  if (decomp.empty()) {
    throw std::invalid_argument("error_curve: empty Hamiltonian decomposition");
  }
  if (psi0.size() != decomp.dim()) {
    throw std::invalid_argument("error_curve: state dimension mismatch");
  }
  if (precision == Precision::kQuad) {
    if (!(std::abs(psi0.squaredNorm() - 1.0) <= kAlgebraicTol)) {
      throw std::invalid_argument("error_curve: initial state is not normalized");
    }
    return quad_curve(decomp, psi0, schedule, times);
  }
  std::vector<ErrorReport> reports;
  reports.reserve(times.size());
  for (double t : times) {
    reports.push_back(error_report(decomp, t, mp_operator(decomp, t, schedule), psi0));
  }
  return reports;
}

std::vector<double> state_error_curve(const HamiltonianDecomposition& decomp,
                                      const StateVector& psi0,
                                      const MpSchedule& schedule,
                                      std::span<const double> times,
                                      Precision precision) {
  std::vector<double> errors;
  for (const ErrorReport& report : error_curve(decomp, psi0, schedule, times, precision)) {
    errors.push_back(report.state_error);
  }
  return errors;
}

}  // namespace mpt
