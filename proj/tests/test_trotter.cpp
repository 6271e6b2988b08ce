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

#include "mpt/trotter.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "mpt/multiproduct.hpp"
#include "mpt/product_formula.hpp"
#include "support/oracles.hpp"

namespace mpt {
namespace {

const HamiltonianDecomposition& spin_model() {
  static const HamiltonianDecomposition decomp = build_spin_hamiltonian({});
  return decomp;
}

double operator_error(double t, std::int64_t l) {
  return spectral_norm(trotterize(spin_model(), t, l) -
                       hermitian_propagator(total(spin_model()), t));
}

TEST(SecondOrderStep, CommutingTermsAreExact) {
  Operator a = Operator::Zero(2, 2);
  a(0, 0) = 0.4;
  a(1, 1) = -1.3;
  Operator b = Operator::Zero(2, 2);
  b(0, 0) = 2.0;
  b(1, 1) = 0.7;
  const HamiltonianDecomposition decomp({a, b});
  EXPECT_LT(spectral_norm(second_order_step(decomp, 3.0) -
                          hermitian_propagator(total(decomp), 3.0)),
            1e-10);
}

TEST(SecondOrderStep, ExplicitTwoTermForm) {
  const auto& terms = spin_model().terms();
  const double t = 0.7;
  const Operator expected = hermitian_propagator(terms[0], t / 2) *
                            hermitian_propagator(terms[1], t) *
                            hermitian_propagator(terms[0], t / 2);
  EXPECT_LT(spectral_norm(second_order_step(spin_model(), t) - expected), 1e-13);
}

TEST(SecondOrderStep, UnitaryAndTimeReversible) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Operator> terms;
    for (int j = 0; j < 3; ++j) terms.push_back(testing::random_hermitian(rng, 4));
    const HamiltonianDecomposition decomp(terms);
    const double t = 0.1 * trial - 1.0;
    const Operator s = second_order_step(decomp, t);
    EXPECT_LT(unitarity_defect(s), 1e-10);
    EXPECT_LT(spectral_norm(second_order_step(decomp, -t) - s.adjoint()), 1e-12);
  }
}

TEST(SecondOrderStep, LocalErrorIsThirdOrder) {
  std::vector<double> times;
  std::vector<double> errors;
  for (double t = 1e-3; t <= 1e-1 * 1.0001; t *= std::pow(10.0, 0.25)) {
    times.push_back(t);
    errors.push_back(operator_error(t, 1));
  }
  EXPECT_NEAR(testing::loglog_slope(times, errors), 3.0, 0.2);
  const double ratio_hi = operator_error(1e-2, 1) / 1e-6;
  const double ratio_lo = operator_error(1e-3, 1) / 1e-9;
  EXPECT_NEAR(ratio_hi / ratio_lo, 1.0, 0.1);
}

TEST(Trotterize, SingleStepMatchesSecondOrderStep) {
  EXPECT_EQ(trotterize(spin_model(), 2.5, 1), second_order_step(spin_model(), 2.5));
}

TEST(Trotterize, RejectsZeroSteps) {
  EXPECT_THROW(trotterize(spin_model(), 1.0, 0), std::invalid_argument);
  EXPECT_THROW(trotterize(HamiltonianDecomposition(), 1.0, 1), std::invalid_argument);
}

TEST(Trotterize, GlobalErrorScalesAsInverseSquare) {
  std::vector<double> steps{12, 24, 48, 96};
  std::vector<double> errors;
  for (double l : steps) errors.push_back(operator_error(10.0, static_cast<std::int64_t>(l)));
  EXPECT_NEAR(testing::loglog_slope(steps, errors), -2.0, 0.2);
}

TEST(Trotterize, CompositionIdentity) {
  const double t = 7.0;
  const std::int64_t l = 96;
  const Operator full = trotterize(spin_model(), t, l);
  for (std::int64_t a : {2, 3, 4, 8, 12, 32, 96}) {
    const Operator part = trotterize(spin_model(), t / a, l / a);
    Operator composed = part;
    for (std::int64_t i = 1; i < a; ++i) composed = composed * part;
    EXPECT_LT(spectral_norm(full - composed), 1e-10) << "a = " << a;
  }
}

TEST(Trotterize, PowerStrategiesAgree) {
  const Operator step = second_order_step(spin_model(), 0.1);
  for (std::int64_t l : {1, 2, 31, 32, 33, 96, 257}) {
    EXPECT_LT(spectral_norm(detail::power_repeated(step, l) - detail::power_binary(step, l)),
              1e-12)
        << "l = " << l;
  }
}

TEST(Trotterize, DefaultTrotterCurveStaysClose) {
  // l = 96 is the standard-Trotter reference; its state error stays small
  // over the plotted range.
  const StateVector psi = testing::reference_state();
  for (double t : {5.0, 10.0, 20.0, 30.0}) {
    const ErrorReport report =
        error_report(spin_model(), t, trotterize(spin_model(), t, 96), psi);
    EXPECT_LT(report.state_error, 1e-2) << "t = " << t;
    EXPECT_LT(report.nonunitarity, 1e-10);
  }
}

}  // namespace
}  // namespace mpt
