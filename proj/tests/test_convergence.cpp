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
#include <vector>

#include "gtest/gtest.h"
#include "mpt/experiments.hpp"
#include "support/oracles.hpp"

namespace mpt {
namespace {

const HamiltonianDecomposition& spin_model() {
  static const HamiltonianDecomposition decomp = build_spin_hamiltonian({});
  return decomp;
}

std::vector<double> log_grid(double lo, double hi, int points) {
  std::vector<double> t;
  for (int i = 0; i < points; ++i) {
    t.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1)));
  }
  return t;
}

TEST(ErrorCurve, QuadAgreesWithDoubleAboveTheFloor) {
  const std::vector<double> times{0.5, 1.0, 2.0, 5.0};
  const MpSchedule schedule = MpSchedule::explicit_list({1, 2});
  const auto d = error_curve(spin_model(), testing::reference_state(), schedule, times,
                             Precision::kDouble);
  const auto q = error_curve(spin_model(), testing::reference_state(), schedule, times,
                             Precision::kQuad);
  for (std::size_t i = 0; i < times.size(); ++i) {
    EXPECT_NEAR(q[i].state_error / d[i].state_error, 1.0, 1e-4);
    EXPECT_NEAR(q[i].operator_error / d[i].operator_error, 1.0, 1e-4);
    EXPECT_NEAR(q[i].nonunitarity / d[i].nonunitarity, 1.0, 1e-3);
  }
}

TEST(ErrorCurve, QuadResolvesHighOrderErrors) {
  const std::vector<double> times{0.05};
  const auto d = state_error_curve(spin_model(), testing::reference_state(),
                                   MpSchedule::modified(1, 4), times, Precision::kDouble);
  const auto q = state_error_curve(spin_model(), testing::reference_state(),
                                   MpSchedule::modified(1, 4), times, Precision::kQuad);
  // The true error is ~4e-27, far below double roundoff.
  EXPECT_LT(q[0], 1e-24);
  EXPECT_GT(q[0], 1e-30);
  EXPECT_GT(d[0], 1e-20);
}

// For k = 1, 2, 3 the state error and the non-unitarity of M(t) both grow as
// t^{2k+1} on [1e-2, 3e-1].
TEST(ErrorCurve, ConvergenceOrders) {
  const std::vector<double> times = log_grid(1e-2, 3e-1, 8);
  for (int k = 1; k <= 3; ++k) {
    const auto reports = error_curve(spin_model(), testing::reference_state(),
                                     MpSchedule::modified(1, k), times, Precision::kQuad);
    std::vector<double> state;
    std::vector<double> unitarity;
    for (const ErrorReport& r : reports) {
      state.push_back(r.state_error);
      unitarity.push_back(r.nonunitarity);
    }
    EXPECT_NEAR(fit_order(times, state), 2 * k + 1, 0.5) << "k = " << k;
    if (k == 1) {
      // A single product is unitary; its defect is pure roundoff.
      for (double u : unitarity) EXPECT_LT(u, 1e-30);
    } else {
      EXPECT_GE(fit_order(times, unitarity), 2 * k + 1 - 0.5) << "k = " << k;
    }
  }
}

TEST(ErrorCurve, DepthMatchedModifiedBeatsOriginal) {
  const std::vector<double> times{0.25, 0.5, 1.0, 2.0};
  for (int k : {3, 4}) {
    const auto original = state_error_curve(spin_model(), testing::reference_state(),
                                            MpSchedule::original(1.0, k), times,
                                            Precision::kQuad);
    const auto matched = state_error_curve(spin_model(), testing::reference_state(),
                                           depth_matched_schedule(1.0, k), times,
                                           Precision::kQuad);
    for (std::size_t i = 0; i < times.size(); ++i) {
      EXPECT_LT(matched[i], original[i]) << "k = " << k << ", t = " << times[i];
    }
  }
}

}  // namespace
}  // namespace mpt
