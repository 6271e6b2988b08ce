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

#include <span>
#include <vector>

#include "mpt/hamiltonian.hpp"
#include "mpt/linalg.hpp"
#include "mpt/multiproduct.hpp"

namespace mpt {

/// Arithmetic used to evaluate convergence curves. High-order schedules
/// reach the double-precision roundoff floor (~1e-16) at small t, which
/// flattens log-log slopes; kQuad (113-bit significand) pushes the floor to
/// ~1e-32.
enum class Precision { kDouble, kQuad };

/// error_report of the schedule's multi-product at each time.
///
/// In kQuad the Hamiltonian, the initial state (renormalized) and the
/// coefficients are re-evaluated in quad precision, and both the per-term
/// and exact propagators use the Taylor kernel. M - U and M M^† - I are formed
/// in quad; their spectral norms are then taken in double after rescaling,
/// which keeps full relative accuracy.
std::vector<ErrorReport> error_curve(const HamiltonianDecomposition& decomp,
                                     const StateVector& psi0,
                                     const MpSchedule& schedule,
                                     std::span<const double> times,
                                     Precision precision);

/// The state_error column of error_curve.
std::vector<double> state_error_curve(const HamiltonianDecomposition& decomp,
                                      const StateVector& psi0,
                                      const MpSchedule& schedule,
                                      std::span<const double> times,
                                      Precision precision);

}  // namespace mpt
