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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mpt/hamiltonian.hpp"
#include "mpt/linalg.hpp"

namespace mpt {

// Tolerance on sum_q c_q = 1.
inline constexpr double kCoefficientSumTol = 1e-9;

/// Multi-product coefficients c_q = prod_{p != q} L(q)^2 / (L(q)^2 - L(p)^2).
///
/// Requires strictly increasing positive iteration counts. Throws
/// std::invalid_argument on an empty list, a nonpositive entry, or a
/// repeated/decreasing entry (a repeated value is a zero denominator).
std::vector<double> mp_coefficients(std::span<const std::int64_t> iterations);

enum class ScheduleKind { kModified, kOriginal, kExplicit };

/// Iteration counts L(1..k) with their multi-product coefficients.
class MpSchedule {
 public:
  /// L(q) = a * 2^q, q = 1..k.
  static MpSchedule modified(std::int64_t a, int k);
  /// L(q) = q for q < k, L(k) = round(e^{gamma k}).
  static MpSchedule original(double gamma, int k);
  static MpSchedule explicit_list(std::vector<std::int64_t> iterations);

  ScheduleKind kind() const { return kind_; }
  const std::vector<std::int64_t>& iterations() const { return iterations_; }
  const std::vector<double>& coefficients() const { return coefficients_; }
  std::size_t k() const { return iterations_.size(); }
  /// The a of a modified schedule, 0 otherwise.
  std::int64_t a() const { return a_; }
  /// The gamma of an original schedule, 0 otherwise.
  double gamma() const { return gamma_; }

  /// sum_q |c_q|.
  double abs_sum() const;
  /// 1 / (sum_q |c_q|)^2, the LCU success probability for a unitary target.
  double lcu_probability() const;

  /// Human-readable form, e.g. "modified:2,4 -> {4,8,16,32}".
  std::string describe() const;

 private:
  MpSchedule(ScheduleKind kind, std::vector<std::int64_t> iterations,
             std::int64_t a, double gamma);

  ScheduleKind kind_;
  std::vector<std::int64_t> iterations_;
  std::vector<double> coefficients_;
  std::int64_t a_ = 0;
  double gamma_ = 0.0;
};

/// Schedule with L(q) = round(e^{gamma k} 2^{q-k} / 3): same largest circuit
/// depth as MpSchedule::original(gamma, k) but geometric spacing.
MpSchedule depth_matched_schedule(double gamma, int k);

/// Parses "4,8,16,32", "modified:a,k" or "original:gamma,k".
MpSchedule parse_schedule(std::string_view text);

/// sum_q c_q S_1^{L(q)}(t / L(q)). Generally not unitary.
Operator mp_operator(const HamiltonianDecomposition& decomp, double t,
                     const MpSchedule& schedule);

struct ErrorReport {
  double t = 0.0;
  /// || exp(-iHt)|psi0> - M|psi0>/||M|psi0>|| ||, no phase alignment.
  double state_error = 0.0;
  /// || M - exp(-iHt) ||_spec.
  double operator_error = 0.0;
  /// || M M^† - I ||_spec.
  double nonunitarity = 0.0;
  /// M|psi0> vanished; state_error is not meaningful.
  bool degenerate = false;
};

/// Compares M against exact evolution of `psi0` under the total Hamiltonian.
/// Throws std::invalid_argument if psi0 is not normalized or sizes differ.
ErrorReport error_report(const HamiltonianDecomposition& decomp, double t,
                         const Operator& m, const StateVector& psi0);

/// As ErrorReport::state_error, after removing the global phase between the
/// two states. Diagnostic only.
double phase_aligned_state_error(const HamiltonianDecomposition& decomp,
                                 double t, const Operator& m,
                                 const StateVector& psi0);

}  // namespace mpt
