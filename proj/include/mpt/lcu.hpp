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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mpt/linalg.hpp"

namespace mpt {

/// First column m of C and first row m' of C'.
struct AmplitudeSplit {
  StateVector m;
  StateVector m_prime;
};

/// m_i = m'_i = sqrt(c_i / sum_j |c_j|), principal branch, so a negative c_i
/// gives a purely imaginary m_i and m_i m'_i = c_i / sum_j |c_j| keeps its
/// sign. This split maximizes the post-selection probability.
/// Throws std::invalid_argument if every coefficient is zero.
AmplitudeSplit optimal_split(std::span<const double> coefficients);

/// Explicit matrix form of the LCU circuit W = (C' (x) I) SELECT (C (x) I)
/// on ancilla (x) data, with SELECT applying A_i when the ancilla is |i-1>.
///
/// When k is not a power of two the ancilla is padded with branches of zero
/// coefficient and identity operator.
class LcuCircuit {
 public:
  std::size_t k() const { return coefficients_.size(); }
  Eigen::Index ancilla_dim() const { return c_.rows(); }
  Eigen::Index data_dim() const { return data_dim_; }

  const std::vector<double>& coefficients() const { return coefficients_; }
  const StateVector& m() const { return m_; }
  const StateVector& m_prime() const { return m_prime_; }
  const Operator& c() const { return c_; }
  const Operator& c_prime() const { return c_prime_; }
  const std::vector<Operator>& branch_ops() const { return branch_ops_; }
  const Operator& w() const { return w_; }

  /// P = |0><0| (x) I and R = I - 2P on ancilla (x) data.
  Operator projector() const;
  Operator reflection() const;

  /// sum_i c_i A_i, the operator the circuit targets.
  Operator target_operator() const;
  /// sum_i m_i m'_i A_i, the data block of W selected by ancilla |0>.
  Operator projected_block() const;

 private:
  friend LcuCircuit build_lcu(std::vector<double>, std::vector<Operator>,
                              std::optional<AmplitudeSplit>);
  LcuCircuit() = default;

  std::vector<double> coefficients_;
  StateVector m_;
  StateVector m_prime_;
  Operator c_;
  Operator c_prime_;
  std::vector<Operator> branch_ops_;
  Operator w_;
  Eigen::Index data_dim_ = 0;
};

/// Assembles the circuit. Without a split, optimal_split is used.
///
/// Throws std::invalid_argument on mismatched lengths or dimensions, and on a
/// split that is not unit-norm or violates m_i m'_i / (m_j m'_j) = c_i / c_j.
LcuCircuit build_lcu(std::vector<double> coefficients,
                     std::vector<Operator> branch_ops,
                     std::optional<AmplitudeSplit> split = std::nullopt);

struct LcuOutcome {
  /// (<0| (x) I) applied to the circuit output; not normalized.
  StateVector projected_state;
  /// ||projected_state||^2.
  double success_probability = 0.0;
  /// projected_state / ||projected_state||, empty when degenerate.
  StateVector renormalized_state;
  /// The post-selected branch vanished.
  bool degenerate = false;
};

/// Runs W on |0>|psi> and post-selects the ancilla on |0>.
/// Throws std::invalid_argument if psi is not normalized or has the wrong size.
LcuOutcome apply_lcu(const LcuCircuit& circuit, const StateVector& psi);

enum class OaaSign {
  kStandard,    ///< (-W R W^† R)^N W
  kSimplified,  ///< (W R W^† R)^N W; differs by the global phase (-1)^N
};

/// Oblivious amplitude amplification, then post-selection on ancilla |0>.
/// N = 0 is exactly apply_lcu.
LcuOutcome apply_oaa(const LcuCircuit& circuit, const StateVector& psi,
                     int iterations, OaaSign sign = OaaSign::kStandard);

/// sin^2((2N + 1) arcsin(sqrt(P))). Throws std::invalid_argument for P
/// outside [0, 1] or N < 0.
double predicted_probability(double p, int iterations);

/// Residual of the one-step amplification identity on ancilla-|0> inputs:
/// || P A P - P (3PW - 4 W P W^† P W) P ||_spec with A = -W R W^† R W.
double oaa_identity_residual(const LcuCircuit& circuit);

struct OaaErrorReport {
  /// Amplitude s of the target operator in the projected block.
  double s = 0.0;
  /// s - 1/2.
  double amplitude_offset = 0.0;
  /// || U U^† - I ||_spec for U = sum_i c_i A_i.
  double delta = 0.0;
  /// |1/2 + 3 (s - 1/2)| * delta.
  double bound = 0.0;
  /// oaa_identity_residual of the circuit.
  double identity_residual = 0.0;
  /// Distance between the renormalized one-step OAA output and the
  /// renormalized LCU output; NaN when either is degenerate.
  double observed_error = 0.0;
};

OaaErrorReport oaa_error_report(const LcuCircuit& circuit, const StateVector& psi);

}  // namespace mpt
