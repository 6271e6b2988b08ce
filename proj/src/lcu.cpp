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

#include "mpt/lcu.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace mpt {

namespace {

Eigen::Index next_power_of_two(std::size_t k) {
  Eigen::Index n = 1;
  while (static_cast<std::size_t>(n) < k) n *= 2;
  return n;
}

StateVector padded(const StateVector& v, Eigen::Index n) {
  StateVector out = StateVector::Zero(n);
  out.head(v.size()) = v;
  return out;
}

void validate_split(const AmplitudeSplit& split,
                    std::span<const double> coefficients) {
  const auto k = static_cast<Eigen::Index>(coefficients.size());
  if (split.m.size() != k || split.m_prime.size() != k) {
    throw std::invalid_argument("build_lcu: split vectors must have one entry per branch");
  }
  const double norm_m = split.m.norm();
  const double norm_mp = split.m_prime.norm();
  if (std::abs(norm_m - 1.0) > kAlgebraicTol ||
      std::abs(norm_mp - 1.0) > kAlgebraicTol) {
    std::ostringstream msg;
    msg << "build_lcu: split vectors must be unit norm, got |m| = " << norm_m
        << ", |m'| = " << norm_mp;
    throw std::invalid_argument(msg.str());
  }
  double scale = 0.0;
  for (double c : coefficients) scale = std::max(scale, std::abs(c));
  // m_i m'_i c_j = m_j m'_j c_i avoids dividing by a zero coefficient.
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = i + 1; j < k; ++j) {
      const Complex lhs = split.m(i) * split.m_prime(i) * coefficients[j];
      const Complex rhs = split.m(j) * split.m_prime(j) * coefficients[i];
      if (std::abs(lhs - rhs) > kAlgebraicTol * scale) {
        std::ostringstream msg;
        msg << "build_lcu: split violates m_i m'_i / (m_j m'_j) = c_i / c_j at ("
            << i << ", " << j << ")";
        throw std::invalid_argument(msg.str());
      }
    }
  }
}

void require_input(const LcuCircuit& circuit, const StateVector& psi) {
  if (psi.size() != circuit.data_dim()) {
    std::ostringstream msg;
    msg << "LCU input has dimension " << psi.size() << ", circuit data register is "
        << circuit.data_dim();
    throw std::invalid_argument(msg.str());
  }
  if (std::abs(psi.squaredNorm() - 1.0) > kAlgebraicTol) {
    throw std::invalid_argument("LCU input state is not normalized");
  }
}

StateVector embed(const LcuCircuit& circuit, const StateVector& psi) {
  StateVector x = StateVector::Zero(circuit.w().rows());
  x.head(circuit.data_dim()) = psi;
  return x;
}

LcuOutcome post_select(const StateVector& out, Eigen::Index data_dim) {
  LcuOutcome outcome;
  outcome.projected_state = out.head(data_dim);
  const double norm = outcome.projected_state.norm();
  outcome.success_probability = std::min(norm * norm, 1.0);
  if (norm <= kDegenerateNorm) {
    outcome.degenerate = true;
    return outcome;
  }
  outcome.renormalized_state = outcome.projected_state / norm;
  return outcome;
}

}  // namespace

AmplitudeSplit optimal_split(std::span<const double> coefficients) {
  if (coefficients.empty()) {
    throw std::invalid_argument("optimal_split: no coefficients");
  }
  double abs_sum = 0.0;
  for (double c : coefficients) {
    if (!std::isfinite(c)) {
      throw std::invalid_argument("optimal_split: coefficients must be finite");
    }
    abs_sum += std::abs(c);
  }
  if (abs_sum == 0.0) {
    throw std::invalid_argument("optimal_split: all coefficients are zero");
  }
  AmplitudeSplit split;
  split.m.resize(static_cast<Eigen::Index>(coefficients.size()));
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    split.m(static_cast<Eigen::Index>(i)) =
        std::sqrt(Complex(coefficients[i] / abs_sum, 0.0));
  }
  split.m_prime = split.m;
  return split;
}

LcuCircuit build_lcu(std::vector<double> coefficients,
                     std::vector<Operator> branch_ops,
                     std::optional<AmplitudeSplit> split) {
  if (coefficients.empty()) {
    throw std::invalid_argument("build_lcu: at least one branch required");
  }
  if (coefficients.size() != branch_ops.size()) {
    std::ostringstream msg;
    msg << "build_lcu: " << coefficients.size() << " coefficients but "
        << branch_ops.size() << " branch operators";
    throw std::invalid_argument(msg.str());
  }
  const Eigen::Index d = branch_ops.front().rows();
  for (const Operator& a : branch_ops) {
    if (a.rows() != d || a.cols() != d || d == 0) {
      throw std::invalid_argument("build_lcu: branch operators must share one square dimension");
    }
  }
  if (split) {
    validate_split(*split, coefficients);
  } else {
    split = optimal_split(coefficients);
  }

  LcuCircuit circuit;
  const Eigen::Index n = next_power_of_two(coefficients.size());
  circuit.data_dim_ = d;
  circuit.c_ = complete_unitary(padded(split->m, n), Orientation::kColumn);
  circuit.c_prime_ = complete_unitary(padded(split->m_prime, n), Orientation::kRow);

  Operator select = Operator::Identity(n * d, n * d);
  for (std::size_t i = 0; i < branch_ops.size(); ++i) {
    const auto offset = static_cast<Eigen::Index>(i) * d;
    select.block(offset, offset, d, d) = branch_ops[i];
  }
  const Operator id = Operator::Identity(d, d);
  circuit.w_ = kron(circuit.c_prime_, id) * select * kron(circuit.c_, id);

  circuit.coefficients_ = std::move(coefficients);
  circuit.branch_ops_ = std::move(branch_ops);
  circuit.m_ = std::move(split->m);
  circuit.m_prime_ = std::move(split->m_prime);
  return circuit;
}

Operator LcuCircuit::projector() const {
  Operator p = Operator::Zero(w_.rows(), w_.cols());
  p.topLeftCorner(data_dim_, data_dim_).setIdentity();
  return p;
}

Operator LcuCircuit::reflection() const {
  return Operator::Identity(w_.rows(), w_.cols()) - 2.0 * projector();
}

Operator LcuCircuit::target_operator() const {
  Operator sum = Operator::Zero(data_dim_, data_dim_);
  for (std::size_t i = 0; i < branch_ops_.size(); ++i) {
    sum += coefficients_[i] * branch_ops_[i];
  }
  return sum;
}

Operator LcuCircuit::projected_block() const {
  Operator sum = Operator::Zero(data_dim_, data_dim_);
  for (std::size_t i = 0; i < branch_ops_.size(); ++i) {
    const auto idx = static_cast<Eigen::Index>(i);
    sum += (m_(idx) * m_prime_(idx)) * branch_ops_[i];
  }
  return sum;
}

LcuOutcome apply_lcu(const LcuCircuit& circuit, const StateVector& psi) {
  require_input(circuit, psi);
  return post_select(circuit.w() * embed(circuit, psi), circuit.data_dim());
}

LcuOutcome apply_oaa(const LcuCircuit& circuit, const StateVector& psi,
                     int iterations, OaaSign sign) {
  if (iterations < 0) {
    throw std::invalid_argument("apply_oaa: iteration count must be >= 0");
  }
  require_input(circuit, psi);
  StateVector state = circuit.w() * embed(circuit, psi);
  if (iterations > 0) {
    const Operator& w = circuit.w();
    const Operator r = circuit.reflection();
    Operator step = w * r * w.adjoint() * r;
    if (sign == OaaSign::kStandard) step = -step;
    for (int i = 0; i < iterations; ++i) state = step * state;
  }
  return post_select(state, circuit.data_dim());
}

double predicted_probability(double p, int iterations) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream msg;
    msg << "predicted_probability: P must lie in [0, 1], got " << p;
    throw std::invalid_argument(msg.str());
  }
  if (iterations < 0) {
    throw std::invalid_argument("predicted_probability: N must be >= 0");
  }
  const double s = std::sin((2.0 * iterations + 1.0) * std::asin(std::sqrt(p)));
  return s * s;
}

double oaa_identity_residual(const LcuCircuit& circuit) {
  const Operator& w = circuit.w();
  const Operator p = circuit.projector();
  const Operator r = circuit.reflection();
  const Operator amplified = -(w * r * w.adjoint() * r * w);
  const Operator expansion = 3.0 * p * w - 4.0 * w * p * w.adjoint() * p * w;
  return spectral_norm(p * amplified * p - p * expansion * p);
}

OaaErrorReport oaa_error_report(const LcuCircuit& circuit, const StateVector& psi) {
  require_input(circuit, psi);
  OaaErrorReport report;

  // m_i m'_i = lambda c_i for every branch; least squares over the branches.
  Complex weighted(0.0, 0.0);
  double norm2 = 0.0;
  for (std::size_t i = 0; i < circuit.k(); ++i) {
    const auto idx = static_cast<Eigen::Index>(i);
    const double c = circuit.coefficients()[i];
    weighted += c * circuit.m()(idx) * circuit.m_prime()(idx);
    norm2 += c * c;
  }
  report.s = norm2 > 0.0 ? std::abs(weighted) / norm2 : 0.0;
  report.amplitude_offset = report.s - 0.5;
  report.delta = unitarity_defect(circuit.target_operator());
  report.bound = std::abs(0.5 + 3.0 * report.amplitude_offset) * report.delta;
  report.identity_residual = oaa_identity_residual(circuit);

  const LcuOutcome lcu = apply_lcu(circuit, psi);
  const LcuOutcome oaa = apply_oaa(circuit, psi, 1);
  report.observed_error =
      (lcu.degenerate || oaa.degenerate)
          ? std::numeric_limits<double>::quiet_NaN()
          : (oaa.renormalized_state - lcu.renormalized_state).norm();
  return report;
}

}  // namespace mpt
