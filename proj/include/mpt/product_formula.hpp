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

// Scalar-generic product-formula kernels shared by the double-precision API
// and the quad-precision convergence path.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "mpt/linalg.hpp"

namespace mpt::detail {

// Iteration counts at or below this use repeated multiplication.
inline constexpr std::int64_t kRepeatedPowerLimit = 32;

template <class Scalar>
BasicOperator<Scalar> power_repeated(const BasicOperator<Scalar>& m,
                                     std::int64_t l) {
  BasicOperator<Scalar> out = m;
  for (std::int64_t i = 1; i < l; ++i) out = out * m;
  return out;
}

template <class Scalar>
BasicOperator<Scalar> power_binary(BasicOperator<Scalar> base,
                                   std::int64_t l) {
  BasicOperator<Scalar> out =
      BasicOperator<Scalar>::Identity(base.rows(), base.cols());
  while (l > 0) {
    if (l & 1) out = out * base;
    l >>= 1;
    if (l > 0) base = base * base;
  }
  return out;
}

template <class Scalar>
BasicOperator<Scalar> power(const BasicOperator<Scalar>& m, std::int64_t l) {
  if (l < 1) throw std::invalid_argument("power: exponent must be >= 1");
  return l <= kRepeatedPowerLimit ? power_repeated(m, l) : power_binary(m, l);
}

/// prod_{j=1..m} e^{-iH_j t/2} prod_{k=m..1} e^{-iH_k t/2}.
template <class Scalar, class Propagator>
BasicOperator<Scalar> palindromic_step(
    const std::vector<BasicOperator<Scalar>>& terms, const Scalar& t,
    Propagator&& propagate) {
  const Scalar half_t = t / Scalar(2);
  std::vector<BasicOperator<Scalar>> halves;
  halves.reserve(terms.size());
  for (const auto& term : terms) halves.push_back(propagate(term, half_t));

  const Eigen::Index n = terms.front().rows();
  BasicOperator<Scalar> step = BasicOperator<Scalar>::Identity(n, n);
  for (const auto& h : halves) step = step * h;
  for (auto it = halves.rbegin(); it != halves.rend(); ++it) step = step * *it;
  return step;
}

template <class Scalar, class Propagator>
BasicOperator<Scalar> trotterize(const std::vector<BasicOperator<Scalar>>& terms,
                                 const Scalar& t, std::int64_t l,
                                 Propagator&& propagate) {
  if (l < 1) throw std::invalid_argument("trotterize: l must be >= 1");
  return power(palindromic_step(terms, t / Scalar(static_cast<double>(l)),
                                propagate),
               l);
}

/// c_q = prod_{p != q} L(q)^2 / (L(q)^2 - L(p)^2), evaluated in Real.
template <class Real>
std::vector<Real> mp_coefficients(std::span<const std::int64_t> iterations) {
  std::vector<Real> out(iterations.size());
  for (std::size_t q = 0; q < iterations.size(); ++q) {
    const Real lq = Real(static_cast<double>(iterations[q]));
    Real c(1);
    for (std::size_t p = 0; p < iterations.size(); ++p) {
      if (p == q) continue;
      const Real lp = Real(static_cast<double>(iterations[p]));
      c *= (lq * lq) / ((lq - lp) * (lq + lp));
    }
    out[q] = c;
  }
  return out;
}

/// sum_q c_q S_1^{L(q)}(t / L(q)).
template <class Scalar, class Real, class Propagator>
BasicOperator<Scalar> mp_operator(const std::vector<BasicOperator<Scalar>>& terms,
                                  const Scalar& t,
                                  std::span<const std::int64_t> iterations,
                                  std::span<const Real> coefficients,
                                  Propagator&& propagate) {
  const Eigen::Index n = terms.front().rows();
  BasicOperator<Scalar> sum = BasicOperator<Scalar>::Zero(n, n);
  for (std::size_t q = 0; q < iterations.size(); ++q) {
    sum += Scalar(coefficients[q]) *
           trotterize(terms, t, iterations[q], propagate);
  }
  return sum;
}

}  // namespace mpt::detail
