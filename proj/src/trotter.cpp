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
#include <stdexcept>

#include "mpt/product_formula.hpp"

namespace mpt {

namespace {

void require_terms(const HamiltonianDecomposition& decomp, double t) {
  if (decomp.empty()) {
    throw std::invalid_argument("trotter: empty Hamiltonian decomposition");
  }
  if (!std::isfinite(t)) {
    throw std::invalid_argument("trotter: time must be finite");
  }
}

Operator propagate(const Operator& h, const Complex& t) {
  return hermitian_propagator(h, t.real());
}

}  // namespace

Operator second_order_step(const HamiltonianDecomposition& decomp, double t) {
  require_terms(decomp, t);
  return detail::palindromic_step(decomp.terms(), Complex(t), propagate);
}

Operator trotterize(const HamiltonianDecomposition& decomp, double t,
                    std::int64_t l) {
  require_terms(decomp, t);
  if (l < 1) throw std::invalid_argument("trotterize: l must be >= 1");
  return detail::trotterize(decomp.terms(), Complex(t), l, propagate);
}

Operator trotterize(const TrotterStep& step) {
  return trotterize(step.decomp, step.t, step.l);
}

}  // namespace mpt
