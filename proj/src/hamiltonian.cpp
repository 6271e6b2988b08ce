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

#include "mpt/hamiltonian.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace mpt {

HamiltonianDecomposition::HamiltonianDecomposition(std::vector<Operator> terms)
    : terms_(std::move(terms)) {
  for (std::size_t j = 0; j < terms_.size(); ++j) {
    const Operator& term = terms_[j];
    if (term.rows() != term.cols() || term.rows() == 0 ||
        term.rows() != terms_.front().rows()) {
      std::ostringstream msg;
      msg << "HamiltonianDecomposition: term " << j << " is " << term.rows()
          << "x" << term.cols() << ", expected square of dimension "
          << terms_.front().rows();
      throw std::invalid_argument(msg.str());
    }
    const double defect = hermiticity_defect(term);
    if (!(defect < kAlgebraicTol)) {
      std::ostringstream msg;
      msg << "HamiltonianDecomposition: term " << j
          << " is not Hermitian, ||H - H^dagger|| = " << defect;
      throw std::invalid_argument(msg.str());
    }
  }
}

HamiltonianDecomposition build_spin_hamiltonian(const SpinModelParams& p) {
  if (!std::isfinite(p.omega) || !std::isfinite(p.delta) ||
      !std::isfinite(p.e1) || !std::isfinite(p.e2)) {
    throw std::invalid_argument("build_spin_hamiltonian: parameters must be finite");
  }
  Operator pauli_x(2, 2);
  pauli_x << 0.0, 1.0, 1.0, 0.0;
  Operator pauli_z(2, 2);
  pauli_z << 1.0, 0.0, 0.0, -1.0;
  const Operator id2 = Operator::Identity(2, 2);

  const Operator electron = 0.5 * p.omega * pauli_x + 0.5 * p.delta * pauli_z;
  Operator excited = Operator::Zero(2, 2);
  excited(1, 1) = 1.0;
  Operator nuclear = Operator::Zero(2, 2);
  nuclear(0, 0) = p.e1;
  nuclear(1, 1) = p.e2;

  return HamiltonianDecomposition({kron(electron, id2), kron(excited, nuclear)});
}

Operator total(const HamiltonianDecomposition& decomp) {
  if (decomp.empty()) {
    throw std::invalid_argument("total: empty Hamiltonian decomposition");
  }
  Operator sum = Operator::Zero(decomp.dim(), decomp.dim());
  for (const Operator& term : decomp.terms()) sum += term;
  return sum;
}

}  // namespace mpt
