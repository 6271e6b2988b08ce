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
#include <vector>

#include "mpt/linalg.hpp"

namespace mpt {

/// Ordered Hermitian terms H_1..H_m of a Hamiltonian, all on one register.
class HamiltonianDecomposition {
 public:
  HamiltonianDecomposition() = default;

  /// Throws std::invalid_argument if a term is non-Hermitian or the
  /// dimensions disagree.
  explicit HamiltonianDecomposition(std::vector<Operator> terms);

  const std::vector<Operator>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  Eigen::Index dim() const { return terms_.empty() ? 0 : terms_.front().rows(); }

 private:
  std::vector<Operator> terms_;
};

/// Electron-nuclear spin model parameters (hbar = 1).
struct SpinModelParams {
  double omega = 0.2;  // Rabi frequency
  double delta = 0.5;  // detuning
  double e1 = 0.3;     // nuclear |0> energy while the electron is excited
  double e2 = 0.7;     // nuclear |1> energy while the electron is excited
};

/// H = (omega/2) X_e + (delta/2) Z_e + |1><1|_e (x) (e1 |0><0| + e2 |1><1|)_n
///
/// Two terms on the 4-dim register ordered electron (x) nuclear, basis
/// |00>,|01>,|10>,|11>: the electron drive (x) I_n, then the coupling term.
HamiltonianDecomposition build_spin_hamiltonian(const SpinModelParams& params);

/// Sum of the terms. Throws std::invalid_argument on an empty decomposition.
Operator total(const HamiltonianDecomposition& decomp);

}  // namespace mpt
