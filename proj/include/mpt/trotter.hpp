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

#include "mpt/hamiltonian.hpp"
#include "mpt/linalg.hpp"

namespace mpt {

/// One iterated second-order product: S_1^l(t/l) over `decomp`.
struct TrotterStep {
  HamiltonianDecomposition decomp;
  double t = 0.0;
  std::int64_t l = 1;
};

/// Symmetric second-order product S_1(t), the palindromic product of
/// half-step exponentials. For two terms this is
/// e^{-iH_1 t/2} e^{-iH_2 t} e^{-iH_1 t/2}. Exact when the terms commute.
Operator second_order_step(const HamiltonianDecomposition& decomp, double t);

/// S_1(t/l)^l. Throws std::invalid_argument for l < 1 or an empty
/// decomposition.
Operator trotterize(const HamiltonianDecomposition& decomp, double t,
                    std::int64_t l);
Operator trotterize(const TrotterStep& step);

}  // namespace mpt
