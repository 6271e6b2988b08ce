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

#include <random>
#include <stdexcept>

#include "gtest/gtest.h"
#include "support/oracles.hpp"

namespace mpt {
namespace {

TEST(SpinHamiltonian, DefaultParametersMatrix) {
  const HamiltonianDecomposition decomp = build_spin_hamiltonian({0.2, 0.5, 0.3, 0.7});
  ASSERT_EQ(decomp.size(), 2u);
  ASSERT_EQ(decomp.dim(), 4);
  // Substituted by hand: (0.1 X + 0.25 Z) (x) I plus |1><1| (x) diag(0.3, 0.7).
  Eigen::Matrix4d expected;
  expected << 0.25, 0.0, 0.1, 0.0,
              0.0, 0.25, 0.0, 0.1,
              0.1, 0.0, 0.05, 0.0,
              0.0, 0.1, 0.0, 0.45;
  const Operator h = total(decomp);
  EXPECT_LT((h - expected.cast<Complex>()).norm(), 1e-15);
}

TEST(SpinHamiltonian, ZeroParametersGiveZero) {
  const Operator h = total(build_spin_hamiltonian({0.0, 0.0, 0.0, 0.0}));
  EXPECT_EQ(h, Operator(Operator::Zero(4, 4)));
}

TEST(SpinHamiltonian, TermsAreHermitianAndNonCommuting) {
  const HamiltonianDecomposition decomp = build_spin_hamiltonian({});
  for (const Operator& term : decomp.terms()) EXPECT_TRUE(is_hermitian(term));
  EXPECT_TRUE(is_hermitian(total(decomp)));
  const Operator& h1 = decomp.terms()[0];
  const Operator& h2 = decomp.terms()[1];
  EXPECT_GT(spectral_norm(h1 * h2 - h2 * h1), 0.01);
}

TEST(SpinHamiltonian, CouplingActsOnlyOnExcitedElectron) {
  const Operator h2 = build_spin_hamiltonian({0.2, 0.5, 0.3, 0.7}).terms()[1];
  EXPECT_EQ(h2.row(0).norm(), 0.0);
  EXPECT_EQ(h2.row(1).norm(), 0.0);
  EXPECT_EQ(h2.col(0).norm(), 0.0);
  EXPECT_EQ(h2.col(1).norm(), 0.0);
  EXPECT_DOUBLE_EQ(h2(2, 2).real(), 0.3);
  EXPECT_DOUBLE_EQ(h2(3, 3).real(), 0.7);
}

TEST(SpinHamiltonian, RandomParametersSumToTotal) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> value(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const SpinModelParams p{value(rng), value(rng), value(rng), value(rng)};
    const HamiltonianDecomposition decomp = build_spin_hamiltonian(p);
    EXPECT_LT((total(decomp) - decomp.terms()[0] - decomp.terms()[1]).norm(), 1e-15);
    EXPECT_TRUE(is_hermitian(total(decomp)));
  }
}

TEST(SpinHamiltonian, RejectsNonFiniteParameters) {
  EXPECT_THROW(build_spin_hamiltonian({std::nan(""), 0.5, 0.3, 0.7}), std::invalid_argument);
}

TEST(Decomposition, TotalOfSingleTermIsThatTerm) {
  std::mt19937_64 rng(1);
  const Operator h = testing::random_hermitian(rng, 3);
  EXPECT_EQ(total(HamiltonianDecomposition({h})), h);
}

TEST(Decomposition, SumOfRandomTermsIsHermitian) {
  std::mt19937_64 rng(2);
  std::vector<Operator> terms;
  for (int j = 0; j < 5; ++j) terms.push_back(testing::random_hermitian(rng, 4));
  EXPECT_LT(hermiticity_defect(total(HamiltonianDecomposition(terms))), 1e-12);
}

TEST(Decomposition, RejectsBadTermsAndEmptyTotal) {
  Operator skew = Operator::Zero(2, 2);
  skew(0, 1) = 1.0;
  EXPECT_THROW(HamiltonianDecomposition({skew}), std::invalid_argument);
  EXPECT_THROW(HamiltonianDecomposition({Operator::Identity(2, 2), Operator::Identity(3, 3)}),
               std::invalid_argument);
  EXPECT_THROW(total(HamiltonianDecomposition()), std::invalid_argument);
}

}  // namespace
}  // namespace mpt
