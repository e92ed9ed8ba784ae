// Copyright 2026 The dicka Authors
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

#include <gtest/gtest.h>

#include <cmath>

#include "dicka/qmat.hpp"
#include "dicka/random.hpp"
#include "dicka/states.hpp"
#include "oracles.hpp"

using namespace dicka;
using qmat::ComplexMatrix;
using qmat::DensityMatrix;

namespace {

oracle::Grid to_grid(const ComplexMatrix& m) {
  oracle::Grid g(m.rows(), std::vector<oracle::Cx>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) g[r][c] = m(r, c);
  return g;
}

double grid_diff(const ComplexMatrix& m, const oracle::Grid& g) {
  double d = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) d = std::max(d, std::abs(m(r, c) - g[r][c]));
  return d;
}

DensityMatrix qubit_diag(double p0) { return DensityMatrix(ComplexMatrix::diagonal(std::vector<double>{p0, 1 - p0})); }

}  // namespace

TEST(ComplexMatrix, RejectsEntryCountMismatch) {
  EXPECT_THROW(ComplexMatrix(2, 2, std::vector<qmat::Complex>(3)), std::invalid_argument);
}

TEST(Tensor, IdentityTimesIdentity) {
  EXPECT_EQ(max_abs_diff(qmat::tensor(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
                         ComplexMatrix::identity(4)),
            0.0);
}

TEST(Tensor, BasisProjectors) {
  const auto r = qmat::tensor(qmat::basis_state({2}, 0), qmat::basis_state({2}, 1));
  EXPECT_EQ(r.dims(), (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(max_abs_diff(r.matrix(), ComplexMatrix::diagonal(std::vector<double>{0, 1, 0, 0})), 0.0);
}

TEST(Tensor, MatchesIndexFormula) {
  Rng rng(11);
  for (int t = 0; t < 10; ++t) {
    const auto a = random_hermitian(2, rng), b = random_hermitian(2, rng);
    EXPECT_LT(grid_diff(qmat::tensor(a, b), oracle::kron(to_grid(a), to_grid(b))), 1e-15);
  }
}

TEST(DensityMatrix, ValidatesAtConstruction) {
  EXPECT_THROW(DensityMatrix(ComplexMatrix::identity(2)), std::invalid_argument);  // trace 2
  EXPECT_THROW(DensityMatrix(ComplexMatrix(2, 2, {0.5, 0.1, 0.2, 0.5})), std::invalid_argument);  // not Hermitian
  EXPECT_THROW(DensityMatrix(ComplexMatrix::diagonal(std::vector<double>{1.5, -0.5})), std::invalid_argument);
  EXPECT_THROW(DensityMatrix({2, 2}, ComplexMatrix::identity(2) * qmat::Complex(0.5)), std::invalid_argument);
}

TEST(PartialTrace, ProductStateReturnsFactor) {
  Rng rng(3);
  const auto a = random_density_matrix({2}, rng), b = random_density_matrix({3}, rng);
  const auto r = qmat::partial_trace(qmat::tensor(a, b), {0});
  EXPECT_LT(max_abs_diff(r.matrix(), a.matrix()), 1e-14);
  EXPECT_LT(max_abs_diff(qmat::partial_trace(qmat::tensor(a, b), {1}).matrix(), b.matrix()), 1e-14);
}

TEST(PartialTrace, GhzMarginalIsMaximallyMixed) {
  const auto r = qmat::partial_trace(states::ghz(3), {1});
  EXPECT_LT(max_abs_diff(r.matrix(), qmat::maximally_mixed({2}).matrix()), 1e-15);
}

TEST(PartialTrace, MatchesIndexSumOracle) {
  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    const auto rho = random_density_matrix({2, 2, 2}, rng);
    const auto r = qmat::partial_trace(rho, {0, 2});
    EXPECT_LT(grid_diff(r.matrix(), oracle::trace_middle_qubit(to_grid(rho.matrix()))), 1e-15);
    EXPECT_NEAR(r.matrix().trace().real(), 1.0, 1e-12);
  }
}

TEST(PartialTrace, KeepsOriginalOrderingAndRejectsBadIndex) {
  Rng rng(6);
  const auto a = random_density_matrix({2}, rng), b = random_density_matrix({3}, rng);
  const auto c = random_density_matrix({2}, rng);
  const auto abc = qmat::tensor(qmat::tensor(a, b), c);
  const auto r = qmat::partial_trace(abc, {2, 0});
  EXPECT_EQ(r.dims(), (std::vector<std::size_t>{2, 2}));
  EXPECT_LT(max_abs_diff(r.matrix(), qmat::tensor(a, c).matrix()), 1e-14);
  EXPECT_THROW(qmat::partial_trace(abc, {3}), std::out_of_range);
  EXPECT_THROW(qmat::partial_trace(abc, std::span<const std::size_t>{}), std::invalid_argument);
}

TEST(Eigen, DiagonalAndPauli) {
  const auto d = qmat::eig_hermitian(ComplexMatrix::diagonal(std::vector<double>{3, 1, 2}));
  EXPECT_EQ(d.values, (std::vector<double>{3, 2, 1}));
  const auto x = qmat::eig_hermitian(qmat::pauli::x());
  EXPECT_NEAR(x.values[0], 1.0, 1e-14);
  EXPECT_NEAR(x.values[1], -1.0, 1e-14);
}

TEST(Eigen, TwoByTwoMatchesCharacteristicPolynomial) {
  Rng rng(17);
  for (int t = 0; t < 50; ++t) {
    const auto m = random_hermitian(2, rng);
    const auto e = qmat::eig_hermitian(m);
    const auto ref = oracle::eig2(m(0, 0).real(), m(0, 1), m(1, 1).real());
    EXPECT_NEAR(e.values[0], ref[0], 1e-12);
    EXPECT_NEAR(e.values[1], ref[1], 1e-12);
  }
}

TEST(Eigen, ReconstructsAndIsUnitary) {
  Rng rng(19);
  for (std::size_t n : {3u, 8u, 16u, 32u, 64u}) {
    const auto m = random_hermitian(n, rng);
    const auto e = qmat::eig_hermitian(m);
    ComplexMatrix lambda = ComplexMatrix::diagonal(e.values);
    EXPECT_LT(max_abs_diff(e.vectors * lambda * e.vectors.adjoint(), m), 1e-8) << n;
    EXPECT_LT(max_abs_diff(e.vectors.adjoint() * e.vectors, ComplexMatrix::identity(n)), 1e-8) << n;
    EXPECT_TRUE(std::is_sorted(e.values.rbegin(), e.values.rend()));
  }
}

TEST(Eigen, RejectsNonHermitian) {
  EXPECT_THROW(qmat::eig_hermitian(ComplexMatrix(2, 2, {0.0, 1.0, 0.0, 0.0})), std::invalid_argument);
}

TEST(Entropy, KnownValues) {
  EXPECT_NEAR(qmat::von_neumann_entropy(states::ghz(3)), 0.0, 1e-12);
  EXPECT_NEAR(qmat::von_neumann_entropy(qmat::maximally_mixed({2})), 1.0, 1e-14);
  EXPECT_NEAR(qmat::von_neumann_entropy(qubit_diag(0.75)), oracle::h2(0.25), 1e-14);
}

TEST(Entropy, AdditiveOnProducts) {
  Rng rng(23);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_density_matrix({2}, rng), b = random_density_matrix({3}, rng, 2);
    EXPECT_NEAR(qmat::von_neumann_entropy(qmat::tensor(a, b)),
                qmat::von_neumann_entropy(a) + qmat::von_neumann_entropy(b), 1e-9);
  }
}

TEST(QuantumCmi, ProductStateIsZero) {
  Rng rng(29);
  auto rho = random_density_matrix({2}, rng);
  for (int i = 0; i < 3; ++i) rho = qmat::tensor(rho, random_density_matrix({2}, rng));
  EXPECT_NEAR(qmat::quantum_cmi(rho, {{{0}, {1}, {2}}, {3}}), 0.0, 1e-9);
  EXPECT_NEAR(qmat::quantum_cmi(rho, {{{0, 1}, {2, 3}}, {}}), 0.0, 1e-9);
}

TEST(QuantumCmi, GhzWithoutEve) {
  // Pure GHZ: three maximally mixed marginals and a pure global state.
  EXPECT_NEAR(qmat::quantum_cmi(states::ghz(3), {{{0}, {1}, {2}}, {}}), 3.0, 1e-10);
  // Dephased GHZ (|000><000| + |111><111|)/2: global entropy 1, so 3 - 1.
  std::vector<double> d(8, 0.0);
  d[0] = d[7] = 0.5;
  const DensityMatrix dephased({2, 2, 2}, ComplexMatrix::diagonal(d));
  EXPECT_NEAR(qmat::quantum_cmi(dephased, {{{0}, {1}, {2}}, {}}), 2.0, 1e-10);
}

TEST(QuantumCmi, RejectsMalformedPartition) {
  const auto g = states::ghz(3);
  EXPECT_THROW(qmat::quantum_cmi(g, {{{0}, {1}}, {}}), std::invalid_argument);          // 2 uncovered
  EXPECT_THROW(qmat::quantum_cmi(g, {{{0}, {0, 1}}, {2}}), std::invalid_argument);      // overlap
  EXPECT_THROW(qmat::quantum_cmi(g, {{{0}, {1}, {2}}, {3}}), std::invalid_argument);    // out of range
  EXPECT_THROW(qmat::quantum_cmi(g, {{{0}, {}, {1, 2}}, {}}), std::invalid_argument);   // empty group
}

TEST(QuantumCmi, ExpansionIdentityOnRandomStates) {
  Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 3 + t % 2;
    const auto rho = random_density_matrix(std::vector<std::size_t>(n + 1, 2), rng);
    qmat::Grouping g;
    for (std::size_t i = 0; i < n; ++i) g.parties.push_back({i});
    g.eve = {n};
    double chain = 0.0;
    std::vector<std::size_t> earlier{0};
    for (std::size_t k = 1; k < n; ++k) {
      chain += qmat::conditional_mutual_information(rho, std::vector<std::size_t>{k}, earlier, g.eve);
      earlier.push_back(k);
    }
    EXPECT_NEAR(qmat::quantum_cmi(rho, g), chain, 1e-9);
    EXPECT_GE(qmat::quantum_cmi(rho, g), -1e-9);
  }
}

TEST(RelativeEntropy, Basics) {
  Rng rng(37);
  const auto rho = random_density_matrix({2, 2}, rng);
  EXPECT_NEAR(qmat::relative_entropy(rho, rho), 0.0, 1e-8);
  EXPECT_TRUE(std::isinf(qmat::relative_entropy(qmat::basis_state({2}, 0), qmat::basis_state({2}, 1))));
  const double expected = 0.5 * (std::log2(0.5) - std::log2(0.75)) + 0.5 * (std::log2(0.5) - std::log2(0.25));
  EXPECT_NEAR(qmat::relative_entropy(qmat::maximally_mixed({2}), qubit_diag(0.75)), expected, 1e-12);
}

TEST(RelativeEntropy, PositiveOnDistinctPairs) {
  Rng rng(41);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_density_matrix({3}, rng), b = random_density_matrix({3}, rng);
    EXPECT_GT(qmat::relative_entropy(a, b), 1e-8);
  }
}

TEST(RelativeEntropy, PartialSupportOverlapIsInfinite) {
  // rho = |+><+| has weight on ker |0><0| even though <+|0><0|+> > 0.
  const std::vector<qmat::Complex> plus{M_SQRT1_2, M_SQRT1_2};
  EXPECT_TRUE(std::isinf(qmat::relative_entropy(qmat::pure_state({2}, plus), qmat::basis_state({2}, 0))));
}

TEST(Purify, PureInputGetsTrivialEnvironment) {
  const auto p = qmat::purify(states::ghz(2));
  EXPECT_EQ(p.dims(), (std::vector<std::size_t>{2, 2, 1}));
  EXPECT_LT(max_abs_diff(p.matrix(), states::ghz(2).matrix()), 1e-10);
}

TEST(Purify, MaximallyMixedQubitGivesBellState) {
  const auto p = qmat::purify(qmat::maximally_mixed({2}));
  EXPECT_EQ(p.dims(), (std::vector<std::size_t>{2, 2}));
  EXPECT_NEAR(p.purity(), 1.0, 1e-10);
  EXPECT_NEAR(qmat::von_neumann_entropy(qmat::partial_trace(p, {0})), 1.0, 1e-10);
}

TEST(Purify, RoundTripsRandomStates) {
  Rng rng(43);
  for (int t = 0; t < 10; ++t) {
    const auto rho = random_density_matrix({2, 2}, rng, t % 2 ? 2 : 0);
    const auto p = qmat::purify(rho);
    EXPECT_NEAR(p.purity(), 1.0, 1e-8);
    EXPECT_LT(max_abs_diff(qmat::partial_trace(p, {0, 1}).matrix(), rho.matrix()), 1e-8);
    if (t % 2) EXPECT_EQ(p.dims().back(), 2u);
  }
}

TEST(Povm, ValidatesEffects) {
  EXPECT_NO_THROW(qmat::Povm::from_observable(qmat::pauli::z()));
  EXPECT_THROW(qmat::Povm({ComplexMatrix::identity(2), ComplexMatrix::identity(2)}), std::invalid_argument);
  EXPECT_THROW(qmat::Povm::from_observable(ComplexMatrix::identity(2) * qmat::Complex(2.0)), std::invalid_argument);
}
