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

#pragma once

// Seeded random instances for identity checks.

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "dicka/qmat.hpp"

namespace dicka {

using Rng = std::mt19937_64;

/// Ginibre-induced random state G G^dagger / Tr; `rank` 0 means full rank.
inline qmat::DensityMatrix random_density_matrix(std::vector<std::size_t> dims, Rng& rng,
                                                 std::size_t rank = 0) {
  const std::size_t n =
      std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  if (rank == 0) rank = n;
  std::normal_distribution<double> normal(0.0, 1.0);
  qmat::ComplexMatrix g(n, rank);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < rank; ++c) g(r, c) = qmat::Complex(normal(rng), normal(rng));
  qmat::ComplexMatrix m = g * g.adjoint();
  const double tr = m.trace().real();
  m *= qmat::Complex(1.0 / tr);
  // Symmetrise away rounding so construction-time validation is tight.
  qmat::ComplexMatrix h = 0.5 * (m + m.adjoint());
  return qmat::DensityMatrix(std::move(dims), std::move(h));
}

/// Random Hermitian matrix with standard normal entries.
inline qmat::ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  qmat::ComplexMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    m(r, r) = normal(rng);
    for (std::size_t c = r + 1; c < n; ++c) {
      m(r, c) = qmat::Complex(normal(rng), normal(rng));
      m(c, r) = std::conj(m(r, c));
    }
  }
  return m;
}

/// Random probability vector of the given length; occasional exact zeros
/// exercise the 0 log 0 convention.
inline std::vector<double> random_probabilities(std::size_t n, Rng& rng, double zero_chance = 0.1) {
  std::exponential_distribution<double> expo(1.0);
  std::bernoulli_distribution zero(zero_chance);
  std::vector<double> p(n);
  double sum = 0.0;
  for (auto& v : p) {
    v = zero(rng) ? 0.0 : expo(rng);
    sum += v;
  }
  if (sum == 0.0) {
    p[0] = 1.0;
    sum = 1.0;
  }
  for (auto& v : p) v /= sum;
  return p;
}

}  // namespace dicka
