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

// GHZ states, ideal conference key states and the locally depolarised
// three-qubit GHZ state together with its biseparable decomposition.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "dicka/qmat.hpp"

namespace dicka::states {

using qmat::ComplexMatrix;
using qmat::DensityMatrix;

/// Depolarising strength in [0, 1].
class NoiseParameter {
 public:
  explicit NoiseParameter(double nu) : nu_(nu) {
    if (!(nu >= 0.0 && nu <= 1.0)) throw std::invalid_argument("NoiseParameter: nu must lie in [0, 1]");
  }
  double value() const noexcept { return nu_; }
  double survival() const noexcept { return 1.0 - nu_; }

 private:
  double nu_;
};

/// (1/sqrt(d)) sum_i |i...i>, all amplitudes positive.
inline DensityMatrix ghz(std::size_t n_parties, std::size_t local_dim = 2) {
  if (n_parties < 2) throw std::invalid_argument("ghz: need at least two parties");
  if (local_dim < 2) throw std::invalid_argument("ghz: local dimension must be at least 2");
  std::size_t total = 1;
  for (std::size_t i = 0; i < n_parties; ++i) total *= local_dim;
  // |i...i> sits at i * (1 + d + d^2 + ...).
  std::size_t step = 0;
  for (std::size_t i = 0, p = 1; i < n_parties; ++i, p *= local_dim) step += p;
  std::vector<qmat::Complex> amp(total, 0.0);
  const double a = 1.0 / std::sqrt(double(local_dim));
  for (std::size_t i = 0; i < local_dim; ++i) amp[i * step] = a;
  return qmat::pure_state(std::vector<std::size_t>(n_parties, local_dim), amp);
}

/// (1/K) sum_k |k><k|^{(x)N} (x) sigma_E.
inline DensityMatrix ideal_key_state(std::size_t n_parties, std::size_t key_dim, const DensityMatrix& eve_state) {
  if (key_dim < 2) throw std::invalid_argument("ideal_key_state: key dimension must be at least 2");
  if (n_parties < 1) throw std::invalid_argument("ideal_key_state: need at least one party");
  std::size_t total = 1;
  std::size_t step = 0;
  for (std::size_t i = 0; i < n_parties; ++i) {
    step += total;
    total *= key_dim;
  }
  ComplexMatrix m(total, total);
  for (std::size_t k = 0; k < key_dim; ++k) m(k * step, k * step) = 1.0 / double(key_dim);
  return qmat::tensor(DensityMatrix(std::vector<std::size_t>(n_parties, key_dim), std::move(m)), eve_state);
}

namespace detail {

/// P_site (x) identity elsewhere.
inline ComplexMatrix embed(const ComplexMatrix& op, const std::vector<std::size_t>& dims, std::size_t site) {
  ComplexMatrix out = ComplexMatrix::identity(1);
  for (std::size_t i = 0; i < dims.size(); ++i)
    out = qmat::tensor(out, i == site ? op : ComplexMatrix::identity(dims[i]));
  return out;
}

}  // namespace detail

/// Qubit depolarising channel (1 - nu) rho + nu (I/2 (x) Tr_site rho) on one
/// factor, applied as the Pauli twirl (1/4) sum_P P rho P for the noise part.
inline DensityMatrix depolarize(const DensityMatrix& rho, std::size_t site, NoiseParameter nu) {
  if (site >= rho.subsystems()) throw std::out_of_range("depolarize: site out of range");
  if (rho.dims()[site] != 2) throw std::invalid_argument("depolarize: site is not a qubit");
  const auto& m = rho.matrix();
  ComplexMatrix twirl = m;
  for (const auto& p : {qmat::pauli::x(), qmat::pauli::y(), qmat::pauli::z()}) {
    const auto big = detail::embed(p, rho.dims(), site);
    twirl += big * m * big;
  }
  twirl *= qmat::Complex(0.25);
  ComplexMatrix out = nu.survival() * m + nu.value() * twirl;
  return DensityMatrix(rho.dims(), 0.5 * (out + out.adjoint()));
}

/// One labelled piece of the biseparable remainder, with its weight in the
/// full noisy state (not in chi).
struct WeightedTerm {
  std::string label;
  double weight;
  DensityMatrix state;
};

struct GhzDecomposition {
  double nu;
  double ghz_weight;         // (1-nu)^3
  double biseparable_weight; // 1 - (1-nu)^3
  DensityMatrix ghz;
  DensityMatrix chi;
  std::vector<WeightedTerm> kappa_terms;  // three pair terms and the identity term
  DensityMatrix state;                    // ghz_weight * ghz + biseparable_weight * chi
};

namespace detail {

/// kappa on the two listed qubits of A B1 B2, maximally mixed on the third.
/// kappa_XY = (|00><00| + |11><11|)/2, so the whole term is diagonal.
inline DensityMatrix kappa_pair(std::size_t q1, std::size_t q2) {
  ComplexMatrix m(8, 8);
  for (std::size_t idx = 0; idx < 8; ++idx) {
    const std::size_t bit1 = (idx >> (2 - q1)) & 1u;
    const std::size_t bit2 = (idx >> (2 - q2)) & 1u;
    if (bit1 == bit2) m(idx, idx) = 0.25;
  }
  return DensityMatrix({2, 2, 2}, std::move(m));
}

}  // namespace detail

/// D_nu^{(x)3}(GHZ_3) = (1-nu)^3 GHZ + (1-(1-nu)^3) chi_nu.
///
/// chi_nu mixes kappa_AB1 (x) I/2, kappa_AB2 (x) I/2, I/2 (x) kappa_B1B2 with
/// weight (1-nu)^2 nu each and I/8 with weight (3-2nu) nu^2, all divided by
/// 1-(1-nu)^3. At nu = 0 chi is the nu -> 0 limit (equal pair mixture).
inline GhzDecomposition noisy_ghz3(NoiseParameter noise) {
  const double nu = noise.value();
  const double s = noise.survival();
  const double ghz_w = s * s * s;
  const double bisep_w = 1.0 - ghz_w;
  const double pair_w = s * s * nu;
  const double id_w = (3.0 - 2.0 * nu) * nu * nu;

  std::vector<WeightedTerm> terms{
      {"kappa_AB1 x I_B2/2", pair_w, detail::kappa_pair(0, 1)},
      {"kappa_AB2 x I_B1/2", pair_w, detail::kappa_pair(0, 2)},
      {"I_A/2 x kappa_B1B2", pair_w, detail::kappa_pair(1, 2)},
      {"I/8", id_w, qmat::maximally_mixed({2, 2, 2})},
  };

  ComplexMatrix chi_m(8, 8);
  if (bisep_w > 0.0) {
    for (const auto& t : terms) chi_m += (t.weight / bisep_w) * t.state.matrix();
  } else {
    for (std::size_t k = 0; k < 3; ++k) chi_m += (1.0 / 3.0) * terms[k].state.matrix();
  }
  DensityMatrix chi({2, 2, 2}, std::move(chi_m));
  DensityMatrix g = ghz(3, 2);
  ComplexMatrix full = ghz_w * g.matrix() + bisep_w * chi.matrix();
  DensityMatrix state({2, 2, 2}, std::move(full));
  return GhzDecomposition{nu, ghz_w, bisep_w, std::move(g), std::move(chi), std::move(terms), std::move(state)};
}

}  // namespace dicka::states
