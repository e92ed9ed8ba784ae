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

// Seeded identity suites: chain-rule expansion of the multipartite CMI,
// S_N / CMI duality, noisy GHZ reconstruction and permutation invariance.
// Instance i of a suite is generated from seed + i.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dicka/qmat.hpp"
#include "dicka/random.hpp"
#include "dicka/secrecy.hpp"
#include "dicka/states.hpp"

namespace dicka::verify {

struct SuiteReport {
  std::string name;
  std::size_t instances = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  std::optional<std::uint64_t> failing_seed;  // worst instance, when it fails
  bool passed() const { return max_error <= tolerance; }
};

struct VerifyConfig {
  std::uint64_t seed = 2718;
  std::size_t expansion_instances = 100;
  std::size_t duality_instances = 200;
  std::size_t reconstruction_points = 20;
  std::size_t permutation_instances = 100;
  /// Test hook: perturbs every suite's error so the run must fail.
  bool corrupt = false;
};

namespace detail {

inline void record(SuiteReport& r, double err, std::uint64_t seed, bool corrupt) {
  if (corrupt) err += 1e-6;
  ++r.instances;
  if (!(err <= r.max_error)) {  // NaN counts as worst
    r.max_error = std::isnan(err) ? INFINITY : err;
    if (!(err <= r.tolerance)) r.failing_seed = seed;
  }
}

/// Qubit state on N parties plus one Eve qubit; parties are single qubits.
inline qmat::Grouping singleton_grouping(std::size_t n) {
  qmat::Grouping g;
  for (std::size_t i = 0; i < n; ++i) g.parties.push_back({i});
  g.eve = {n};
  return g;
}

}  // namespace detail

/// |I(A_1:..:A_N|E) - [I(A_1:A_2|E) + I(A_3:A_1A_2|E) + ...]| on random states.
inline SuiteReport expansion_suite(const VerifyConfig& cfg) {
  SuiteReport r{"expansion", 0, 0.0, 1e-9, std::nullopt};
  for (std::size_t i = 0; i < cfg.expansion_instances; ++i) {
    const std::uint64_t seed = cfg.seed + i;
    Rng rng(seed);
    const std::size_t n = (i % 2 == 0) ? 3 : 4;
    const auto rho = random_density_matrix(std::vector<std::size_t>(n + 1, 2), rng);
    const auto g = detail::singleton_grouping(n);
    const double direct = qmat::quantum_cmi(rho, g);
    double chain = 0.0;
    std::vector<std::size_t> earlier{0};
    for (std::size_t k = 1; k < n; ++k) {
      const std::vector<std::size_t> ak{k};
      chain += qmat::conditional_mutual_information(rho, ak, earlier, g.eve);
      earlier.push_back(k);
    }
    detail::record(r, std::abs(direct - chain), seed, cfg.corrupt);
  }
  return r;
}

/// Random party table for N = 3 with alphabets in {2, 3} and Eve in {1, 2, 3}.
inline secrecy::JointDistribution random_joint(Rng& rng, std::size_t n_parties = 3) {
  std::uniform_int_distribution<std::size_t> alpha(2, 3), eve(1, 3);
  std::vector<std::size_t> a(n_parties);
  std::size_t size = 1;
  for (auto& v : a) size *= (v = alpha(rng));
  const std::size_t e = eve(rng);
  return secrecy::JointDistribution(a, e, random_probabilities(size * e, rng));
}

/// |S_N + I(A_1:..:A_N) - sum_i I(A_i : rest)| on the party marginal.
inline SuiteReport duality_suite(const VerifyConfig& cfg) {
  SuiteReport r{"duality", 0, 0.0, 1e-9, std::nullopt};
  for (std::size_t i = 0; i < cfg.duality_instances; ++i) {
    const std::uint64_t seed = cfg.seed + i;
    Rng rng(seed);
    const auto p = random_joint(rng).drop_eve();
    double rhs = 0.0;
    for (std::size_t k = 0; k < p.parties(); ++k) rhs += secrecy::party_vs_rest_information(p, k);
    detail::record(r, std::abs(secrecy::s_n(p) + secrecy::shannon_cmi(p) - rhs), seed, cfg.corrupt);
  }
  return r;
}

/// noisy_ghz3(nu).state versus depolarize applied to each qubit in turn.
inline SuiteReport reconstruction_suite(const VerifyConfig& cfg) {
  SuiteReport r{"reconstruction", 0, 0.0, 1e-10, std::nullopt};
  const std::size_t pts = cfg.reconstruction_points;
  for (std::size_t i = 0; i < pts; ++i) {
    const double nu = pts > 1 ? double(i) / double(pts - 1) : 0.0;
    const states::NoiseParameter noise(nu);
    const auto dec = states::noisy_ghz3(noise);
    auto direct = states::ghz(3, 2);
    for (std::size_t site = 0; site < 3; ++site) direct = states::depolarize(direct, site, noise);
    const auto mixed = dec.ghz_weight * dec.ghz.matrix() + dec.biseparable_weight * dec.chi.matrix();
    const double err = std::max({qmat::max_abs_diff(dec.state.matrix(), direct.matrix()),
                                 qmat::max_abs_diff(mixed, direct.matrix()),
                                 std::abs(dec.ghz_weight + dec.biseparable_weight - 1.0)});
    detail::record(r, err, cfg.seed + i, cfg.corrupt);
  }
  return r;
}

/// |I(A_1:..:A_N|E) - I(A_s(1):..:A_s(N)|E)| for a random permutation s.
inline SuiteReport permutation_suite(const VerifyConfig& cfg) {
  SuiteReport r{"permutation", 0, 0.0, 1e-9, std::nullopt};
  for (std::size_t i = 0; i < cfg.permutation_instances; ++i) {
    const std::uint64_t seed = cfg.seed + i;
    Rng rng(seed);
    const std::size_t n = (i % 2 == 0) ? 3 : 4;
    const auto rho = random_density_matrix(std::vector<std::size_t>(n + 1, 2), rng);
    auto g = detail::singleton_grouping(n);
    const double base = qmat::quantum_cmi(rho, g);
    std::shuffle(g.parties.begin(), g.parties.end(), rng);
    detail::record(r, std::abs(base - qmat::quantum_cmi(rho, g)), seed, cfg.corrupt);
  }
  return r;
}

inline std::vector<SuiteReport> run_all(const VerifyConfig& cfg) {
  return {expansion_suite(cfg), duality_suite(cfg), reconstruction_suite(cfg), permutation_suite(cfg)};
}

}  // namespace dicka::verify
