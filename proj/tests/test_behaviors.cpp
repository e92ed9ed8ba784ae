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

#include "dicka/behaviors.hpp"
#include "dicka/random.hpp"
#include "oracles.hpp"

using namespace dicka;
using behaviors::Behavior;
using qmat::ComplexMatrix;
using states::NoiseParameter;

namespace {

const double kTsirelson = 0.5 + 1.0 / (2.0 * std::sqrt(2.0));

Behavior uniform_behavior(std::vector<std::size_t> in, std::vector<std::size_t> out) {
  const behaviors::MixedRadix ri(in), ro(out);
  return Behavior(in, out, std::vector<double>(ri.size() * ro.size(), 1.0 / double(ro.size())));
}

Behavior mix(const Behavior& p, const Behavior& q, double w) {
  std::vector<double> t(p.table().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = (1 - w) * p.table()[i] + w * q.table()[i];
  return Behavior(p.input_alphabets(), p.output_alphabets(), t);
}

Behavior random_behavior(Rng& rng) {
  const std::vector<std::size_t> in{2, 2}, out{2, 2};
  std::vector<double> t;
  for (int x = 0; x < 4; ++x) {
    const auto c = random_probabilities(4, rng, 0.0);
    t.insert(t.end(), c.begin(), c.end());
  }
  return Behavior(in, out, t);
}

/// Real observable cos(t) Z + sin(t) X.
ComplexMatrix zx(double t) {
  return std::cos(t) * qmat::pauli::z() + std::sin(t) * qmat::pauli::x();
}

/// Honest set with Alice's and Bob_1's game observables rotated by the given angles.
behaviors::MeasurementSet rotated_set(const std::array<double, 4>& d) {
  using qmat::Povm;
  return {
      {Povm::from_observable(zx(0 + d[0])), Povm::from_observable(zx(M_PI / 2 + d[1]))},
      {Povm::from_observable(zx(M_PI / 4 + d[2])), Povm::from_observable(zx(-M_PI / 4 + d[3])),
       Povm::from_observable(qmat::pauli::z())},
      {Povm::from_observable(qmat::pauli::z()), Povm::from_observable(qmat::pauli::x())},
  };
}

double honest_value(const qmat::DensityMatrix& rho, const behaviors::MeasurementSet& m) {
  const std::vector<std::size_t> fixed{behaviors::kGameBob2Input};
  return behaviors::parity_chsh_value(behaviors::behavior_from_measurement(rho, m), fixed);
}

}  // namespace

TEST(Behavior, ValidatesTable) {
  EXPECT_THROW(Behavior({2}, {2}, {0.5, 0.5, 0.7, 0.7}), std::invalid_argument);
  EXPECT_THROW(Behavior({2}, {2}, {0.5, 0.5}), std::invalid_argument);
  EXPECT_THROW(Behavior({2}, {2}, {1.1, -0.1, 0.5, 0.5}), std::invalid_argument);
  EXPECT_THROW(Behavior({2, 2}, {2}, {1, 0, 1, 0, 1, 0, 1, 0}), std::invalid_argument);
  const Behavior clamped({1}, {2}, {1.0 + 5e-13, -5e-13});
  EXPECT_EQ(clamped.at(0, 0), 1.0);
  EXPECT_EQ(clamped.at(0, 1), 0.0);
}

TEST(BehaviorFromMeasurement, GhzZBasis) {
  const auto p = behaviors::behavior_from_measurement(states::ghz(3), behaviors::key_measurements());
  for (std::size_t a = 0; a < 8; ++a) EXPECT_NEAR(p.at(0, a), (a == 0 || a == 7) ? 0.5 : 0.0, 1e-15);
}

TEST(BehaviorFromMeasurement, MaximallyMixedIsUniform) {
  const auto p = behaviors::behavior_from_measurement(qmat::maximally_mixed({2, 2, 2}),
                                                      behaviors::honest_measurements());
  for (double v : p.table()) EXPECT_NEAR(v, 1.0 / 8.0, 1e-15);
}

TEST(BehaviorFromMeasurement, KeySettingMatchesDecompositionMixture) {
  const NoiseParameter nu(0.1);
  const auto dec = states::noisy_ghz3(nu);
  const auto m = behaviors::honest_measurements();
  const auto direct = behaviors::behavior_from_measurement(dec.state, m);
  const auto pg = behaviors::behavior_from_measurement(dec.ghz, m);
  const auto pl = behaviors::behavior_from_measurement(dec.chi, m);
  const std::size_t xi = direct.inputs().encode(behaviors::key_setting());
  for (std::size_t a = 0; a < 8; ++a)
    EXPECT_NEAR(direct.at(xi, a), dec.ghz_weight * pg.at(xi, a) + dec.biseparable_weight * pl.at(xi, a), 1e-10);
}

TEST(BehaviorFromMeasurement, RejectsDimensionMismatch) {
  auto m = behaviors::honest_measurements();
  m.pop_back();
  EXPECT_THROW(behaviors::behavior_from_measurement(states::ghz(3), m), std::invalid_argument);
  EXPECT_THROW(behaviors::behavior_from_measurement(states::ghz(3, 3), behaviors::honest_measurements()),
               std::invalid_argument);
}

TEST(BehaviorDistance, Examples) {
  const auto p = behaviors::behavior_from_measurement(states::ghz(3), behaviors::honest_measurements());
  EXPECT_EQ(behaviors::behavior_distance(p, p), 0.0);
  const auto d0 = behaviors::deterministic_behavior({{0, 0}, {0, 0}}, {2, 2});
  const auto d1 = behaviors::deterministic_behavior({{0, 1}, {0, 0}}, {2, 2});
  EXPECT_EQ(behaviors::behavior_distance(d0, d1), 2.0);
  const auto u = uniform_behavior(p.input_alphabets(), p.output_alphabets());
  EXPECT_LE(behaviors::behavior_distance(p, mix(p, u, 0.01)), 2 * 0.01 + 1e-15);
  EXPECT_THROW(behaviors::behavior_distance(p, d0), std::invalid_argument);
}

TEST(BehaviorDistance, MetricProperties) {
  Rng rng(101);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_behavior(rng), b = random_behavior(rng), c = random_behavior(rng);
    EXPECT_NEAR(behaviors::behavior_distance(a, b), behaviors::behavior_distance(b, a), 1e-15);
    EXPECT_LE(behaviors::behavior_distance(a, a), 1e-9);
    EXPECT_LE(behaviors::behavior_distance(a, c),
              behaviors::behavior_distance(a, b) + behaviors::behavior_distance(b, c) + 1e-12);
  }
}

TEST(Nonsignaling, Examples) {
  const auto q = behaviors::behavior_from_measurement(states::noisy_ghz3(NoiseParameter(0.07)).state,
                                                      behaviors::honest_measurements());
  EXPECT_TRUE(behaviors::is_nonsignaling(q, 1e-9));
  EXPECT_TRUE(behaviors::is_nonsignaling(uniform_behavior({2, 3}, {2, 2}), 1e-12));
  // Bob outputs Alice's input.
  std::vector<double> t(16, 0.0);
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y) t[(x * 2 + y) * 4 + x] = 1.0;  // a = 0, b = x
  EXPECT_FALSE(behaviors::is_nonsignaling(Behavior({2, 2}, {2, 2}, t), 1e-9));
}

TEST(ParityChsh, Examples) {
  const std::vector<std::size_t> fixed{1};
  EXPECT_NEAR(behaviors::parity_chsh_value(uniform_behavior({2, 3, 2}, {2, 2, 2}), fixed), 0.5, 1e-15);
  EXPECT_NEAR(honest_value(states::ghz(3), behaviors::honest_measurements()), kTsirelson, 1e-6);
  EXPECT_EQ(behaviors::classical_parity_chsh_max(3), 0.75);
}

TEST(ParityChsh, RejectsNonBinaryOutputs) {
  const std::vector<std::size_t> fixed{};
  EXPECT_THROW(behaviors::parity_chsh_value(uniform_behavior({2, 2}, {3, 2}), fixed), std::invalid_argument);
  EXPECT_THROW(behaviors::parity_chsh_value(uniform_behavior({2, 2}, {2, 2}), std::vector<std::size_t>{0}),
               std::invalid_argument);
}

TEST(ParityChsh, LocalMixturesStayBelowThreeQuarters) {
  // every deterministic strategy, then random convex mixtures of them
  std::vector<Behavior> det;
  for (std::size_t s = 0; s < 64; ++s) {
    std::vector<std::vector<std::size_t>> strat(3);
    for (std::size_t i = 0, c = s; i < 3; ++i, c /= 4) strat[i] = {c & 1u, (c >> 1) & 1u};
    det.push_back(behaviors::deterministic_behavior(strat, {2, 2, 2}));
  }
  const std::vector<std::size_t> fixed{1};
  double best = 0;
  for (const auto& d : det) best = std::max(best, behaviors::parity_chsh_value(d, fixed));
  EXPECT_EQ(best, 0.75);
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    const auto w = random_probabilities(det.size(), rng, 0.5);
    std::vector<double> table(det[0].table().size(), 0.0);
    for (std::size_t k = 0; k < det.size(); ++k)
      for (std::size_t i = 0; i < table.size(); ++i) table[i] += w[k] * det[k].table()[i];
    EXPECT_LE(behaviors::parity_chsh_value(Behavior({2, 2, 2}, {2, 2, 2}, table), fixed), 0.75 + 1e-9);
  }
}

TEST(ParityChsh, HonestSetIsLocallyOptimal) {
  const auto g = states::ghz(3);
  const double base = honest_value(g, behaviors::honest_measurements());
  EXPECT_NEAR(honest_value(g, rotated_set({0, 0, 0, 0})), base, 1e-12);
  for (std::size_t k = 0; k < 4; ++k)
    for (double d : {-0.05, 0.05}) {
      std::array<double, 4> delta{};
      delta[k] = d;
      EXPECT_LE(honest_value(g, rotated_set(delta)), base + 1e-6) << k << " " << d;
    }
}

TEST(ParityChsh, NoisyGhzFollowsCorrelatorScaling) {
  // With local depolarising the two-body correlators shrink by (1-nu)^2 and
  // the three-body ones by (1-nu)^3; the honest set uses one of each kind.
  const auto m = behaviors::honest_measurements();
  for (int i = 0; i <= 20; ++i) {
    const double nu = i / 20.0;
    const double s = 1 - nu;
    const double expected = 0.5 + (s * s + s * s * s) / (4 * std::sqrt(2.0));
    EXPECT_NEAR(honest_value(states::noisy_ghz3(NoiseParameter(nu)).state, m), expected, 1e-8) << nu;
  }
  // agreement with the closed-form winning probability at both ends
  EXPECT_NEAR(honest_value(states::noisy_ghz3(NoiseParameter(0.0)).state, m),
              behaviors::expected_winning_probability(NoiseParameter(0.0), 3), 1e-8);
  EXPECT_NEAR(honest_value(states::noisy_ghz3(NoiseParameter(1.0)).state, m),
              behaviors::expected_winning_probability(NoiseParameter(1.0), 3), 1e-8);
}

TEST(ExpectedWinningProbability, Examples) {
  EXPECT_NEAR(behaviors::expected_winning_probability(NoiseParameter(0.0), 3), kTsirelson, 1e-15);
  EXPECT_NEAR(behaviors::expected_winning_probability(NoiseParameter(1.0), 3), 0.5, 1e-15);
  EXPECT_THROW(behaviors::expected_winning_probability(NoiseParameter(0.0), 2), std::invalid_argument);
}

TEST(CriticalNoise, ThreePartiesAndMonotoneInN) {
  const double c3 = behaviors::critical_noise(3);
  EXPECT_NEAR(c3, 0.1189, 5e-4);
  EXPECT_NEAR(behaviors::expected_winning_probability(NoiseParameter(c3), 3), 0.75, 1e-8);
  const double c4 = behaviors::critical_noise(4);
  EXPECT_GT(c4, 0.0);
  EXPECT_LT(c4, c3);
  EXPECT_LT(behaviors::critical_noise(5), c4);
}

TEST(Qber, Examples) {
  const auto m = behaviors::honest_measurements();
  const auto& key = behaviors::key_setting();
  EXPECT_NEAR(behaviors::qber(behaviors::behavior_from_measurement(states::ghz(3), m), key), 0.0, 1e-15);
  EXPECT_NEAR(behaviors::qber(uniform_behavior({2, 3, 2}, {2, 2, 2}), key), 0.5, 1e-15);
}

TEST(Qber, NoisyGhzMatchesTableSum) {
  const double nu = 0.1;
  const auto p = behaviors::behavior_from_measurement(states::noisy_ghz3(NoiseParameter(nu)).state,
                                                      behaviors::honest_measurements());
  // Z statistics from the decomposition: (1-w) GHZ + w chi
  const double w = 1 - std::pow(1 - nu, 3);
  double err_b1 = 0;
  for (int a = 0; a < 2; ++a)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int b2 = 0; b2 < 2; ++b2)
        if (a != b1) err_b1 += w * oracle::chi_prob(nu, a, b1, b2);
  EXPECT_NEAR(behaviors::qber(p, behaviors::key_setting()), err_b1, 1e-10);
}
