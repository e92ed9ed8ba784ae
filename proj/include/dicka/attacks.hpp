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

// Convex-combination attack on the parity-CHSH protocol at the key setting
// and Eve's post-processing of her label.

#include <stdexcept>
#include <vector>

#include "dicka/behaviors.hpp"
#include "dicka/secrecy.hpp"
#include "dicka/states.hpp"

namespace dicka::attacks {

using behaviors::Behavior;
using secrecy::ClassicalChannel;
using secrecy::JointDistribution;
using states::NoiseParameter;

/// Eve symbol 0 is '?', symbol 1 + k is the outcome string with joint index k.
inline constexpr std::size_t kEveUnknown = 0;
inline constexpr std::size_t kEveAlphabet = 9;

/// Post-processed alphabet F = {0, 1, ?}.
inline constexpr std::size_t kGuessUnknown = 2;
inline constexpr std::size_t kGuessAlphabet = 3;

struct CcAttack {
  double nu;
  double local_weight;
  Behavior p_ghz;    // key-setting slice, one input per party
  Behavior p_local;  // key-setting slice
  JointDistribution joint;
};

/// Born probabilities of chi_nu under Z (x) Z (x) Z.
inline Behavior local_behavior_from_chi(NoiseParameter nu) {
  return behaviors::behavior_from_measurement(states::noisy_ghz3(nu).chi, behaviors::key_measurements());
}

inline Behavior ghz_key_behavior() {
  return behaviors::behavior_from_measurement(states::ghz(3, 2), behaviors::key_measurements());
}

/// P(a, e) = (1 - w) P_nonlocal(a) [e = ?] + w P_local(a) [e = a].
/// Any decomposition of the key-setting statistics can be plugged in here.
inline CcAttack build_cc_attack(double nu, double local_weight, Behavior p_nonlocal, Behavior p_local) {
  if (!(local_weight >= 0.0 && local_weight <= 1.0))
    throw std::invalid_argument("build_cc_attack: local weight must lie in [0, 1]");
  if (p_nonlocal.joint_inputs() != 1 || !p_nonlocal.same_shape(p_local))
    throw std::invalid_argument("build_cc_attack: expects matching single-setting behaviours");
  const std::size_t outcomes = p_local.joint_outputs();
  const std::size_t eve = outcomes + 1;
  std::vector<double> probs(outcomes * eve, 0.0);
  for (std::size_t a = 0; a < outcomes; ++a) {
    probs[a * eve + kEveUnknown] = (1.0 - local_weight) * p_nonlocal.at(0, a);
    probs[a * eve + 1 + a] = local_weight * p_local.at(0, a);
  }
  JointDistribution joint(p_local.output_alphabets(), eve, std::move(probs));
  return CcAttack{nu, local_weight, std::move(p_nonlocal), std::move(p_local), std::move(joint)};
}

/// Attack built from the depolarised-GHZ decomposition with local weight
/// 1 - (1-nu)^3.
inline CcAttack build_cc_attack(NoiseParameter nu) {
  if (nu.value() >= 1.0) throw std::invalid_argument("build_cc_attack: nu must be below 1");
  const auto dec = states::noisy_ghz3(nu);
  return build_cc_attack(nu.value(), dec.biseparable_weight, ghz_key_behavior(),
                         behaviors::behavior_from_measurement(dec.chi, behaviors::key_measurements()));
}

/// Lambda: '?' -> '?'; an all-equal outcome (a, a, a) -> a; anything else -> '?'.
inline ClassicalChannel guess_channel() {
  std::vector<std::size_t> map(kEveAlphabet, kGuessUnknown);
  map[1 + 0b000] = 0;
  map[1 + 0b111] = 1;
  return ClassicalChannel::deterministic(map, kGuessAlphabet);
}

inline JointDistribution eve_postprocess(const CcAttack& attack) {
  if (attack.joint.eve_alphabet() != kEveAlphabet || attack.joint.parties() != 3)
    throw std::invalid_argument("eve_postprocess: expects the three-party attack");
  return secrecy::apply_channel(attack.joint, guess_channel());
}

}  // namespace dicka::attacks
