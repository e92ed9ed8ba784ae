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

// Multi-party behaviours p(a|x), their distances, Born-rule behaviours of
// measured states, and the parity-CHSH game.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "dicka/qmat.hpp"
#include "dicka/states.hpp"

namespace dicka::behaviors {

inline constexpr double kNormalizationTol = 1e-9;
inline constexpr double kClampWindow = 1e-12;

/// Mixed-radix index over per-party alphabet sizes; party 0 is most
/// significant.
class MixedRadix {
 public:
  MixedRadix() = default;
  explicit MixedRadix(std::vector<std::size_t> radices) : radices_(std::move(radices)) {
    for (auto r : radices_)
      if (r == 0) throw std::invalid_argument("MixedRadix: empty alphabet");
  }

  std::size_t size() const {
    return std::accumulate(radices_.begin(), radices_.end(), std::size_t{1}, std::multiplies<>());
  }
  std::size_t digits() const noexcept { return radices_.size(); }
  const std::vector<std::size_t>& radices() const noexcept { return radices_; }

  std::size_t encode(std::span<const std::size_t> digits) const {
    if (digits.size() != radices_.size()) throw std::invalid_argument("MixedRadix: wrong digit count");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (digits[i] >= radices_[i]) throw std::out_of_range("MixedRadix: digit out of range");
      idx = idx * radices_[i] + digits[i];
    }
    return idx;
  }

  std::vector<std::size_t> decode(std::size_t idx) const {
    std::vector<std::size_t> d(radices_.size());
    for (std::size_t i = radices_.size(); i-- > 0;) {
      d[i] = idx % radices_[i];
      idx /= radices_[i];
    }
    return d;
  }

 private:
  std::vector<std::size_t> radices_;
};

/// Conditional distribution p(a_1..a_N | x_1..x_N).
class Behavior {
 public:
  /// `table` is indexed [joint input][joint output].
  Behavior(std::vector<std::size_t> input_alphabets, std::vector<std::size_t> output_alphabets,
           std::vector<double> table)
      : inputs_(std::move(input_alphabets)), outputs_(std::move(output_alphabets)), table_(std::move(table)) {
    if (inputs_.radices().size() != outputs_.radices().size() || inputs_.digits() == 0)
      throw std::invalid_argument("Behavior: inconsistent party count");
    if (table_.size() != inputs_.size() * outputs_.size())
      throw std::invalid_argument("Behavior: table size does not match alphabets");
    const std::size_t no = outputs_.size();
    for (std::size_t x = 0; x < inputs_.size(); ++x) {
      double sum = 0.0;
      for (std::size_t a = 0; a < no; ++a) {
        double& p = table_[x * no + a];
        if (!(p >= -kClampWindow && p <= 1.0 + kClampWindow))
          throw std::invalid_argument("Behavior: probability outside [0, 1]");
        p = std::clamp(p, 0.0, 1.0);
        sum += p;
      }
      if (std::abs(sum - 1.0) > kNormalizationTol)
        throw std::invalid_argument("Behavior: conditional distribution does not sum to 1");
    }
  }

  std::size_t parties() const noexcept { return inputs_.digits(); }
  const std::vector<std::size_t>& input_alphabets() const noexcept { return inputs_.radices(); }
  const std::vector<std::size_t>& output_alphabets() const noexcept { return outputs_.radices(); }
  const MixedRadix& inputs() const noexcept { return inputs_; }
  const MixedRadix& outputs() const noexcept { return outputs_; }
  std::size_t joint_inputs() const { return inputs_.size(); }
  std::size_t joint_outputs() const { return outputs_.size(); }

  double at(std::size_t joint_input, std::size_t joint_output) const {
    return table_.at(joint_input * outputs_.size() + joint_output);
  }
  double prob(std::span<const std::size_t> a, std::span<const std::size_t> x) const {
    return at(inputs_.encode(x), outputs_.encode(a));
  }
  /// Conditional distribution over joint outputs at one joint input.
  std::span<const double> conditional(std::size_t joint_input) const {
    return std::span<const double>(table_).subspan(joint_input * outputs_.size(), outputs_.size());
  }
  std::span<const double> table() const noexcept { return table_; }

  bool same_shape(const Behavior& o) const {
    return input_alphabets() == o.input_alphabets() && output_alphabets() == o.output_alphabets();
  }

 private:
  MixedRadix inputs_;
  MixedRadix outputs_;
  std::vector<double> table_;
};

/// povms[party][input] acts on factor `party` of rho.
using MeasurementSet = std::vector<std::vector<qmat::Povm>>;

inline Behavior behavior_from_measurement(const qmat::DensityMatrix& rho, const MeasurementSet& povms) {
  const std::size_t n = rho.subsystems();
  if (povms.size() != n) throw std::invalid_argument("behavior_from_measurement: one POVM family per factor");
  std::vector<std::size_t> in_alpha(n), out_alpha(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (povms[i].empty()) throw std::invalid_argument("behavior_from_measurement: party without inputs");
    in_alpha[i] = povms[i].size();
    out_alpha[i] = povms[i].front().outcomes();
    for (const auto& m : povms[i]) {
      if (m.dim() != rho.dims()[i]) throw std::invalid_argument("behavior_from_measurement: POVM dimension mismatch");
      if (m.outcomes() != out_alpha[i])
        throw std::invalid_argument("behavior_from_measurement: inputs of one party differ in outcome count");
    }
  }
  MixedRadix in(in_alpha), out(out_alpha);
  std::vector<double> table(in.size() * out.size());
  const auto& m = rho.matrix();
  const std::size_t dim = rho.dimension();
  for (std::size_t xi = 0; xi < in.size(); ++xi) {
    const auto x = in.decode(xi);
    double sum = 0.0;
    for (std::size_t ai = 0; ai < out.size(); ++ai) {
      const auto a = out.decode(ai);
      qmat::ComplexMatrix effect = qmat::ComplexMatrix::identity(1);
      for (std::size_t i = 0; i < n; ++i) effect = qmat::tensor(effect, povms[i][x[i]].effect(a[i]));
      // Tr[M rho] = sum_{rc} M_rc rho_cr
      qmat::Complex tr{0.0, 0.0};
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) tr += effect(r, c) * m(c, r);
      table[xi * out.size() + ai] = tr.real();
      sum += tr.real();
    }
    for (std::size_t ai = 0; ai < out.size(); ++ai) table[xi * out.size() + ai] /= sum;
  }
  return Behavior(std::move(in_alpha), std::move(out_alpha), std::move(table));
}

/// sup_x || p(.|x) - q(.|x) ||_1, in [0, 2].
inline double behavior_distance(const Behavior& p, const Behavior& q) {
  if (!p.same_shape(q)) throw std::invalid_argument("behavior_distance: alphabet mismatch");
  double d = 0.0;
  for (std::size_t x = 0; x < p.joint_inputs(); ++x) {
    const auto pc = p.conditional(x);
    const auto qc = q.conditional(x);
    double l1 = 0.0;
    for (std::size_t a = 0; a < pc.size(); ++a) l1 += std::abs(pc[a] - qc[a]);
    d = std::max(d, l1);
  }
  return d;
}

/// True iff, for every proper subset S of parties, the marginal on S's
/// outputs depends only on S's inputs (within tol).
inline bool is_nonsignaling(const Behavior& p, double tol) {
  const std::size_t n = p.parties();
  const auto& in = p.inputs();
  const auto& out = p.outputs();
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> sub_in, sub_out;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> (n - 1 - i) & 1u) {
        sub_in.push_back(p.input_alphabets()[i]);
        sub_out.push_back(p.output_alphabets()[i]);
      }
    MixedRadix sin(sub_in), sout(sub_out);
    auto project = [&](const std::vector<std::size_t>& full) {
      std::vector<std::size_t> part;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> (n - 1 - i) & 1u) part.push_back(full[i]);
      return part;
    };
    // reference marginal per sub-input, filled on first encounter
    std::vector<std::vector<double>> ref(sin.size());
    for (std::size_t xi = 0; xi < in.size(); ++xi) {
      const std::size_t sx = sin.encode(project(in.decode(xi)));
      std::vector<double> marg(sout.size(), 0.0);
      for (std::size_t ai = 0; ai < out.size(); ++ai) marg[sout.encode(project(out.decode(ai)))] += p.at(xi, ai);
      if (ref[sx].empty()) {
        ref[sx] = std::move(marg);
        continue;
      }
      for (std::size_t k = 0; k < marg.size(); ++k)
        if (std::abs(marg[k] - ref[sx][k]) > tol) return false;
    }
  }
  return true;
}

/// Winning probability of the parity-CHSH game: Alice (party 0) and Bob_1
/// (party 1) receive uniform x, y in {0,1}; Bobs 2..N-1 play the inputs in
/// `fixed_inputs`. Win iff a + b_1 = x (y + parity(b_2..b_{N-1})) mod 2.
inline double parity_chsh_value(const Behavior& p, std::span<const std::size_t> fixed_inputs) {
  const std::size_t n = p.parties();
  if (n < 2) throw std::invalid_argument("parity_chsh_value: need at least two parties");
  if (fixed_inputs.size() != n - 2)
    throw std::invalid_argument("parity_chsh_value: one fixed input per additional Bob");
  for (auto o : p.output_alphabets())
    if (o != 2) throw std::invalid_argument("parity_chsh_value: outputs must be binary");
  if (p.input_alphabets()[0] < 2 || p.input_alphabets()[1] < 2)
    throw std::invalid_argument("parity_chsh_value: Alice and Bob_1 need two inputs");

  double win = 0.0;
  std::vector<std::size_t> x(n);
  std::copy(fixed_inputs.begin(), fixed_inputs.end(), x.begin() + 2);
  for (std::size_t xa = 0; xa < 2; ++xa)
    for (std::size_t yb = 0; yb < 2; ++yb) {
      x[0] = xa;
      x[1] = yb;
      const std::size_t xi = p.inputs().encode(x);
      for (std::size_t ai = 0; ai < p.joint_outputs(); ++ai) {
        const auto a = p.outputs().decode(ai);
        std::size_t parity = 0;
        for (std::size_t i = 2; i < n; ++i) parity ^= a[i];
        if (((a[0] + a[1]) & 1u) == ((xa * (yb ^ parity)) & 1u)) win += p.at(xi, ai);
      }
    }
  return win / 4.0;
}

/// Deterministic local behaviour: party i answers strategy[i][x_i].
inline Behavior deterministic_behavior(const std::vector<std::vector<std::size_t>>& strategy,
                                       std::vector<std::size_t> output_alphabets) {
  std::vector<std::size_t> in_alpha;
  for (const auto& s : strategy) in_alpha.push_back(s.size());
  MixedRadix in(in_alpha), out(output_alphabets);
  std::vector<double> table(in.size() * out.size(), 0.0);
  for (std::size_t xi = 0; xi < in.size(); ++xi) {
    const auto x = in.decode(xi);
    std::vector<std::size_t> a(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) a[i] = strategy[i][x[i]];
    table[xi * out.size() + out.encode(a)] = 1.0;
  }
  return Behavior(std::move(in_alpha), std::move(output_alphabets), std::move(table));
}

/// Best parity-CHSH value over all deterministic local strategies with two
/// inputs and binary outputs per party; extra Bobs play input 1.
inline double classical_parity_chsh_max(std::size_t n_parties) {
  if (n_parties < 2 || n_parties > 6) throw std::invalid_argument("classical_parity_chsh_max: 2..6 parties");
  const std::size_t per_party = 4;  // functions {0,1} -> {0,1}
  std::size_t total = 1;
  for (std::size_t i = 0; i < n_parties; ++i) total *= per_party;
  const std::vector<std::size_t> fixed(n_parties - 2, 1);
  double best = 0.0;
  for (std::size_t s = 0; s < total; ++s) {
    std::vector<std::vector<std::size_t>> strat(n_parties);
    std::size_t code = s;
    for (std::size_t i = 0; i < n_parties; ++i, code /= per_party) strat[i] = {code & 1u, (code >> 1) & 1u};
    best = std::max(best, parity_chsh_value(deterministic_behavior(strat, std::vector<std::size_t>(n_parties, 2)), fixed));
  }
  return best;
}

/// Alice, Bob_1, Bob_2 measurement set used by the honest protocol.
/// Alice: x=0 Z, x=1 X. Bob_1: y=0 (Z+X)/sqrt2, y=1 (Z-X)/sqrt2, y=2 Z.
/// Bob_2: y=0 Z, y=1 X.
inline MeasurementSet honest_measurements() {
  using qmat::Povm;
  namespace P = qmat::pauli;
  const double r = 1.0 / std::sqrt(2.0);
  return {
      {Povm::from_observable(P::z()), Povm::from_observable(P::x())},
      {Povm::from_observable(r * (P::z() + P::x())), Povm::from_observable(r * (P::z() - P::x())),
       Povm::from_observable(P::z())},
      {Povm::from_observable(P::z()), Povm::from_observable(P::x())},
  };
}

/// Key-generating setting (x, y_1, y_2).
inline const std::vector<std::size_t>& key_setting() {
  static const std::vector<std::size_t> k{0, 2, 0};
  return k;
}

/// Bob_2's input during game rounds.
inline constexpr std::size_t kGameBob2Input = 1;

/// Z (x) Z (x) Z measurement only; the key-setting slice as a one-input behaviour.
inline MeasurementSet key_measurements(std::size_t n_parties = 3) {
  return MeasurementSet(n_parties, {qmat::Povm::from_observable(qmat::pauli::z())});
}

/// 1/2 + (1-nu)^N / (2 sqrt2) + (1-nu)^2 (1 - (1-nu)^{N-2}) / (8 sqrt2).
inline double expected_winning_probability(states::NoiseParameter nu, std::size_t n_parties) {
  if (n_parties < 3) throw std::invalid_argument("expected_winning_probability: need at least three parties");
  const double s = nu.survival();
  const double sqrt2 = std::sqrt(2.0);
  const double sn = std::pow(s, double(n_parties));
  return 0.5 + sn / (2.0 * sqrt2) + s * s * (1.0 - std::pow(s, double(n_parties - 2))) / (8.0 * sqrt2);
}

/// Noise level at which the expected winning probability reaches 3/4.
inline double critical_noise(std::size_t n_parties, double tol = 1e-9) {
  auto f = [&](double nu) { return expected_winning_probability(states::NoiseParameter(nu), n_parties) - 0.75; };
  double lo = 0.0, hi = 1.0;
  if (f(lo) <= 0.0 || f(hi) >= 0.0) throw std::domain_error("critical_noise: no root in (0, 1)");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

/// max_i P(a != b_i) at the key inputs, with party 0 as Alice.
inline double qber(const Behavior& p, std::span<const std::size_t> key_inputs) {
  if (p.parties() < 2) throw std::invalid_argument("qber: need at least two parties");
  const std::size_t xi = p.inputs().encode(key_inputs);
  double worst = 0.0;
  for (std::size_t bob = 1; bob < p.parties(); ++bob) {
    double err = 0.0;
    for (std::size_t ai = 0; ai < p.joint_outputs(); ++ai) {
      const auto a = p.outputs().decode(ai);
      if (a[0] != a[bob]) err += p.at(xi, ai);
    }
    worst = std::max(worst, err);
  }
  return worst;
}

}  // namespace dicka::behaviors
