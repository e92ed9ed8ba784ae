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

// Classical secrecy monotones on P(A_1..A_N, E): the multipartite conditional
// mutual information, the dual quantity S_N, their intrinsic (channel
// minimised) versions and continuity envelopes.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "dicka/behaviors.hpp"

namespace dicka::secrecy {

using behaviors::MixedRadix;

inline constexpr double kProbFloor = 1e-15;

/// Joint distribution over N party symbols and one eavesdropper symbol.
/// Flat layout: (a_1, ..., a_N, e) with e varying fastest.
class JointDistribution {
 public:
  JointDistribution(std::vector<std::size_t> party_alphabets, std::size_t eve_alphabet, std::vector<double> probs)
      : party_alphabets_(std::move(party_alphabets)), eve_alphabet_(eve_alphabet), probs_(std::move(probs)) {
    if (party_alphabets_.empty()) throw std::invalid_argument("JointDistribution: no parties");
    if (eve_alphabet_ == 0) throw std::invalid_argument("JointDistribution: empty Eve alphabet");
    std::size_t n = eve_alphabet_;
    for (auto a : party_alphabets_) {
      if (a == 0) throw std::invalid_argument("JointDistribution: empty party alphabet");
      n *= a;
    }
    if (probs_.size() != n) throw std::invalid_argument("JointDistribution: table size mismatch");
    double sum = 0.0;
    for (auto& p : probs_) {
      if (p < -1e-12 || !std::isfinite(p)) throw std::invalid_argument("JointDistribution: negative probability");
      p = std::max(p, 0.0);
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("JointDistribution: probabilities do not sum to 1");
  }

  std::size_t parties() const noexcept { return party_alphabets_.size(); }
  const std::vector<std::size_t>& party_alphabets() const noexcept { return party_alphabets_; }
  std::size_t eve_alphabet() const noexcept { return eve_alphabet_; }
  std::span<const double> probs() const noexcept { return probs_; }

  /// Alphabet sizes of all variables, Eve last.
  std::vector<std::size_t> variable_alphabets() const {
    auto v = party_alphabets_;
    v.push_back(eve_alphabet_);
    return v;
  }

  double operator()(std::span<const std::size_t> a, std::size_t e) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < a.size(); ++i) idx = idx * party_alphabets_.at(i) + a[i];
    return probs_.at(idx * eve_alphabet_ + e);
  }

  /// Same party table with Eve replaced by a trivial one-symbol variable.
  JointDistribution drop_eve() const {
    std::vector<double> p(probs_.size() / eve_alphabet_, 0.0);
    for (std::size_t i = 0; i < probs_.size(); ++i) p[i / eve_alphabet_] += probs_[i];
    return JointDistribution(party_alphabets_, 1, std::move(p));
  }

  /// Reorder parties: new party k is old party order[k].
  JointDistribution permuted(std::span<const std::size_t> order) const;

 private:
  std::vector<std::size_t> party_alphabets_;
  std::size_t eve_alphabet_;
  std::vector<double> probs_;
};

/// Row-stochastic map Lambda(f|e), rows indexed by e.
class ClassicalChannel {
 public:
  ClassicalChannel(std::size_t in_alphabet, std::size_t out_alphabet, std::vector<double> matrix)
      : in_(in_alphabet), out_(out_alphabet), m_(std::move(matrix)) {
    if (in_ == 0 || out_ == 0) throw std::invalid_argument("ClassicalChannel: empty alphabet");
    if (m_.size() != in_ * out_) throw std::invalid_argument("ClassicalChannel: matrix size mismatch");
    for (std::size_t e = 0; e < in_; ++e) {
      double sum = 0.0;
      for (std::size_t f = 0; f < out_; ++f) {
        const double v = m_[e * out_ + f];
        if (!(v >= -1e-12 && v <= 1.0 + 1e-12)) throw std::invalid_argument("ClassicalChannel: entry outside [0, 1]");
        sum += v;
      }
      if (std::abs(sum - 1.0) > 1e-10) throw std::invalid_argument("ClassicalChannel: row does not sum to 1");
    }
  }

  static ClassicalChannel identity(std::size_t n) {
    std::vector<double> m(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1.0;
    return ClassicalChannel(n, n, std::move(m));
  }

  /// e -> f = map[e].
  static ClassicalChannel deterministic(std::span<const std::size_t> map, std::size_t out_alphabet) {
    std::vector<double> m(map.size() * out_alphabet, 0.0);
    for (std::size_t e = 0; e < map.size(); ++e) {
      if (map[e] >= out_alphabet) throw std::out_of_range("ClassicalChannel: output symbol out of range");
      m[e * out_alphabet + map[e]] = 1.0;
    }
    return ClassicalChannel(map.size(), out_alphabet, std::move(m));
  }

  static ClassicalChannel constant(std::size_t in_alphabet, std::size_t out_alphabet, std::size_t f0) {
    return deterministic(std::vector<std::size_t>(in_alphabet, f0), out_alphabet);
  }

  std::size_t in_alphabet() const noexcept { return in_; }
  std::size_t out_alphabet() const noexcept { return out_; }
  double operator()(std::size_t f, std::size_t e) const { return m_.at(e * out_ + f); }
  std::span<const double> matrix() const noexcept { return m_; }

 private:
  std::size_t in_, out_;
  std::vector<double> m_;
};

namespace detail {

/// Shannon entropy (bits) of the marginal of a flat table on the variables
/// selected by `keep_mask` (bit i set keeps variable i).
inline double marginal_entropy(std::span<const double> probs, std::span<const std::size_t> alphabets,
                               std::size_t keep_mask) {
  const std::size_t nv = alphabets.size();
  if ((keep_mask & ((std::size_t{1} << nv) - 1)) == 0) return 0.0;
  std::vector<std::size_t> stride(nv, 0);  // marginal stride per variable, 0 if summed out
  std::size_t msize = 1;
  for (std::size_t i = nv; i-- > 0;)
    if (keep_mask >> i & 1u) {
      stride[i] = msize;
      msize *= alphabets[i];
    }
  std::vector<double> marg(msize, 0.0);
  std::vector<std::size_t> digit(nv, 0);
  std::size_t midx = 0;
  for (std::size_t flat = 0; flat < probs.size(); ++flat) {
    marg[midx] += probs[flat];
    // increment mixed-radix counter (last variable fastest)
    for (std::size_t i = nv; i-- > 0;) {
      midx += stride[i];
      if (++digit[i] < alphabets[i]) break;
      midx -= stride[i] * alphabets[i];
      digit[i] = 0;
    }
  }
  double h = 0.0;
  for (double p : marg)
    if (p > kProbFloor) h -= p * std::log2(p);
  return h;
}

inline std::size_t bit(std::size_t i) { return std::size_t{1} << i; }

/// Sum_i H(A_i E) - H(A E) - (N-1) H(E) on a raw table.
inline double cmi_raw(std::span<const double> probs, std::span<const std::size_t> alphabets) {
  const std::size_t n = alphabets.size() - 1;
  const std::size_t eve = bit(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) total += marginal_entropy(probs, alphabets, bit(i) | eve);
  total -= marginal_entropy(probs, alphabets, bit(n + 1) - 1);
  total -= double(n - 1) * marginal_entropy(probs, alphabets, eve);
  return total;
}

/// I(X:Y|Z) with variable masks.
inline double cmi_masks(std::span<const double> probs, std::span<const std::size_t> alphabets, std::size_t x,
                        std::size_t y, std::size_t z) {
  return marginal_entropy(probs, alphabets, x | z) + marginal_entropy(probs, alphabets, y | z) -
         marginal_entropy(probs, alphabets, z) - marginal_entropy(probs, alphabets, x | y | z);
}

/// Telescoping sum over the party order given.
inline double s_n_raw(std::span<const double> probs, std::span<const std::size_t> alphabets,
                      std::span<const std::size_t> order) {
  const std::size_t n = alphabets.size() - 1;
  std::size_t cond = bit(n);
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t rest = 0;
    for (std::size_t j = k + 1; j < n; ++j) rest |= bit(order[j]);
    total += cmi_masks(probs, alphabets, bit(order[k]), rest, cond);
    cond |= bit(order[k]);
  }
  return total;
}

inline std::vector<double> apply_channel_raw(std::span<const double> probs, std::size_t eve_in,
                                             std::span<const double> channel, std::size_t eve_out) {
  const std::size_t rows = probs.size() / eve_in;
  std::vector<double> out(rows * eve_out, 0.0);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t e = 0; e < eve_in; ++e) {
      const double p = probs[r * eve_in + e];
      if (p == 0.0) continue;
      const double* row = channel.data() + e * eve_out;
      for (std::size_t f = 0; f < eve_out; ++f) out[r * eve_out + f] += p * row[f];
    }
  return out;
}

}  // namespace detail

inline JointDistribution JointDistribution::permuted(std::span<const std::size_t> order) const {
  const std::size_t n = parties();
  if (order.size() != n) throw std::invalid_argument("JointDistribution::permuted: bad order");
  std::vector<std::size_t> new_alpha(n);
  for (std::size_t k = 0; k < n; ++k) new_alpha[k] = party_alphabets_.at(order[k]);
  MixedRadix old_r(party_alphabets_), new_r(new_alpha);
  std::vector<double> p(probs_.size(), 0.0);
  for (std::size_t oi = 0; oi < old_r.size(); ++oi) {
    const auto a = old_r.decode(oi);
    std::vector<std::size_t> b(n);
    for (std::size_t k = 0; k < n; ++k) b[k] = a[order[k]];
    const std::size_t ni = new_r.encode(b);
    for (std::size_t e = 0; e < eve_alphabet_; ++e) p[ni * eve_alphabet_ + e] = probs_[oi * eve_alphabet_ + e];
  }
  return JointDistribution(std::move(new_alpha), eve_alphabet_, std::move(p));
}

/// Shannon entropy of the marginal on `variables` (party indices, with
/// index parties() meaning E).
inline double marginal_entropy(const JointDistribution& p, std::span<const std::size_t> variables) {
  std::size_t mask = 0;
  for (auto v : variables) {
    if (v > p.parties()) throw std::out_of_range("marginal_entropy: variable out of range");
    mask |= detail::bit(v);
  }
  const auto alpha = p.variable_alphabets();
  return detail::marginal_entropy(p.probs(), alpha, mask);
}

/// I(A_1:...:A_N|E) = sum_i H(A_i|E) - H(A_1..A_N|E).
inline double shannon_cmi(const JointDistribution& p) {
  const auto alpha = p.variable_alphabets();
  return detail::cmi_raw(p.probs(), alpha);
}

/// S_N = I(A_1:A_2..A_N|E) + I(A_2:A_3..A_N|A_1 E) + ... + I(A_{N-1}:A_N|A_1..A_{N-2} E)
/// in the canonical party order.
inline double s_n(const JointDistribution& p) {
  const auto alpha = p.variable_alphabets();
  std::vector<std::size_t> order(p.parties());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return detail::s_n_raw(p.probs(), alpha, order);
}

/// S_N with the telescoping taken in the given party order.
inline double s_n(const JointDistribution& p, std::span<const std::size_t> order) {
  if (order.size() != p.parties()) throw std::invalid_argument("s_n: order must list every party");
  const auto alpha = p.variable_alphabets();
  return detail::s_n_raw(p.probs(), alpha, order);
}

/// Minimum of S_N over all party orderings.
inline double s_n_symmetrized(const JointDistribution& p) {
  std::vector<std::size_t> order(p.parties());
  std::iota(order.begin(), order.end(), std::size_t{0});
  double best = std::numeric_limits<double>::infinity();
  do best = std::min(best, s_n(p, order));
  while (std::next_permutation(order.begin(), order.end()));
  return best;
}

/// I(A_i : all other parties), unconditioned.
inline double party_vs_rest_information(const JointDistribution& p, std::size_t party) {
  const auto alpha = p.variable_alphabets();
  const std::size_t n = p.parties();
  const std::size_t all = detail::bit(n) - 1;
  return detail::cmi_masks(p.probs(), alpha, detail::bit(party), all & ~detail::bit(party), 0);
}

/// P'(a, f) = sum_e P(a, e) Lambda(f|e).
inline JointDistribution apply_channel(const JointDistribution& p, const ClassicalChannel& channel) {
  if (channel.in_alphabet() != p.eve_alphabet()) throw std::invalid_argument("apply_channel: alphabet mismatch");
  auto out = detail::apply_channel_raw(p.probs(), p.eve_alphabet(), channel.matrix(), channel.out_alphabet());
  const double sum = std::accumulate(out.begin(), out.end(), 0.0);
  for (auto& v : out) v /= sum;
  return JointDistribution(p.party_alphabets(), channel.out_alphabet(), std::move(out));
}

/// Configuration of the channel search behind the intrinsic quantities.
struct SearchBudget {
  /// Set partitions of the Eve alphabet are enumerated when |E| is at most this.
  std::size_t max_exhaustive_alphabet = 10;
  /// Coordinate-descent refinement from the best deterministic channel.
  bool refine = true;
  int sweeps = 200;
  double initial_step = 0.25;
  double min_step = 1e-7;
  double convergence = 1e-9;
  /// Refinement output alphabet is |E| + extra_outputs.
  std::size_t extra_outputs = 0;
  /// Dual objective only: minimise S_N over party orderings.
  bool symmetrize = false;
};

struct ChannelSearchResult {
  double value;
  ClassicalChannel witness;
  /// Value of the best deterministic (set-partition) channel.
  double deterministic_value;
  std::size_t partitions_searched;
};

/// Calls visit(block_of) for every set partition of {0..n-1}, encoded as a
/// restricted growth string; returns the partition count (Bell number).
template <class Visit>
std::size_t for_each_set_partition(std::size_t n, Visit&& visit) {
  if (n == 0) return 0;
  std::vector<std::size_t> rgs(n, 0), maxes(n, 0);
  std::size_t count = 0;
  while (true) {
    visit(std::span<const std::size_t>(rgs), maxes[n - 1] + 1);
    ++count;
    std::size_t i = n;
    while (--i > 0) {
      if (rgs[i] <= maxes[i - 1]) break;
    }
    if (i == 0) return count;
    ++rgs[i];
    maxes[i] = std::max(maxes[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      maxes[j] = maxes[i];
    }
  }
}

namespace detail {

using Objective = std::function<double(std::span<const double> probs, std::span<const std::size_t> alphabets)>;

inline ChannelSearchResult minimize_over_channels(const JointDistribution& p, const SearchBudget& budget,
                                                  const Objective& objective) {
  const std::size_t ne = p.eve_alphabet();
  auto alpha = p.variable_alphabets();
  auto eval = [&](std::span<const double> channel, std::size_t nf) {
    alpha.back() = nf;
    auto q = apply_channel_raw(p.probs(), ne, channel, nf);
    const double v = objective(q, alpha);
    alpha.back() = ne;
    return v;
  };

  // Stage 1: deterministic channels. The identity is always included.
  std::vector<std::size_t> best_map(ne);
  std::iota(best_map.begin(), best_map.end(), std::size_t{0});
  std::size_t best_nf = ne;
  std::vector<double> scratch;
  auto det_value = [&](std::span<const std::size_t> map, std::size_t nf) {
    scratch.assign(ne * nf, 0.0);
    for (std::size_t e = 0; e < ne; ++e) scratch[e * nf + map[e]] = 1.0;
    return eval(scratch, nf);
  };
  double best = det_value(best_map, best_nf);
  std::size_t searched = 1;
  if (ne <= budget.max_exhaustive_alphabet) {
    searched = for_each_set_partition(ne, [&](std::span<const std::size_t> rgs, std::size_t blocks) {
      const double v = det_value(rgs, blocks);
      if (v < best) {
        best = v;
        best_map.assign(rgs.begin(), rgs.end());
        best_nf = blocks;
      }
    });
  }
  const double det_best = best;

  // Stage 2: coordinate descent on a stochastic channel, moving mass between
  // two outputs of one row at a time.
  const std::size_t nf = budget.refine ? std::max(best_nf, ne + budget.extra_outputs) : best_nf;
  std::vector<double> ch(ne * nf, 0.0);
  for (std::size_t e = 0; e < ne; ++e) ch[e * nf + best_map[e]] = 1.0;
  if (budget.refine) {
    double step = budget.initial_step;
    for (int sweep = 0; sweep < budget.sweeps && step >= budget.min_step; ++sweep) {
      const double start = best;
      for (std::size_t e = 0; e < ne; ++e)
        for (std::size_t to = 0; to < nf; ++to)
          for (std::size_t from = 0; from < nf; ++from) {
            if (from == to) continue;
            const double delta = std::min(step, ch[e * nf + from]);
            if (delta <= 0.0) continue;
            ch[e * nf + from] -= delta;
            ch[e * nf + to] += delta;
            const double v = eval(ch, nf);
            if (v < best - 1e-15) {
              best = v;
            } else {
              ch[e * nf + from] += delta;
              ch[e * nf + to] -= delta;
            }
          }
      if (start - best < budget.convergence) step *= 0.5;
    }
  }
  // Clean row sums and report the witness's own value.
  for (std::size_t e = 0; e < ne; ++e) {
    double s = 0.0;
    for (std::size_t f = 0; f < nf; ++f) s += ch[e * nf + f] = std::max(0.0, ch[e * nf + f]);
    for (std::size_t f = 0; f < nf; ++f) ch[e * nf + f] /= s;
  }
  ClassicalChannel witness(ne, nf, ch);
  const double value = eval(witness.matrix(), nf);
  return ChannelSearchResult{value, std::move(witness), det_best, searched};
}

}  // namespace detail

/// Multipartite intrinsic information I(A_1:...:A_N | E-down): the smallest
/// conditional mutual information after Eve processes E with a classical
/// channel. Searched over all deterministic channels (|E| <= 10), then
/// refined; the value is an upper bound on the true infimum.
inline ChannelSearchResult intrinsic_information(const JointDistribution& p, const SearchBudget& budget = {}) {
  return detail::minimize_over_channels(p, budget, [](std::span<const double> q, std::span<const std::size_t> a) {
    return detail::cmi_raw(q, a);
  });
}

/// The same search with S_N as the objective.
inline ChannelSearchResult dual_intrinsic(const JointDistribution& p, const SearchBudget& budget = {}) {
  std::vector<std::vector<std::size_t>> orders;
  std::vector<std::size_t> order(p.parties());
  std::iota(order.begin(), order.end(), std::size_t{0});
  do orders.push_back(order);
  while (budget.symmetrize && std::next_permutation(order.begin(), order.end()));
  return detail::minimize_over_channels(p, budget, [&](std::span<const double> q, std::span<const std::size_t> a) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& o : orders) best = std::min(best, detail::s_n_raw(q, a, o));
    return best;
  });
}

enum class ContinuityFlavor { ConditionalEntropy, ConditionalMutualInformation };

/// g(eps) = (1 + eps) log2(1 + eps) - eps log2 eps, g(0) = 0.
inline double continuity_g(double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw std::domain_error("continuity_g: eps must lie in [0, 1]");
  if (eps == 0.0) return 0.0;
  return (1.0 + eps) * std::log2(1.0 + eps) - eps * std::log2(eps);
}

/// 2 eps log_dim + g(eps) for conditional entropies; 2 eps log_dim + 2 g(eps)
/// for conditional mutual information.
inline double continuity_envelope(double eps, double log_dim, ContinuityFlavor flavor) {
  const double g = continuity_g(eps);
  return 2.0 * eps * log_dim + (flavor == ContinuityFlavor::ConditionalEntropy ? g : 2.0 * g);
}

}  // namespace dicka::secrecy
