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

// Bound curves versus depolarising noise, partition (cut) bounds and the
// XOR key relay along a path of parties.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "dicka/attacks.hpp"
#include "dicka/secrecy.hpp"

namespace dicka::bounds {

inline constexpr const char* kIntrinsicName = "intrinsic";
inline constexpr const char* kDualName = "dual";
inline constexpr const char* kTrivialName = "trivial";
inline constexpr const char* kProxyName = "dw_lower_PROXY";

struct Sample {
  double nu;
  double value;
};

/// Named sequence of (nu, value) samples with strictly increasing nu.
class BoundCurve {
 public:
  BoundCurve(std::string name, std::vector<Sample> samples) : name_(std::move(name)), samples_(std::move(samples)) {
    for (std::size_t i = 0; i < samples_.size(); ++i) {
      if (!std::isfinite(samples_[i].value) || samples_[i].value < -1e-9)
        throw std::invalid_argument("BoundCurve: value must be finite and nonnegative");
      if (i > 0 && !(samples_[i].nu > samples_[i - 1].nu))
        throw std::invalid_argument("BoundCurve: nu must be strictly increasing");
    }
  }
  const std::string& name() const noexcept { return name_; }
  const std::vector<Sample>& samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  const Sample& operator[](std::size_t i) const { return samples_.at(i); }

 private:
  std::string name_;
  std::vector<Sample> samples_;
};

/// nu_min, nu_min + step, ... up to nu_max inclusive (within 1e-9 of a step).
inline std::vector<double> make_grid(double nu_min, double nu_max, double nu_step) {
  if (!(nu_step > 0.0) || !(nu_min >= 0.0) || !(nu_max <= 1.0) || !(nu_min < nu_max))
    throw std::invalid_argument("make_grid: need 0 <= nu_min < nu_max <= 1 and nu_step > 0");
  const auto count = static_cast<std::size_t>(std::floor((nu_max - nu_min) / nu_step + 1e-9)) + 1;
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) grid[i] = std::min(nu_max, nu_min + double(i) * nu_step);
  return grid;
}

inline std::vector<double> default_grid() { return make_grid(0.0, 0.13, 0.0025); }

/// out[i] = fn(in[i]) computed on `workers` threads; the result does not
/// depend on the worker count.
template <class Fn>
std::vector<double> parallel_map(const std::vector<double>& in, unsigned workers, Fn&& fn) {
  std::vector<double> out(in.size());
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(in.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < in.size(); ++i) out[i] = fn(in[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < in.size();) {
        if (failed) return;
        try {
          out[i] = fn(in[i]);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
          return;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

struct CurveOptions {
  std::size_t n_parties = 3;
  unsigned workers = 1;
  secrecy::SearchBudget budget{};
};

namespace detail {

inline void require_three_parties(const CurveOptions& opt) {
  if (opt.n_parties != 3)
    throw std::invalid_argument("bound curves: the attack decomposition is only constructed for three parties");
}

inline void require_grid(const std::vector<double>& grid) {
  for (double nu : grid)
    if (!(nu >= 0.0 && nu < 1.0)) throw std::invalid_argument("bound curves: grid must lie in [0, 1)");
}

inline std::vector<Sample> zip(const std::vector<double>& grid, const std::vector<double>& values) {
  std::vector<Sample> s(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) s[i] = {grid[i], values[i]};
  return s;
}

}  // namespace detail

/// (1/(N-1)) I(A:B_1:B_2 | F) at the fixed guess channel, or (1/(N-1)) times
/// the channel-minimised intrinsic information when `minimize` is set.
inline double intrinsic_bound(double nu, bool minimize, const CurveOptions& opt = {}) {
  detail::require_three_parties(opt);
  const auto attack = attacks::build_cc_attack(states::NoiseParameter(nu));
  const double scale = 1.0 / double(opt.n_parties - 1);
  if (!minimize) return scale * secrecy::shannon_cmi(attacks::eve_postprocess(attack));
  return scale * secrecy::intrinsic_information(attack.joint, opt.budget).value;
}

/// S_N at the fixed guess channel, or channel-minimised; no prefactor.
inline double dual_bound(double nu, bool minimize, const CurveOptions& opt = {}) {
  detail::require_three_parties(opt);
  const auto attack = attacks::build_cc_attack(states::NoiseParameter(nu));
  if (!minimize) {
    const auto post = attacks::eve_postprocess(attack);
    return opt.budget.symmetrize ? secrecy::s_n_symmetrized(post) : secrecy::s_n(post);
  }
  return secrecy::dual_intrinsic(attack.joint, opt.budget).value;
}

/// One-way rate proxy max(0, H(A|E) - max_i H(A|B_i)) on the attack joint
/// with Eve holding her undisturbed label.
inline double dw_lower_proxy(double nu, const CurveOptions& opt = {}) {
  detail::require_three_parties(opt);
  const auto attack = attacks::build_cc_attack(states::NoiseParameter(nu));
  const auto& j = attack.joint;
  const std::size_t eve = j.parties();
  const std::size_t alice = 0;
  const double h_a_e = secrecy::marginal_entropy(j, std::vector<std::size_t>{alice, eve}) -
                       secrecy::marginal_entropy(j, std::vector<std::size_t>{eve});
  double worst = 0.0;
  for (std::size_t b = 1; b < j.parties(); ++b) {
    const double h_a_b = secrecy::marginal_entropy(j, std::vector<std::size_t>{alice, b}) -
                         secrecy::marginal_entropy(j, std::vector<std::size_t>{b});
    worst = std::max(worst, h_a_b);
  }
  return std::max(0.0, h_a_e - worst);
}

inline std::string minimize_label(bool minimize) { return minimize ? "minimized" : "unminimized"; }

inline BoundCurve intrinsic_bound_curve(const std::vector<double>& grid, bool minimize, const CurveOptions& opt = {}) {
  detail::require_grid(grid);
  auto v = parallel_map(grid, opt.workers, [&](double nu) { return intrinsic_bound(nu, minimize, opt); });
  return BoundCurve(std::string(kIntrinsicName) + "_" + minimize_label(minimize), detail::zip(grid, v));
}

inline BoundCurve dual_bound_curve(const std::vector<double>& grid, bool minimize, const CurveOptions& opt = {}) {
  detail::require_grid(grid);
  auto v = parallel_map(grid, opt.workers, [&](double nu) { return dual_bound(nu, minimize, opt); });
  return BoundCurve(std::string(kDualName) + "_" + minimize_label(minimize), detail::zip(grid, v));
}

/// Single-site decomposition weight times log2(d) with d = 2: 1 - nu.
inline BoundCurve trivial_bound_curve(const std::vector<double>& grid) {
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) v[i] = 1.0 - states::NoiseParameter(grid[i]).value();
  return BoundCurve(kTrivialName, detail::zip(grid, v));
}

inline BoundCurve dw_lower_proxy_curve(const std::vector<double>& grid, const CurveOptions& opt = {}) {
  detail::require_grid(grid);
  auto v = parallel_map(grid, opt.workers, [&](double nu) { return dw_lower_proxy(nu, opt); });
  return BoundCurve(kProxyName, detail::zip(grid, v));
}

/// Blocks of parties; each party appears in exactly one block.
using Partition = std::vector<std::vector<std::size_t>>;

struct PartitionBoundInput {
  Partition partition;
  double value;
};

/// Partitions of {0..N-1} into 2..N-1 blocks, in restricted-growth order.
inline std::vector<Partition> enumerate_partitions(std::size_t n_parties) {
  if (n_parties < 3) throw std::invalid_argument("enumerate_partitions: need at least three parties");
  std::vector<Partition> out;
  secrecy::for_each_set_partition(n_parties, [&](std::span<const std::size_t> rgs, std::size_t blocks) {
    if (blocks < 2 || blocks > n_parties - 1) return;
    Partition p(blocks);
    for (std::size_t i = 0; i < rgs.size(); ++i) p[rgs[i]].push_back(i);
    out.push_back(std::move(p));
  });
  return out;
}

inline bool is_nontrivial_partition(const Partition& p, std::size_t n_parties) {
  if (p.size() < 2 || p.size() > n_parties - 1) return false;
  std::vector<int> seen(n_parties, 0);
  for (const auto& block : p) {
    if (block.empty()) return false;
    for (auto i : block) {
      if (i >= n_parties || seen[i]++) return false;
    }
  }
  return std::find(seen.begin(), seen.end(), 0) == seen.end();
}

/// Minimum of the per-cut bounds.
inline double partition_bound(std::span<const PartitionBoundInput> values) {
  if (values.empty()) throw std::invalid_argument("partition_bound: no partitions supplied");
  double best = values.front().value;
  for (const auto& v : values) best = std::min(best, v.value);
  return best;
}

/// For a path 0 - 1 - ... - (N-1) whose edge i joins parties i and i+1 with
/// bipartite key bound edge_bounds[i]: each nontrivial partition is bounded
/// by the total over the edges it cuts.
inline std::vector<PartitionBoundInput> path_cut_bounds(std::span<const double> edge_bounds) {
  const std::size_t n = edge_bounds.size() + 1;
  std::vector<PartitionBoundInput> out;
  for (auto& p : enumerate_partitions(n)) {
    std::vector<std::size_t> block_of(n);
    for (std::size_t b = 0; b < p.size(); ++b)
      for (auto i : p[b]) block_of[i] = b;
    double v = 0.0;
    for (std::size_t e = 0; e + 1 < n; ++e)
      if (block_of[e] != block_of[e + 1]) v += edge_bounds[e];
    out.push_back({std::move(p), v});
  }
  return out;
}

using Bits = std::vector<std::uint8_t>;

struct RelayTranscript {
  std::vector<Bits> edge_keys;   // k_{i,i+1}, private to the edge
  Bits secret;                   // r, drawn by party 0
  std::vector<Bits> broadcasts;  // public, one per edge
  std::vector<Bits> final_keys;  // each party's recovered r
};

inline Bits xor_bits(const Bits& a, const Bits& b) {
  if (a.size() != b.size()) throw std::invalid_argument("xor_bits: length mismatch");
  Bits out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
  return out;
}

/// One-time-pad relay of `secret` along the path given the edge keys.
inline RelayTranscript relay_run(std::vector<Bits> edge_keys, Bits secret) {
  if (edge_keys.size() < 2) throw std::invalid_argument("relay_run: need at least three parties");
  for (const auto& k : edge_keys)
    if (k.size() != secret.size()) throw std::invalid_argument("relay_run: key length mismatch");
  RelayTranscript t{std::move(edge_keys), std::move(secret), {}, {}};
  t.final_keys.push_back(t.secret);
  for (std::size_t e = 0; e < t.edge_keys.size(); ++e) {
    // party e sends its copy of r masked with k_{e,e+1}; party e+1 unmasks it
    t.broadcasts.push_back(xor_bits(t.final_keys[e], t.edge_keys[e]));
    t.final_keys.push_back(xor_bits(t.broadcasts.back(), t.edge_keys[e]));
  }
  return t;
}

inline RelayTranscript relay_simulate(std::size_t n_parties, std::size_t key_len, std::uint64_t seed) {
  if (n_parties < 3) throw std::invalid_argument("relay_simulate: need at least three parties");
  if (key_len < 1) throw std::invalid_argument("relay_simulate: key length must be positive");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  auto draw = [&] {
    Bits b(key_len);
    for (auto& v : b) v = coin(rng) ? 1 : 0;
    return b;
  };
  std::vector<Bits> keys(n_parties - 1);
  for (auto& k : keys) k = draw();
  Bits r = draw();
  return relay_run(std::move(keys), std::move(r));
}

}  // namespace dicka::bounds
