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

// CSV formats:
//   behaviour           x1,...,xN,a1,...,aN,p
//   joint distribution  a1,...,aN,e,p
//   bound curves        nu,value,name

#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dicka/behaviors.hpp"
#include "dicka/bounds.hpp"
#include "dicka/secrecy.hpp"

namespace dicka::io {

inline std::string format_number(double v, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant_digits, v);
  return buf;
}

inline constexpr int kTableDigits = 17;
inline constexpr int kCurveDigits = 12;

namespace detail {

inline std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

inline std::string strip(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  return s;
}

inline std::size_t parse_index(const std::string& s) {
  std::size_t pos = 0;
  const unsigned long v = std::stoul(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("csv: bad integer '" + s + "'");
  return v;
}

inline double parse_real(const std::string& s) {
  std::size_t pos = 0;
  const double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("csv: bad number '" + s + "'");
  return v;
}

/// Reads integer-keyed rows; returns keys, probabilities and the header.
struct Rows {
  std::vector<std::string> header;
  std::vector<std::vector<std::size_t>> keys;
  std::vector<double> probs;
};

inline Rows read_rows(std::istream& in) {
  Rows rows;
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("csv: missing header");
  rows.header = split(strip(line));
  if (rows.header.size() < 2 || rows.header.back() != "p") throw std::invalid_argument("csv: header must end in p");
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty()) continue;
    auto f = split(line);
    if (f.size() != rows.header.size()) throw std::invalid_argument("csv: wrong field count");
    std::vector<std::size_t> key;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) key.push_back(parse_index(strip(f[i])));
    rows.keys.push_back(std::move(key));
    rows.probs.push_back(parse_real(strip(f.back())));
  }
  return rows;
}

inline std::vector<std::size_t> alphabets_from(const Rows& rows, std::size_t columns) {
  std::vector<std::size_t> alpha(columns, 1);
  for (const auto& k : rows.keys)
    for (std::size_t i = 0; i < columns; ++i) alpha[i] = std::max(alpha[i], k[i] + 1);
  return alpha;
}

}  // namespace detail

inline void write_behavior_csv(std::ostream& out, const behaviors::Behavior& p) {
  const std::size_t n = p.parties();
  for (std::size_t i = 0; i < n; ++i) out << 'x' << i + 1 << ',';
  for (std::size_t i = 0; i < n; ++i) out << 'a' << i + 1 << ',';
  out << "p\n";
  for (std::size_t xi = 0; xi < p.joint_inputs(); ++xi) {
    const auto x = p.inputs().decode(xi);
    for (std::size_t ai = 0; ai < p.joint_outputs(); ++ai) {
      const auto a = p.outputs().decode(ai);
      for (auto v : x) out << v << ',';
      for (auto v : a) out << v << ',';
      out << format_number(p.at(xi, ai), kTableDigits) << '\n';
    }
  }
}

/// Alphabet sizes are inferred as one more than the largest symbol seen;
/// rows not present are zero.
inline behaviors::Behavior read_behavior_csv(std::istream& in) {
  const auto rows = detail::read_rows(in);
  const std::size_t cols = rows.header.size() - 1;
  if (cols % 2 != 0) throw std::invalid_argument("behavior csv: expected x1..xN,a1..aN,p");
  const std::size_t n = cols / 2;
  for (std::size_t i = 0; i < n; ++i)
    if (rows.header[i] != "x" + std::to_string(i + 1) || rows.header[n + i] != "a" + std::to_string(i + 1))
      throw std::invalid_argument("behavior csv: unexpected header");
  const auto alpha = detail::alphabets_from(rows, cols);
  std::vector<std::size_t> in_alpha(alpha.begin(), alpha.begin() + n), out_alpha(alpha.begin() + n, alpha.end());
  behaviors::MixedRadix ir(in_alpha), orad(out_alpha);
  std::vector<double> table(ir.size() * orad.size(), 0.0);
  for (std::size_t r = 0; r < rows.keys.size(); ++r) {
    const auto& k = rows.keys[r];
    const std::vector<std::size_t> x(k.begin(), k.begin() + n), a(k.begin() + n, k.end());
    table[ir.encode(x) * orad.size() + orad.encode(a)] = rows.probs[r];
  }
  return behaviors::Behavior(std::move(in_alpha), std::move(out_alpha), std::move(table));
}

inline void write_joint_csv(std::ostream& out, const secrecy::JointDistribution& p) {
  const std::size_t n = p.parties();
  for (std::size_t i = 0; i < n; ++i) out << 'a' << i + 1 << ',';
  out << "e,p\n";
  behaviors::MixedRadix r(p.variable_alphabets());
  for (std::size_t idx = 0; idx < r.size(); ++idx) {
    for (auto v : r.decode(idx)) out << v << ',';
    out << format_number(p.probs()[idx], kTableDigits) << '\n';
  }
}

inline secrecy::JointDistribution read_joint_csv(std::istream& in) {
  const auto rows = detail::read_rows(in);
  const std::size_t cols = rows.header.size() - 1;
  if (cols < 2 || rows.header[cols - 1] != "e") throw std::invalid_argument("joint csv: expected a1..aN,e,p");
  const auto alpha = detail::alphabets_from(rows, cols);
  behaviors::MixedRadix r(alpha);
  std::vector<double> probs(r.size(), 0.0);
  for (std::size_t i = 0; i < rows.keys.size(); ++i) probs[r.encode(rows.keys[i])] = rows.probs[i];
  return secrecy::JointDistribution(std::vector<std::size_t>(alpha.begin(), alpha.end() - 1), alpha.back(),
                                    std::move(probs));
}

inline void write_curves_csv(std::ostream& out, std::span<const bounds::BoundCurve> curves) {
  out << "nu,value,name\n";
  for (const auto& c : curves)
    for (const auto& s : c.samples())
      out << format_number(s.nu, kCurveDigits) << ',' << format_number(s.value, kCurveDigits) << ',' << c.name()
          << '\n';
}

/// Groups rows by name, preserving first-appearance order.
inline std::vector<bounds::BoundCurve> read_curves_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || detail::strip(line) != "nu,value,name")
    throw std::invalid_argument("curve csv: expected header nu,value,name");
  std::vector<std::string> order;
  std::map<std::string, std::vector<bounds::Sample>> by_name;
  while (std::getline(in, line)) {
    line = detail::strip(line);
    if (line.empty()) continue;
    auto f = detail::split(line);
    if (f.size() != 3) throw std::invalid_argument("curve csv: wrong field count");
    if (!by_name.count(f[2])) order.push_back(f[2]);
    by_name[f[2]].push_back({detail::parse_real(f[0]), detail::parse_real(f[1])});
  }
  std::vector<bounds::BoundCurve> out;
  for (const auto& name : order) out.emplace_back(name, by_name[name]);
  return out;
}

}  // namespace dicka::io
