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

#include <sstream>

#include "dicka/attacks.hpp"
#include "dicka/io.hpp"

using namespace dicka;

TEST(FormatNumber, SignificantDigits) {
  EXPECT_EQ(io::format_number(1.0, 12), "1");
  EXPECT_EQ(io::format_number(0.0025, 12), "0.0025");
  EXPECT_EQ(io::format_number(1.0 / 3.0, 12), "0.333333333333");
}

TEST(BehaviorCsv, RoundTrip) {
  const auto p = behaviors::behavior_from_measurement(states::noisy_ghz3(states::NoiseParameter(0.07)).state,
                                                      behaviors::honest_measurements());
  std::stringstream s;
  io::write_behavior_csv(s, p);
  EXPECT_EQ(s.str().substr(0, s.str().find('\n')), "x1,x2,x3,a1,a2,a3,p");
  const auto q = io::read_behavior_csv(s);
  ASSERT_TRUE(q.same_shape(p));
  EXPECT_EQ(behaviors::behavior_distance(p, q), 0.0);
}

TEST(BehaviorCsv, RejectsMalformed) {
  std::stringstream bad_header("y1,a1,p\n0,0,1\n");
  EXPECT_THROW(io::read_behavior_csv(bad_header), std::invalid_argument);
  std::stringstream bad_norm("x1,a1,p\n0,0,0.5\n0,1,0.6\n");
  EXPECT_THROW(io::read_behavior_csv(bad_norm), std::invalid_argument);
}

TEST(JointCsv, RoundTrip) {
  const auto j = attacks::build_cc_attack(states::NoiseParameter(0.05)).joint;
  std::stringstream s;
  io::write_joint_csv(s, j);
  const auto k = io::read_joint_csv(s);
  EXPECT_EQ(k.party_alphabets(), j.party_alphabets());
  EXPECT_EQ(k.eve_alphabet(), j.eve_alphabet());
  for (std::size_t i = 0; i < j.probs().size(); ++i) EXPECT_EQ(k.probs()[i], j.probs()[i]);
}

TEST(CurveCsv, RoundTripAndHeader) {
  const std::vector<bounds::BoundCurve> curves{bounds::trivial_bound_curve({0.0, 0.1}),
                                               bounds::BoundCurve("b", {{0.0, 0.5}})};
  std::stringstream s;
  io::write_curves_csv(s, curves);
  EXPECT_EQ(s.str(), "nu,value,name\n0,1,trivial\n0.1,0.9,trivial\n0,0.5,b\n");
  const auto back = io::read_curves_csv(s);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].name(), "trivial");
  EXPECT_EQ(back[1][0].value, 0.5);
  std::stringstream bad("nu,name\n");
  EXPECT_THROW(io::read_curves_csv(bad), std::invalid_argument);
}
