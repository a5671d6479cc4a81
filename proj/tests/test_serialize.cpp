/*
 * Copyright 2026 The qcompare Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include <gtest/gtest.h>

#include <cstdlib>
#include <string>

#include "qcompare/errors.hpp"
#include "qcompare/serialize.hpp"

namespace qcompare {
namespace {

TEST(StateFile, Parses) {
  const auto states = parse_state_file(
      R"({"dim": 2, "states": [[[1, 0], [0, 0]], [[0, 0.6], [0.8, 0]]]})");
  ASSERT_EQ(states.size(), 2u);
  EXPECT_EQ(states[1][0], Complex(0.0, 0.6));
}

TEST(StateFile, RenormalizesWithinTolerance) {
  const auto states = parse_state_file(R"({"dim": 2, "states": [[[0.7071068, 0], [0.7071068, 0]]]})");
  EXPECT_NEAR(norm(states[0].amplitudes()), 1.0, 1e-15);
}

TEST(StateFile, Rejects) {
  EXPECT_THROW(parse_state_file("[1, 2]"), DomainError);
  EXPECT_THROW(parse_state_file("{"), DomainError);
  EXPECT_THROW(parse_state_file(R"({"states": [[[1, 0]]]})"), DomainError);
  EXPECT_THROW(parse_state_file(R"({"dim": 2, "states": [[[1, 0]]]})"), DomainError);
  EXPECT_THROW(parse_state_file(R"({"dim": 2, "states": [[[1, 0], [1, 0]]]})"), DomainError);
  EXPECT_THROW(parse_state_file(R"({"dim": 2, "states": [[[1, 0], [0]]]})"), DomainError);
  EXPECT_THROW(parse_state_file(R"({"dim": 2, "states": []})"), DomainError);
}

TEST(GramFile, ExplicitOrFromStates) {
  const auto a = parse_gram_file(R"({"gram": [[[1, 0], [0.6, 0]], [[0.6, 0], [1, 0]]]})");
  const auto b = parse_gram_file(R"({"dim": 2, "states": [[[1, 0], [0, 0]], [[0.6, 0], [0.8, 0]]]})");
  EXPECT_LE(a.matrix().max_abs_diff(b.matrix()), 1e-15);
  EXPECT_THROW(parse_gram_file(R"({"gram": [[[1, 0], [0.6, 0]], [[0.6, 0], [1, 0]]],
                                   "dim": 2, "states": [[[1, 0], [0, 0]]]})"),
               DomainError);
  EXPECT_THROW(parse_gram_file(R"({"other": 1})"), DomainError);
  EXPECT_THROW(parse_gram_file(R"({"gram": [[[1, 0], [0.6, 0]]]})"), DomainError);
  EXPECT_THROW(parse_gram_file(R"({"gram": [[[1, 0], [0.6, 0]], [[0.5, 0], [1, 0]]]})"),
               DomainError);
}

TEST(HexDouble, RoundTrips) {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 0.75}) {
    const std::string h = hex_double(x);
    EXPECT_EQ(std::strtod(h.c_str(), nullptr), x) << h;
  }
}

TEST(Json, DoublesRoundTrip) {
  const double x = 0.1 + 0.2;
  const Json j = to_json(Complex(x, -x));
  EXPECT_EQ(Json::parse(j.dump())[0].get<double>(), x);
}

TEST(Json, ExactMatrixCarriesHex) {
  const ComplexMatrix m{{0.1, Complex(0.0, 1.0 / 3.0)}};
  const Json j = to_json_exact(m);
  const std::string h = j["hex"][0][1][1].get<std::string>();
  EXPECT_EQ(std::strtod(h.c_str(), nullptr), 1.0 / 3.0);
  EXPECT_EQ(j["decimal"][0][0][0].get<double>(), 0.1);
}

TEST(Json, Reports) {
  const Json dims = to_json(subspace_dims(2, 2));
  EXPECT_EQ(dims["sym"], 3);
  EXPECT_EQ(dims["anti"], 1);
  const Json c = to_json(depolarizing_counterexample(2, 2));
  EXPECT_EQ(c["lhs"], 0.75);
}

}  // namespace
}  // namespace qcompare
