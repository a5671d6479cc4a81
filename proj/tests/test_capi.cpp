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


// Exercises the library only through its C interface.

#include <gtest/gtest.h>

#include <cmath>
#include <memory>
#include <string>

#include <json.hpp>

#include "qcompare/qcompare.h"

namespace {

using nlohmann::json;

constexpr const char* kPairFile =
    R"({"dim": 2, "states": [[[1, 0], [0, 0]], [[0.6, 0], [0.8, 0]]]})";

class CApi : public ::testing::Test {
 protected:
  void SetUp() override { ctx_ = qc_context_create(); }
  void TearDown() override { qc_context_free(ctx_); }

  json take(qc_status status, char* text) {
    EXPECT_EQ(status, QC_OK) << qc_context_last_error(ctx_);
    if (text == nullptr) return nullptr;
    json j = json::parse(text);
    qc_string_free(text);
    return j;
  }

  qc_context* ctx_ = nullptr;
};

TEST_F(CApi, VersionAndStatusNames) {
  EXPECT_STRNE(qc_version(), "");
  EXPECT_STREQ(qc_status_name(QC_OK), "ok");
  EXPECT_STREQ(qc_status_name(QC_ERR_CAPACITY), "capacity");
}

TEST_F(CApi, Dims) {
  qc_dims dims{};
  ASSERT_EQ(qc_subspace_dims(ctx_, 3, 3, &dims), QC_OK);
  EXPECT_EQ(dims.sym, 10u);
  EXPECT_EQ(dims.anti, 1u);
  EXPECT_EQ(dims.total, 27u);
  EXPECT_EQ(qc_subspace_dims(ctx_, 10, 30, &dims), QC_ERR_CAPACITY);
  EXPECT_STRNE(qc_context_last_error(ctx_), "");
  EXPECT_EQ(qc_subspace_dims(nullptr, 2, 2, &dims), QC_ERR_INVALID);
}

TEST_F(CApi, StatesAndProbabilities) {
  qc_states* states = nullptr;
  ASSERT_EQ(qc_states_from_json(ctx_, kPairFile, &states), QC_OK);
  EXPECT_EQ(qc_states_count(states), 2u);
  EXPECT_EQ(qc_states_dim(states), 2u);
  qc_gram* gram = nullptr;
  ASSERT_EQ(qc_gram_from_states(ctx_, states, &gram), QC_OK);
  double re = 0.0, im = 0.0;
  ASSERT_EQ(qc_gram_entry(gram, 0, 1, &re, &im), QC_OK);
  EXPECT_NEAR(re, 0.6, 1e-15);
  EXPECT_EQ(qc_gram_entry(gram, 2, 0, &re, &im), QC_ERR_INVALID);

  qc_probabilities p{};
  ASSERT_EQ(qc_probabilities_compute(ctx_, gram, QC_MODE_ANY, &p), QC_OK);
  EXPECT_NEAR(p.inconclusive, 0.68, 1e-12);
  EXPECT_NEAR(p.permanent, 1.36, 1e-12);
  EXPECT_NEAR(p.determinant, 0.64, 1e-12);
  ASSERT_EQ(qc_probabilities_compute(ctx_, gram, QC_MODE_ALL, &p), QC_OK);
  EXPECT_NEAR(p.conclusive, 0.32, 1e-12);

  qc_outcome_counts counts{};
  ASSERT_EQ(qc_simulate(ctx_, states, QC_MODE_ANY, 1000, 7, &counts), QC_OK);
  EXPECT_EQ(counts.conclusive + counts.inconclusive, 1000u);
  EXPECT_EQ(qc_simulate(ctx_, states, QC_MODE_ANY, 0, 7, &counts), QC_ERR_INVALID);

  char* text = nullptr;
  const qc_status st = qc_gram_to_json(ctx_, gram, &text);
  const json g = take(st, text);
  EXPECT_EQ(g["gram"][0][1][0], 0.6);
  qc_gram* back = nullptr;
  ASSERT_EQ(qc_gram_from_json(ctx_, g.dump().c_str(), &back), QC_OK);
  EXPECT_EQ(qc_gram_size(back), 2u);
  qc_gram_free(back);

  qc_gram_free(gram);
  qc_states_free(states);
}

TEST_F(CApi, AmplitudeInput) {
  const double amps[] = {1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0};
  qc_states* states = nullptr;
  ASSERT_EQ(qc_states_from_amplitudes(ctx_, 2, 2, amps, &states), QC_OK);
  qc_gram* gram = nullptr;
  ASSERT_EQ(qc_gram_from_states(ctx_, states, &gram), QC_OK);
  qc_probabilities p{};
  ASSERT_EQ(qc_probabilities_compute(ctx_, gram, QC_MODE_ANY, &p), QC_OK);
  EXPECT_NEAR(p.inconclusive, 0.5, 1e-15);
  qc_gram_free(gram);
  qc_states_free(states);

  const double bad[] = {1.0, 0.0, 1.0, 0.0};
  EXPECT_EQ(qc_states_from_amplitudes(ctx_, 2, 1, bad, &states), QC_ERR_INVALID);
}

TEST_F(CApi, MalformedJsonIsInvalid) {
  qc_states* states = nullptr;
  EXPECT_EQ(qc_states_from_json(ctx_, "{not json", &states), QC_ERR_INVALID);
  EXPECT_EQ(states, nullptr);
  qc_gram* gram = nullptr;
  EXPECT_EQ(qc_gram_from_json(ctx_, R"({"gram": [[[1,0],[2,0]],[[2,0],[1,0]]]})", &gram),
            QC_ERR_INVALID);
}

TEST_F(CApi, Averages) {
  double v = 0.0;
  ASSERT_EQ(qc_analytic_avg(ctx_, 2, 2, QC_MODE_ANY, &v), QC_OK);
  EXPECT_EQ(v, 0.75);
  qc_mc_report r{};
  ASSERT_EQ(qc_monte_carlo_avg(ctx_, 2, 2, QC_MODE_ALL, 20000, 3, &r), QC_OK);
  EXPECT_NEAR(r.estimate, 0.75, 4 * r.std_error);
  EXPECT_EQ(r.analytic, 0.75);
  const double spectra[] = {0.5, 0.5, 0.5, 0.5};
  ASSERT_EQ(qc_mixed_avg(ctx_, 2, 2, spectra, QC_MODE_ANY, &v), QC_OK);
  EXPECT_NEAR(v, 0.75, 1e-15);
  EXPECT_EQ(qc_monte_carlo_avg(ctx_, 2, 30, QC_MODE_ANY, 1000, 0, &r), QC_ERR_CAPACITY);
}

TEST_F(CApi, Reports) {
  qc_states* states = nullptr;
  ASSERT_EQ(qc_states_from_json(ctx_, kPairFile, &states), QC_OK);
  char* text = nullptr;
  qc_status st = qc_identicality(ctx_, states, 2, &text);
  json id = take(st, text);
  EXPECT_EQ(id["feasible"], true);
  EXPECT_LE(id["unambiguity"]["max_off_pattern"].get<double>(), 1e-9);
  qc_states_free(states);

  qc_gram *g1 = nullptr, *g2 = nullptr;
  ASSERT_EQ(qc_gram_from_json(ctx_, R"({"gram": [[[1,0],[0.8,0]],[[0.8,0],[1,0]]]})", &g1),
            QC_OK);
  ASSERT_EQ(qc_gram_from_json(ctx_, R"({"gram": [[[1,0],[0.9,0]],[[0.9,0],[1,0]]]})", &g2),
            QC_OK);
  st = qc_monotone(ctx_, g1, g2, &text);
  json mono = take(st, text);
  EXPECT_EQ(mono["feasibility"]["verdict"], "feasible");
  EXPECT_EQ(mono["monotone"]["ok"], true);
  qc_gram_free(g1);
  qc_gram_free(g2);

  st = qc_conjecture_search(ctx_, 2, 500, 1, &text);
  json search = take(st, text);
  EXPECT_EQ(search["violations"], 0);
  EXPECT_TRUE(search["counterexample"].is_null());

  st = qc_overlap_certificate(ctx_, 2, 1.0, QC_CERT_NO, 0.0, 0, &text);
  json cert = take(st, text);
  EXPECT_EQ(cert["achieved_rank"], 3);
  EXPECT_EQ(cert["verdict"], "not-forced");

  qc_counterexample c{};
  ASSERT_EQ(qc_depolarizing_counterexample(ctx_, 2, 2, &c), QC_OK);
  EXPECT_EQ(c.lhs, 0.75);
  EXPECT_EQ(c.rhs, 1.0);
  EXPECT_EQ(c.decreased, 1);
}

TEST_F(CApi, ContextSettings) {
  EXPECT_EQ(qc_context_set_tolerances(ctx_, -1.0, 1e-8), QC_ERR_INVALID);
  EXPECT_EQ(qc_context_set_tolerances(ctx_, 1e-8, 1e-8), QC_OK);
  EXPECT_EQ(qc_context_set_threads(ctx_, 0), QC_ERR_INVALID);
  EXPECT_EQ(qc_context_set_threads(ctx_, 4), QC_OK);
}

}  // namespace
