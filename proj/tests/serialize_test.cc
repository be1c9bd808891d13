/* Copyright 2026 The lsc Authors
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

#include "lsc/errors.h"
#include "lsc/serialize.h"
#include "test_util.h"

namespace lsc {
namespace {

using testing::data_path;

Assignment ref5x8() { return Assignment::load(data_path("ex851.dam")); }

TEST(Rational, DecimalStrings) {
  EXPECT_EQ(decimal_string(Rational(1, 2)), "0.5");
  EXPECT_EQ(decimal_string(Rational(15, 2)), "7.5");
  EXPECT_EQ(decimal_string(Rational(8)), "8");
  EXPECT_EQ(decimal_string(Rational(1, 3)), "0.333333");
  const auto j = rational_json(Rational(3, 2));
  EXPECT_EQ(j["p"], 3);
  EXPECT_EQ(j["q"], 2);
  EXPECT_EQ(j["decimal"], "1.5");
}

TEST(Report, JsonCarriesExactValues) {
  const auto j = to_json(analyze(ref5x8(), Cost(1)));
  EXPECT_EQ(j["g_prime"], nlohmann::json({1, 2, 3}));
  EXPECT_EQ(j["t"], 3);
  EXPECT_EQ(j["alpha"], 2);
  EXPECT_EQ(j["kc_achievable"]["p"], 2);
  EXPECT_EQ(j["kc_converse"]["p"], 3);
  EXPECT_EQ(j["optimal"], false);
  ASSERT_EQ(j["z_family"].size(), 2u);
  EXPECT_EQ(j["z_family"][1]["datasets"], nlohmann::json({4, 5, 6, 7, 8}));
}

TEST(Tradeoff, CsvLayout) {
  const auto rows = tradeoff_curve(ref5x8(), {Cost(1, 2), Cost(1), Cost(3, 2), Cost(2)});
  const std::string csv = to_csv(rows);
  EXPECT_EQ(csv,
            "cost,cost_p,cost_q,kc_converse,kc_achievable,kc_repetition\n"
            "0.5,1,2,0.5,0.5,0.5\n"
            "1,1,1,3,2,1\n"
            "1.5,3,2,7.5,7.5,1.5\n"
            "2,2,1,8,8,2\n");
  EXPECT_EQ(to_json(rows).size(), 4u);
}

TEST(Bundle, FullRoundTrip) {
  const Scheme s = build(ref5x8(), Cost(3, 2), 11);
  const auto j = to_json(s);
  EXPECT_EQ(j["modulus"], std::to_string(kMersenne61));
  EXPECT_EQ(j["seed"], "11");
  EXPECT_EQ(j["tool"], kToolName);
  EXPECT_TRUE(j.contains("assignment_hash"));
  const Scheme back = scheme_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(back.f, s.f);
  EXPECT_EQ(back.s, s.s);
  EXPECT_EQ(back.e, s.e);
  EXPECT_EQ(back.decoder, s.decoder);
  EXPECT_TRUE(verify_encodability(back).ok());
  EXPECT_TRUE(verify_decodability(back).ok());
  EXPECT_EQ(to_json(back).dump(), j.dump());
}

TEST(Bundle, OmitModeReplaysFromSeed) {
  const Scheme s = build(ref5x8(), Cost(1, 2), 12);
  const auto j = to_json(s, MatrixMode::kOmit);
  EXPECT_FALSE(j.contains("matrices"));
  const Scheme back = scheme_from_json(j);
  EXPECT_EQ(back.f, s.f);
  EXPECT_EQ(back.decoder, s.decoder);
}

TEST(Bundle, ByteIdenticalAcrossBuilds) {
  EXPECT_EQ(to_json(build(ref5x8(), Cost(1), 13)).dump(2), to_json(build(ref5x8(), Cost(1), 13)).dump(2));
}

TEST(Bundle, RejectsMalformedShape) {
  auto j = to_json(build(ref5x8(), Cost(1), 14));
  j["matrices"]["decoder"].erase(0);
  EXPECT_THROW(scheme_from_json(j), ParseError);
}

TEST(Witness, JsonFields) {
  const auto j = to_json(certificate_realization(ref5x8(), Cost(1), 1));
  EXPECT_EQ(j["branch"], "identity");
  EXPECT_EQ(j["stack_rank"], 5);
  EXPECT_EQ(j["stack_is_identity"], true);
  EXPECT_EQ(j["stack_order"], nlohmann::json({4, 5, 1, 2, 3}));
}

TEST(Simulation, SummaryLine) {
  const auto m = run_monte_carlo(ref5x8(), Cost(1, 2), 10, 3, 1);
  const std::string line = summary_line(m);
  EXPECT_NE(line.find("trials=3 failures=0"), std::string::npos);
  EXPECT_NE(line.find("load=5/10"), std::string::npos);
  EXPECT_EQ(to_json(m)["load_ratio"]["decimal"], "0.5");
}

}  // namespace
}  // namespace lsc
