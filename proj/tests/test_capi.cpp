// Copyright 2026 The enerfwd Authors
// SPDX-License-Identifier: Apache-2.0

// Exercises the shared library through its C interface only.

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <json.hpp>
#include <string>

#include "enerfwd/enerfwd.h"

namespace {

struct Owned {
  enerfwd_scenario* s = nullptr;
  ~Owned() { enerfwd_scenario_free(s); }
};

std::string take(char* text) {
  std::string out = text ? text : "";
  enerfwd_string_free(text);
  return out;
}

TEST(CApi, VersionAndNormal) {
  EXPECT_STREQ(enerfwd_version(), "0.1.0");
  EXPECT_NEAR(enerfwd_std_normal_cdf(1.959964), 0.9750000009, 1e-10);
  double beta = 0;
  EXPECT_EQ(enerfwd_half_life_to_beta(2.0, &beta), ENERFWD_OK);
  EXPECT_NEAR(beta, 0.3466, 1e-4);
  EXPECT_EQ(enerfwd_half_life_to_beta(-1.0, &beta), ENERFWD_ERR_VALIDATION);
  EXPECT_STREQ(enerfwd_last_error_kind(), "NonPositiveHalfLife");
}

TEST(CApi, ExampleAnalytics) {
  Owned sc;
  ASSERT_EQ(enerfwd_scenario_example(&sc.s), ENERFWD_OK);
  double f = 0, h = 0;
  ASSERT_EQ(enerfwd_forward_price(sc.s, 25.0, &f, &h), ENERFWD_OK);
  EXPECT_NEAR(f, 10.0178626667, 1e-9);
  double v = 0;
  ASSERT_EQ(enerfwd_total_vol(sc.s, 25.0, ENERFWD_SELECT_ALL, &v), ENERFWD_OK);
  EXPECT_NEAR(v, 0.03381984, 1e-8);
  ASSERT_EQ(enerfwd_option_price(sc.s, 25.0, ENERFWD_SELECT_SCENARIO, &v), ENERFWD_OK);
  EXPECT_NEAR(v, 0.12637699, 1e-8);
  ASSERT_EQ(enerfwd_option_delta(sc.s, 25.0, ENERFWD_SELECT_ALL, &v), ENERFWD_OK);
  EXPECT_NEAR(v, 0.50674576, 1e-8);
  ASSERT_EQ(enerfwd_average_forward(sc.s, 10.0, 40.0, 201, &v), ENERFWD_OK);
  EXPECT_GT(v, 10.0);

  enerfwd_bound_report rep{};
  ASSERT_EQ(enerfwd_pricing_bounds(sc.s, 25.0, &rep), ENERFWD_OK);
  EXPECT_NEAR(rep.exact, 0.0087792, 1e-7);
  EXPECT_TRUE(std::isnan(rep.k));
  ASSERT_EQ(enerfwd_hedging_bounds(sc.s, 25.0, &rep), ENERFWD_OK);
  EXPECT_NEAR(rep.exact, 4.38178e-4, 1e-9);
  EXPECT_TRUE(std::isnan(rep.b));
}

TEST(CApi, McOptionHonoursOverrides) {
  Owned base, sc;
  ASSERT_EQ(enerfwd_scenario_example(&base.s), ENERFWD_OK);
  enerfwd_overrides o{};
  o.has_paths = 1;
  o.paths = 20000;
  o.has_seed = 1;
  o.seed = 9;
  ASSERT_EQ(enerfwd_scenario_override(base.s, &o, &sc.s), ENERFWD_OK);
  enerfwd_mc_estimate est{};
  ASSERT_EQ(enerfwd_mc_option(sc.s, 25.0, ENERFWD_SELECT_ALL, &est), ENERFWD_OK);
  EXPECT_EQ(est.paths, 20000u);
  EXPECT_EQ(est.seed, 9u);
  EXPECT_LE(std::abs(est.mean - 0.1351562) / est.std_error, 3.0);
}

TEST(CApi, ParseErrorsAreValidationFailures) {
  Owned sc;
  const char* bad = "{\"seasonality\": 10}";
  EXPECT_EQ(enerfwd_scenario_parse(bad, std::strlen(bad), &sc.s), ENERFWD_ERR_VALIDATION);
  EXPECT_EQ(sc.s, nullptr);
  EXPECT_NE(std::string(enerfwd_last_error()).find("field"), std::string::npos);
  EXPECT_EQ(enerfwd_scenario_load("/nonexistent.json", &sc.s), ENERFWD_ERR_VALIDATION);
  EXPECT_EQ(enerfwd_scenario_example(nullptr), ENERFWD_ERR_VALIDATION);
}

TEST(CApi, UnsupportedRegimesReportStatusThree) {
  Owned base;
  ASSERT_EQ(enerfwd_scenario_example(&base.s), ENERFWD_OK);
  char* text = nullptr;
  ASSERT_EQ(enerfwd_scenario_to_json(base.s, &text), ENERFWD_OK);
  auto parsed = nlohmann::json::parse(take(text));
  parsed["option"]["r"] = 0.001;
  const std::string doc = parsed.dump();
  Owned sc;
  ASSERT_EQ(enerfwd_scenario_parse(doc.data(), doc.size(), &sc.s), ENERFWD_OK);
  enerfwd_bound_report rep{};
  EXPECT_EQ(enerfwd_pricing_bounds(sc.s, 25.0, &rep), ENERFWD_ERR_UNSUPPORTED);
  EXPECT_STREQ(enerfwd_last_error_kind(), "NonzeroRateUnsupported");
}

TEST(CApi, ReportsInBothFormats) {
  Owned sc;
  ASSERT_EQ(enerfwd_scenario_example(&sc.s), ENERFWD_OK);
  char* text = nullptr;
  ASSERT_EQ(enerfwd_report(sc.s, ENERFWD_REPORT_CURVE, ENERFWD_FORMAT_CSV, nullptr, 0, &text), ENERFWD_OK);
  const std::string csv = take(text);
  EXPECT_EQ(csv.substr(0, 13), "T,f,h\n0,10,10");
  const char* cols[] = {"T", "relative"};
  ASSERT_EQ(enerfwd_report(sc.s, ENERFWD_REPORT_PRICING_ERROR, ENERFWD_FORMAT_JSON, cols, 2, &text),
            ENERFWD_OK);
  const std::string json = take(text);
  EXPECT_NE(json.find("\"relative\""), std::string::npos);
  EXPECT_EQ(json.find("\"upper\""), std::string::npos);
  const char* bogus[] = {"nope"};
  EXPECT_EQ(enerfwd_report(sc.s, ENERFWD_REPORT_CURVE, ENERFWD_FORMAT_CSV, bogus, 1, &text),
            ENERFWD_ERR_VALIDATION);
}

TEST(CApi, BadGridOverrideIsRejected) {
  Owned base, sc;
  ASSERT_EQ(enerfwd_scenario_example(&base.s), ENERFWD_OK);
  enerfwd_overrides o{};
  o.has_grid = 1;
  o.grid_min = 10;
  o.grid_max = 5;
  o.grid_step = 1;
  EXPECT_EQ(enerfwd_scenario_override(base.s, &o, &sc.s), ENERFWD_ERR_VALIDATION);
}

}  // namespace
