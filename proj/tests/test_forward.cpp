// Copyright 2026 The enerfwd Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "enerfwd/forward.hpp"
#include "support.hpp"

namespace enerfwd {
namespace {

using testing::example_market;

TEST(Forward, EqualsSpotAtValuationTime) {
  const auto q = forward_price(example_market(), 0.0);
  EXPECT_DOUBLE_EQ(q.price, 10.0);

  SpotModel model;
  model.seasonality = Seasonality::tabulated({{0.0, 8.0}, {20.0, 12.0}});
  model.mu = 0.001;
  model.sigma = 0.02;
  model.factors = {{0.2, 0.03}};
  const Market m = validate(model, {5.0, 0.1, {-0.2}});
  EXPECT_NEAR(forward_price(m, 5.0).price, 9.0 * std::exp(0.1 - 0.2), 1e-12);
}

TEST(Forward, ExampleCurveAtT25) {
  // Independent high-precision evaluation of the closed form.
  const auto q = forward_price(example_market(), 25.0);
  EXPECT_NEAR(q.price, 10.0178626667, 1e-9);
  EXPECT_NEAR(q.deterministic_part, 10.0178626667, 1e-9);
}

TEST(Forward, FactorShockDecaysWithMaturity) {
  SpotModel model;
  model.seasonality = Seasonality::constant(10.0);
  model.factors = {{0.5, 0.01}};
  const Market m = validate(model, {0.0, 0.0, {0.3}});
  const double h = deterministic_part(m, 4.0);
  EXPECT_NEAR(forward_price(m, 4.0).price, h * std::exp(0.3 * std::exp(-2.0)), 1e-12);
  // Far maturities forget the shock entirely.
  EXPECT_NEAR(forward_price(m, 200.0).price / deterministic_part(m, 200.0), 1.0, 1e-12);
}

TEST(Forward, DeterministicModelReducesToSeasonality) {
  SpotModel model;
  model.seasonality = Seasonality::tabulated({{0.0, 10.0}, {10.0, 20.0}});
  const Market m = validate(model, {0.0, 0.0, {}});
  EXPECT_DOUBLE_EQ(forward_price(m, 5.0).price, 15.0);
}

TEST(Forward, RejectsPastDelivery) {
  SpotModel model;
  model.seasonality = Seasonality::constant(10.0);
  const Market m = validate(model, {3.0, 0.0, {}});
  EXPECT_ENERFWD_ERROR(forward_price(m, 2.0), ErrorCode::TimeOrderViolation);
}

TEST(ForwardCurve, FollowsGridAndRejectsUnsorted) {
  const std::vector<double> grid = {0.0, 10.0, 25.0, 80.0};
  const auto curve = forward_curve(example_market(), grid);
  ASSERT_EQ(curve.size(), 4u);
  EXPECT_EQ(curve[2].T, 25.0);
  EXPECT_DOUBLE_EQ(curve[2].price, forward_price(example_market(), 25.0).price);
  const std::vector<double> bad = {0.0, 5.0, 4.0};
  EXPECT_ENERFWD_ERROR(forward_curve(example_market(), bad), ErrorCode::UnsortedGrid);
}

TEST(AverageForward, LiesBetweenCurveExtremes) {
  const Market m = example_market();
  const double avg = average_forward(m, 10.0, 40.0);
  double lo = 1e300, hi = -1e300;
  for (double T = 10.0; T <= 40.0; T += 0.25) {
    lo = std::min(lo, forward_price(m, T).price);
    hi = std::max(hi, forward_price(m, T).price);
  }
  EXPECT_GE(avg, lo);
  EXPECT_LE(avg, hi);
}

TEST(AverageForward, SimpsonConverged) {
  const Market m = example_market();
  EXPECT_NEAR(average_forward(m, 10.0, 40.0, 201), average_forward(m, 10.0, 40.0, 401), 1e-8);

  SpotModel model;
  model.seasonality = Seasonality::tabulated({{0.0, 5.0}, {7.0, 25.0}, {15.0, 9.0}});
  model.sigma = 0.02;
  model.factors = {{0.05, 0.04}, {0.7, 0.02}};
  const Market seasonal = validate(model, {0.0, 0.2, {0.1, -0.3}});
  EXPECT_NEAR(average_forward(seasonal, 1.0, 30.0, 201), average_forward(seasonal, 1.0, 30.0, 401), 1e-3);
}

TEST(AverageForward, ConstantCurveAveragesToLevel) {
  SpotModel model;
  model.seasonality = Seasonality::constant(42.0);
  const Market m = validate(model, {0.0, 0.0, {}});
  EXPECT_NEAR(average_forward(m, 0.0, 30.0), 42.0, 1e-12);
}

TEST(AverageForward, ValidatesArguments) {
  const Market m = example_market();
  EXPECT_ENERFWD_ERROR(average_forward(m, 10.0, 10.0), ErrorCode::TimeOrderViolation);
  EXPECT_ENERFWD_ERROR(average_forward(m, 10.0, 20.0, 4), ErrorCode::BadNodeCount);
  EXPECT_ENERFWD_ERROR(average_forward(m, 10.0, 20.0, 1), ErrorCode::BadNodeCount);
}

}  // namespace
}  // namespace enerfwd
