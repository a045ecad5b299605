// Copyright 2026 The enerfwd Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "enerfwd/model.hpp"

namespace enerfwd {

struct ForwardQuote {
  double t;
  double T;
  double price;               // f(t,T)
  double deterministic_part;  // h(t,T)
};

/// h(t,T) = Lambda(T) exp{(mu + sigma^2/2)(T-t) + 1/2 sum_i sigma_i^2/(2 beta_i) (1 - e^{-2 beta_i (T-t)})}
/// with t the market's valuation time.
double deterministic_part(const Market& market, double T);

/// f(t,T) = h(t,T) exp{X(t) + sum_i e^{-beta_i (T-t)} Y_i(t)}.
ForwardQuote forward_price(const Market& market, double T);

/// forward_price at each node; the grid must be non-decreasing and start at or after t.
std::vector<ForwardQuote> forward_curve(const Market& market, std::span<const double> grid);

inline constexpr int kDefaultQuadratureNodes = 201;

/// Average of f(t,u) over u in [T1, T2] by composite Simpson with `nodes`
/// (odd, >= 3) points. By linearity of the conditional expectation this is
/// the expected average spot over the delivery period.
double average_forward(const Market& market, double T1, double T2,
                       int nodes = kDefaultQuadratureNodes);

}  // namespace enerfwd
