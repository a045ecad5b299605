// Copyright 2026 The enerfwd Authors
// SPDX-License-Identifier: Apache-2.0

#include "enerfwd/forward.hpp"

#include <cmath>
#include <string>

#include "format.hpp"

namespace enerfwd {

namespace {

void check_after_valuation(const Market& market, double T) {
  if (!(T >= market.t()) || !std::isfinite(T)) {
    throw Error(ErrorCode::TimeOrderViolation,
                "delivery time " + detail::format_double(T) + " precedes valuation time " +
                    detail::format_double(market.t()));
  }
}

double log_deterministic_growth(const SpotModel& m, double dt) {
  double e = (m.mu + 0.5 * m.sigma * m.sigma) * dt;
  double ou = 0.0;
  for (const auto& f : m.factors) {
    ou += f.sigma * f.sigma / (2.0 * f.beta) * -std::expm1(-2.0 * f.beta * dt);
  }
  return e + 0.5 * ou;
}

double log_state_part(const Market& market, double dt) {
  const auto& m = market.model();
  const auto& s = market.state();
  double e = s.x;
  for (std::size_t i = 0; i < m.factors.size(); ++i) {
    e += std::exp(-m.factors[i].beta * dt) * s.y[i];
  }
  return e;
}

}  // namespace

double deterministic_part(const Market& market, double T) {
  check_after_valuation(market, T);
  const double dt = T - market.t();
  return market.model().seasonality(T) * std::exp(log_deterministic_growth(market.model(), dt));
}

ForwardQuote forward_price(const Market& market, double T) {
  const double h = deterministic_part(market, T);
  const double f = h * std::exp(log_state_part(market, T - market.t()));
  return {market.t(), T, f, h};
}

std::vector<ForwardQuote> forward_curve(const Market& market, std::span<const double> grid) {
  for (std::size_t k = 1; k < grid.size(); ++k) {
    if (!(grid[k] >= grid[k - 1])) {
      throw Error(ErrorCode::UnsortedGrid, "grid must be sorted ascending");
    }
  }
  std::vector<ForwardQuote> out;
  out.reserve(grid.size());
  for (double T : grid) out.push_back(forward_price(market, T));
  return out;
}

double average_forward(const Market& market, double T1, double T2, int nodes) {
  if (!(market.t() <= T1 && T1 < T2) || !std::isfinite(T2)) {
    throw Error(ErrorCode::TimeOrderViolation,
                "need t <= T1 < T2, got t=" + detail::format_double(market.t()) +
                    ", T1=" + detail::format_double(T1) + ", T2=" + detail::format_double(T2));
  }
  if (nodes < 3 || nodes % 2 == 0) {
    throw Error(ErrorCode::BadNodeCount,
                "Simpson rule needs an odd node count >= 3, got " + std::to_string(nodes));
  }
  const int intervals = nodes - 1;
  const double step = (T2 - T1) / intervals;
  double sum = forward_price(market, T1).price + forward_price(market, T2).price;
  for (int k = 1; k < intervals; ++k) {
    const double u = T1 + k * step;
    sum += (k % 2 == 1 ? 4.0 : 2.0) * forward_price(market, u).price;
  }
  // (step/3) * sum integrates; dividing by (T2 - T1) = intervals * step averages.
  return sum / (3.0 * intervals);
}

}  // namespace enerfwd
