// Copyright 2026 The enerfwd Authors
// SPDX-License-Identifier: Apache-2.0

// Black's formula for calls on forwards under the multi-factor model.
//
// The log-forward return Z(t,tau,T) over [t,tau] is Gaussian with variance
//   sigma_sel(T)^2 = sigma^2 (tau - t) + sum_{i in sel} c_i e^{-2 beta_i (T - tau)},
//   c_i = sigma_i^2 / (2 beta_i) (1 - e^{-2 beta_i (tau - t)}).
// Dropping factors from `sel` only changes this variance; the initial curve
// f_I(t,T) is always the full-model one.

#pragma once

#include <vector>

#include "enerfwd/model.hpp"

namespace enerfwd {

struct VolBreakdown {
  double sigma_B;         // sigma * sqrt(tau - t)
  std::vector<double> c;  // c_i for every factor of the model
  double total;           // sigma_sel(T)
  FactorSelection selection;
};

struct BlackInputs {
  double f;          // forward price
  double K;          // strike
  double total_std;  // std dev of the log return over [t, tau]
  double discount;   // e^{-r (tau - t)}
};

double c_coefficient(const MeanRevertingFactor& factor, double t, double tau);

VolBreakdown total_vol(const Market& market, double tau, double T, const FactorSelection& selection);

double std_normal_pdf(double x) noexcept;

/// Phi(x), absolute error <= 1e-12; saturates to 0/1 for |x| > 40.
double std_normal_cdf(double x) noexcept;

/// Phi^{-1}(p) for p in (0, 1).
double std_normal_inverse_cdf(double p);

/// Throws InvalidInput unless f > 0, K > 0, total_std >= 0, 0 < discount <= 1.
void check_black_inputs(const BlackInputs& in);

/// discount * (f Phi(d1) - K Phi(d2)); discounted intrinsic value when total_std == 0.
double black_call(const BlackInputs& in);

/// discount * Phi(d1). With zero volatility returns discount * 1{f > K} and
/// throws ZeroVolatility at f == K, where the limit does not exist.
double black_delta(const BlackInputs& in);

/// dC/dz with z = total_std^2: discount * f * phi(d1) / (2 sqrt z).
double vega_in_variance(const BlackInputs& in);

/// Black inputs for the option: f_I(t,T), the resolved strike, sigma_sel(T)
/// and the discount factor.
BlackInputs black_inputs(const Market& market, const OptionSpec& spec, const FactorSelection& selection);

/// C_sel(t; tau, K, T). With selection == I this is the full-model price,
/// with J a strict subset it is the approximate price C_J.
double option_price(const Market& market, const OptionSpec& spec, const FactorSelection& selection);

}  // namespace enerfwd
