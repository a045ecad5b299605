// Copyright 2026 The enerfwd Authors
// SPDX-License-Identifier: Apache-2.0

// Errors from pricing and hedging with a reduced factor set J instead of the
// full set I, and their closed-form envelopes.
//
// Pricing (r = 0):
//   alpha * S(T) <= C_I - C_J <= gamma * S(T),
//   S(T) = sum_{i in I\J} c_i e^{-(2 beta_i - b)(T - tau)},  b = mu + sigma^2/2.
// Hedging (r = 0, ln(delta) outside the uncovered band):
//   h * H(T) <= |Delta_I - Delta_J| <= g * H(T),
//   H(T) = sum_{i in I\J} c_i e^{-2 beta_i (T - tau)}.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "enerfwd/model.hpp"

namespace enerfwd {

struct DecayTerm {
  std::size_t index;  // 1-based factor index in I \ J
  double c;           // c_i
  double rate;        // 2 beta_i - b (pricing) or 2 beta_i (hedging)
};

struct ErrorBoundReport {
  double T = 0.0;
  double exact = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double alpha_or_h = 0.0;
  double gamma_or_g = 0.0;
  std::optional<double> b;  // pricing bounds only
  std::optional<double> k;  // hedging bounds only
  std::vector<DecayTerm> decay_terms;
};

struct RateEntry {
  std::size_t index;
  double rate;  // 2 beta_i - b
  bool converges;
};

struct RateDiagnostic {
  std::vector<RateEntry> entries;
  bool all_converge = true;
};

/// Time range over which Lambda_l and Lambda_u are taken; defaults to [t, T].
struct Horizon {
  double begin;
  double end;
};

/// C_I - C_J on the shared initial curve f_I(t,T).
double exact_pricing_error(const Market& market, const OptionSpec& spec, const FactorSelection& J);

ErrorBoundReport pricing_error_bounds(const Market& market, const OptionSpec& spec,
                                      const FactorSelection& J,
                                      std::optional<Horizon> horizon = std::nullopt);

/// Large-T proxy for C_I - C_J: vega in variance at sigma_B^2 on the full
/// initial curve times the variance gap sigma_I^2 - sigma_J^2. The exponential
/// growth e^{b(T - tau)} enters through f_I(t,T). An approximation, not a bound.
double asymptotic_error(const Market& market, const OptionSpec& spec, const FactorSelection& J);

RateDiagnostic rate_diagnostic(const Market& market, const FactorSelection& J);

/// |Delta_I - Delta_J| on the shared initial curve.
double exact_hedging_error(const Market& market, const OptionSpec& spec, const FactorSelection& J);

ErrorBoundReport hedging_error_bounds(const Market& market, const OptionSpec& spec,
                                      const FactorSelection& J);

}  // namespace enerfwd
