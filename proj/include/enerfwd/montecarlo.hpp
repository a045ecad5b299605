// Copyright 2026 The enerfwd Authors
// SPDX-License-Identifier: Apache-2.0

// Simulation oracle for the closed forms. X and Y_i are advanced with their
// exact Gaussian transitions, so terminal-value estimators carry no time
// discretisation bias.
//
// Samples are produced in fixed-size blocks. Block b draws from its own
// std::mt19937_64 seeded by (seed, b), and block statistics are merged in
// block order, so an estimate depends on (seed, paths, antithetic) only;
// `chunks` sets the number of worker threads and never changes a bit of the
// result.

#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "enerfwd/model.hpp"

namespace enerfwd {

struct McConfig {
  std::uint64_t seed = 0;
  std::uint64_t paths = 1'000'000;  // payoff evaluations; antithetic pairs count twice
  bool antithetic = true;
  unsigned chunks = 1;              // worker threads
};

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  double ci95_lo = 0.0;
  double ci95_hi = 0.0;
  std::uint64_t paths = 0;
  std::uint64_t seed = 0;
};

inline constexpr double kZ975 = 1.959964;

/// Standard normals by inversion of open-interval uniforms.
class NormalStream {
 public:
  NormalStream(std::uint64_t seed, std::uint64_t stream);

  double uniform();
  double next();
  void fill(std::span<double> out);

 private:
  std::mt19937_64 engine_;
};

/// Exact transition of (X, Y_1..Y_n) from `from` to time u >= from.t.
/// `normals` holds n + 1 independent standard normals (X first).
MarketState advance(const SpotModel& model, const MarketState& from, double u,
                    std::span<const double> normals);

MarketState simulate_terminal(const Market& market, double u, NormalStream& rng);

/// Estimate of E[S(T) | F_t].
McEstimate mc_forward(const Market& market, double T, const McConfig& cfg);

/// Discounted mean of max(f(tau,T) - K, 0) where f(tau,T) = f_I(t,T) e^{Z_sel}
/// and only the selected factors carry randomness into Z_sel.
McEstimate mc_option(const Market& market, const OptionSpec& spec, const FactorSelection& selection,
                     const McConfig& cfg);

/// Mean of f(tau,T) under the same dynamics as mc_option (zero-strike payoff).
McEstimate mc_evolved_forward(const Market& market, const OptionSpec& spec,
                              const FactorSelection& selection, const McConfig& cfg);

/// Estimate of Var Z(t,tau,T) for the selection.
McEstimate mc_log_return_variance(const Market& market, const OptionSpec& spec,
                                  const FactorSelection& selection, const McConfig& cfg);

/// Expected trapezoid average of S over a uniform grid of `time_steps`
/// intervals on [T1, T2], with sequential exact transitions along each path.
McEstimate mc_average_forward(const Market& market, double T1, double T2, int time_steps,
                              const McConfig& cfg);

}  // namespace enerfwd
