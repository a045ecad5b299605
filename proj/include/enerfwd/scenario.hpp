// Copyright 2026 The enerfwd Authors
// SPDX-License-Identifier: Apache-2.0

// Scenario documents: one JSON object describing model, state, option and
// factor selection, plus optional run settings.
//
//   {
//     "seasonality": 10,                  // or {"knots": [[t, level], ...]}
//     "mu": 0, "sigma": 0.01,
//     "factors": [{"beta": 0.3466, "sigma": 0.01}, ...],
//     "state": {"t": 0, "x": 0, "y": [0, 0]},
//     "option": {"tau": 10, "T": 25, "strike": {"delta": 1}, "r": 0},
//     "selection": {"J": [1]},
//     "grid": {"T_min": 0, "T_max": 80, "step": 1},            // optional
//     "mc": {"seed": 42, "paths": 1000000, "antithetic": true,
//            "chunks": 4},                                      // optional
//     "quad": {"nodes": 201},                                   // optional
//     "average": {"T1": 10, "T2": 40, "steps": 64,
//                 "paths": 100000}                              // optional
//   }
//
// Times are in days. Factor indices in "J" are 1-based.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "enerfwd/model.hpp"
#include "enerfwd/montecarlo.hpp"

namespace enerfwd {

struct GridSpec {
  double t_min = 0.0;
  double t_max = 80.0;
  double step = 1.0;

  /// t_min, t_min + step, ... up to t_max inclusive.
  std::vector<double> nodes() const;
  bool operator==(const GridSpec&) const = default;
};

struct McSettings {
  std::optional<std::uint64_t> seed;
  std::uint64_t paths = 1'000'000;
  bool antithetic = true;
  std::optional<unsigned> chunks;  // defaults to the hardware concurrency
  bool operator==(const McSettings&) const = default;
};

/// Settings for the average-delivery forward check. Without T1/T2 the
/// delivery period implied by the midpoint is used: [tau, 2T - tau].
struct AverageSpec {
  std::optional<double> T1;
  std::optional<double> T2;
  int steps = 64;
  std::uint64_t paths = 100'000;
  bool operator==(const AverageSpec&) const = default;
};

struct Scenario {
  SpotModel model;
  MarketState state;
  OptionSpec option;
  FactorSelection selection;
  std::optional<GridSpec> grid;
  std::optional<McSettings> mc;
  std::optional<int> quad_nodes;
  std::optional<AverageSpec> average;

  /// Validated model/state; throws the validation error otherwise.
  Market market() const;

  GridSpec grid_or_default() const { return grid.value_or(GridSpec{}); }
  McSettings mc_or_default() const { return mc.value_or(McSettings{}); }
  int quad_nodes_or_default() const;
  AverageSpec average_or_default() const { return average.value_or(AverageSpec{}); }

  bool operator==(const Scenario&) const = default;
};

/// Parses and validates; errors name the offending field.
Scenario parse_scenario(std::string_view json);
Scenario load_scenario(const std::filesystem::path& path);
std::string to_json(const Scenario& scenario);

/// The two-factor illustration: t = 0, tau = 10, T = 25, beta = (0.3466, 0.0495),
/// sigma = sigma_1 = sigma_2 = 0.01, mu = 0, Lambda = 10, delta = 1, J = {1},
/// zero initial state, seed 42.
Scenario example_scenario();

}  // namespace enerfwd
