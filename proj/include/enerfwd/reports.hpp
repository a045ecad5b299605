// Copyright 2026 The enerfwd Authors
// SPDX-License-Identifier: Apache-2.0

// Tabular reports behind the command-line tool. Every report is a pure
// function of the scenario.

#pragma once

#include <string>
#include <vector>

#include "enerfwd/scenario.hpp"

namespace enerfwd {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  /// A table with only the named columns, in the given order.
  Table project(const std::vector<std::string>& names) const;
};

/// Header line plus one line per row; shortest round-trip number format.
std::string to_csv(const Table& table);
/// {"columns": [...], "rows": [[...], ...]}
std::string to_json(const Table& table);

/// T,f,h over the scenario grid.
Table curve_table(const Scenario& scenario);
/// T,sigma_I,sigma_J,sigma_B over grid nodes with T >= tau.
Table vols_table(const Scenario& scenario);
/// T,exact,lower,upper,relative with relative = (C_I - C_J) / C_J.
Table pricing_error_table(const Scenario& scenario);
/// T,exact,lower,upper,relative with relative = |Delta_I - Delta_J| / Delta_J.
Table hedging_error_table(const Scenario& scenario);

struct McCheckReport {
  std::string json;
  bool pass = false;
};

/// Runs every Monte Carlo estimator against its closed form and reports
/// z-scores; passes when all |z| <= 3. Throws InvalidInput without a seed.
McCheckReport mc_check(const Scenario& scenario);

}  // namespace enerfwd
