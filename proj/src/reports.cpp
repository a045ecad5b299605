// Copyright 2026 The enerfwd Authors
// SPDX-License-Identifier: Apache-2.0

#include "enerfwd/reports.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <limits>
#include <thread>

#include "enerfwd/bounds.hpp"
#include "enerfwd/forward.hpp"
#include "enerfwd/pricing.hpp"
#include "format.hpp"

namespace enerfwd {

namespace {

using nlohmann::json;

std::vector<double> option_nodes(const Scenario& sc) {
  std::vector<double> out;
  for (double T : sc.grid_or_default().nodes()) {
    if (T >= sc.option.tau) out.push_back(T);
  }
  return out;
}

OptionSpec at(const OptionSpec& spec, double T) {
  OptionSpec s = spec;
  s.T = T;
  return s;
}

struct Check {
  std::string name;
  McEstimate estimate;
  double closed_form;
};

// z-score of an estimate against its closed form. A zero standard error
// means a degenerate distribution; then only a numerically exact match passes.
double z_score(const McEstimate& e, double closed) {
  const double diff = e.mean - closed;
  if (e.std_error > 0.0) return diff / e.std_error;
  if (std::abs(diff) <= 1e-10 * std::max(1.0, std::abs(closed))) return 0.0;
  return diff > 0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
}

}  // namespace

Table Table::project(const std::vector<std::string>& names) const {
  std::vector<std::size_t> pick;
  for (const auto& n : names) {
    auto it = std::find(columns.begin(), columns.end(), n);
    if (it == columns.end()) throw Error(ErrorCode::InvalidInput, "no column named " + n);
    pick.push_back(static_cast<std::size_t>(it - columns.begin()));
  }
  Table out;
  out.columns = names;
  for (const auto& r : rows) {
    std::vector<double> row;
    for (std::size_t k : pick) row.push_back(r[k]);
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t k = 0; k < table.columns.size(); ++k) {
    if (k) out += ',';
    out += table.columns[k];
  }
  out += '\n';
  for (const auto& r : table.rows) {
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (k) out += ',';
      out += detail::format_double(r[k]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& table) {
  json doc = {{"columns", table.columns}, {"rows", table.rows}};
  return doc.dump() + "\n";
}

Table curve_table(const Scenario& sc) {
  const Market market = sc.market();
  const auto nodes = sc.grid_or_default().nodes();
  Table t{{"T", "f", "h"}, {}};
  for (const auto& q : forward_curve(market, nodes)) t.rows.push_back({q.T, q.price, q.deterministic_part});
  return t;
}

Table vols_table(const Scenario& sc) {
  const Market market = sc.market();
  const auto all = FactorSelection::all(market.model().factor_count());
  Table t{{"T", "sigma_I", "sigma_J", "sigma_B"}, {}};
  for (double T : option_nodes(sc)) {
    const auto full = total_vol(market, sc.option.tau, T, all);
    const auto reduced = total_vol(market, sc.option.tau, T, sc.selection);
    t.rows.push_back({T, full.total, reduced.total, full.sigma_B});
  }
  return t;
}

Table pricing_error_table(const Scenario& sc) {
  const Market market = sc.market();
  Table t{{"T", "exact", "lower", "upper", "relative"}, {}};
  for (double T : option_nodes(sc)) {
    const OptionSpec spec = at(sc.option, T);
    const auto rep = pricing_error_bounds(market, spec, sc.selection);
    const double c_J = option_price(market, spec, sc.selection);
    t.rows.push_back({T, rep.exact, rep.lower, rep.upper, rep.exact / c_J});
  }
  return t;
}

Table hedging_error_table(const Scenario& sc) {
  const Market market = sc.market();
  Table t{{"T", "exact", "lower", "upper", "relative"}, {}};
  for (double T : option_nodes(sc)) {
    const OptionSpec spec = at(sc.option, T);
    const auto rep = hedging_error_bounds(market, spec, sc.selection);
    const double delta_J = black_delta(black_inputs(market, spec, sc.selection));
    t.rows.push_back({T, rep.exact, rep.lower, rep.upper, rep.exact / delta_J});
  }
  return t;
}

McCheckReport mc_check(const Scenario& sc) {
  const Market market = sc.market();
  const McSettings settings = sc.mc_or_default();
  if (!settings.seed) {
    throw Error(ErrorCode::InvalidInput, "mc-check needs an explicit seed (mc.seed or --seed)");
  }
  McConfig cfg;
  cfg.seed = *settings.seed;
  cfg.paths = settings.paths;
  cfg.antithetic = settings.antithetic;
  cfg.chunks = settings.chunks.value_or(std::max(1u, std::thread::hardware_concurrency()));

  const auto all = FactorSelection::all(market.model().factor_count());
  const OptionSpec& spec = sc.option;
  std::vector<Check> checks;
  checks.push_back({"forward", mc_forward(market, spec.T, cfg), forward_price(market, spec.T).price});
  checks.push_back({"martingale", mc_evolved_forward(market, spec, all, cfg),
                    forward_price(market, spec.T).price});
  checks.push_back({"option_I", mc_option(market, spec, all, cfg), option_price(market, spec, all)});
  checks.push_back({"option_J", mc_option(market, spec, sc.selection, cfg),
                    option_price(market, spec, sc.selection)});
  const double sigma_I = total_vol(market, spec.tau, spec.T, all).total;
  checks.push_back({"log_return_variance", mc_log_return_variance(market, spec, all, cfg), sigma_I * sigma_I});

  const AverageSpec avg = sc.average_or_default();
  const double T1 = avg.T1.value_or(spec.tau);
  const double T2 = avg.T2.value_or(2.0 * spec.T - spec.tau);
  if (T2 > T1) {
    McConfig avg_cfg = cfg;
    avg_cfg.paths = avg.paths;
    checks.push_back({"average_forward", mc_average_forward(market, T1, T2, avg.steps, avg_cfg),
                      average_forward(market, T1, T2, sc.quad_nodes_or_default())});
  }

  McCheckReport report;
  report.pass = true;
  json doc;
  doc["seed"] = cfg.seed;
  doc["paths"] = cfg.paths;
  doc["antithetic"] = cfg.antithetic;
  doc["checks"] = json::array();
  for (const auto& c : checks) {
    const double z = z_score(c.estimate, c.closed_form);
    const bool pass = std::abs(z) <= 3.0;
    report.pass = report.pass && pass;
    json entry;
    entry["name"] = c.name;
    entry["estimate"] = {{"mean", c.estimate.mean},
                         {"stderr", c.estimate.std_error},
                         {"ci95", {c.estimate.ci95_lo, c.estimate.ci95_hi}},
                         {"paths", c.estimate.paths}};
    entry["closed_form"] = c.closed_form;
    entry["z_score"] = std::isfinite(z) ? json(z) : json(nullptr);
    entry["pass"] = pass;
    doc["checks"].push_back(entry);
  }
  doc["pass"] = report.pass;
  report.json = doc.dump(2) + "\n";
  return report;
}

}  // namespace enerfwd
