// Copyright 2026 The enerfwd Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "enerfwd/bounds.hpp"
#include "enerfwd/forward.hpp"
#include "enerfwd/montecarlo.hpp"
#include "enerfwd/pricing.hpp"
#include "enerfwd/reports.hpp"
#include "enerfwd/scenario.hpp"
#include "support.hpp"

namespace {

using namespace enerfwd;
using enerfwd::testing::example_market;
using enerfwd::testing::example_option;
using enerfwd::testing::fast_factor;

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double time_limit_s;
  std::function<Outcome()> body;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// Every grid from the sandwich criterion: the example on 11..80 plus 200
// random scenarios on tau+1..tau+70.
struct GridCase {
  Market market;
  double tau;
  double delta;
  FactorSelection J;
  std::vector<double> T;
};

std::vector<GridCase> sandwich_grids() {
  std::vector<GridCase> out;
  std::vector<double> example_T;
  for (double T = 11.0; T <= 80.0; T += 1.0) example_T.push_back(T);
  out.push_back({example_market(), 10.0, 1.0, fast_factor(), example_T});
  enerfwd::testing::CaseGenerator gen(20260301);
  for (int k = 0; k < 200; ++k) {
    auto c = gen.next();
    std::vector<double> T;
    for (int d = 1; d <= 70; ++d) T.push_back(c.tau + d);
    out.push_back({std::move(c.market), c.tau, c.delta, std::move(c.J), std::move(T)});
  }
  return out;
}

double relative_error(double T) {
  const Market m = example_market();
  const auto spec = example_option(T);
  return exact_pricing_error(m, spec, fast_factor()) / option_price(m, spec, fast_factor());
}

Outcome relative_at_25() {
  const double rel = relative_error(25.0);
  return {rel >= 0.064 && rel <= 0.076, fmt("relative error %.4f%% (C_J denominator)", 100 * rel)};
}

Outcome relative_at_55() {
  const double rel = relative_error(55.0);
  return {rel < 0.005, fmt("relative error %.4f%%", 100 * rel)};
}

Outcome pricing_sandwich() {
  long points = 0, violations = 0;
  for (const auto& g : sandwich_grids()) {
    for (double T : g.T) {
      const auto rep = pricing_error_bounds(g.market, {g.tau, T, Moneyness{g.delta}, 0.0}, g.J);
      ++points;
      if (!(rep.lower >= 0.0 && rep.lower <= rep.exact && rep.exact <= rep.upper)) ++violations;
    }
  }
  return {violations == 0, fmt("%.0f points, %.0f violations", points, violations)};
}

Outcome hedging_sandwich() {
  const auto ex = hedging_error_bounds(example_market(), example_option(25.0), fast_factor());
  // Reference values are quoted to four digits; allow one unit in the last.
  const bool example_ok = std::abs(ex.exact - 4.382e-4) <= 1e-7 && std::abs(ex.lower - 1.911e-4) <= 1e-7 &&
                          std::abs(ex.upper - 8.066e-4) <= 1e-7;
  long points = 0, violations = 0, skipped = 0;
  for (const auto& g : sandwich_grids()) {
    for (double T : g.T) {
      try {
        const auto rep = hedging_error_bounds(g.market, {g.tau, T, Moneyness{g.delta}, 0.0}, g.J);
        ++points;
        if (!(rep.lower >= 0.0 && rep.lower <= rep.exact && rep.exact <= rep.upper)) ++violations;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::RegimeNotCovered) throw;
        ++skipped;
      }
    }
  }
  std::string detail = fmt("example T=25: %.4e in [%.4e, %.4e]; ", ex.exact, ex.lower, ex.upper);
  detail += fmt("%.0f covered points, %.0f violations, %.0f outside regime", points, violations, skipped);
  return {example_ok && violations == 0, detail};
}

Outcome mc_equivalence() {
  const Market m = example_market();
  const auto spec = example_option(25.0);
  McConfig cfg;
  cfg.seed = 42;
  cfg.paths = 1'000'000;
  cfg.antithetic = true;
  auto z = [](const McEstimate& e, double target) { return (e.mean - target) / e.std_error; };
  const auto all = FactorSelection::all(2);
  const double s_I = total_vol(m, 10.0, 25.0, all).total;
  const double zs[] = {
      z(mc_forward(m, 25.0, cfg), forward_price(m, 25.0).price),
      z(mc_option(m, spec, all, cfg), option_price(m, spec, all)),
      z(mc_option(m, spec, fast_factor(), cfg), option_price(m, spec, fast_factor())),
      z(mc_log_return_variance(m, spec, all, cfg), s_I * s_I),
  };
  bool ok = true;
  for (double v : zs) ok = ok && std::abs(v) <= 3.0;
  return {ok, fmt("z forward %.2f, option_I %.2f, option_J %.2f", zs[0], zs[1], zs[2]) +
                  fmt(", Z variance %.2f", zs[3])};
}

Outcome decay_slope() {
  const Market m = example_market();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (double T = 40.0; T <= 80.0; T += 1.0) {
    const double y = std::log(pricing_error_bounds(m, example_option(T), fast_factor()).upper);
    sx += T;
    sy += y;
    sxx += T * T;
    sxy += T * y;
    ++n;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double expected = -(2 * 0.0495 - 0.5 * 0.01 * 0.01);
  return {std::abs(slope - expected) <= 1e-6, fmt("slope %.8f, expected %.8f", slope, expected)};
}

// Five-point central difference.
double derivative(const std::function<double(double)>& g, double x, double h) {
  return (-g(x + 2 * h) + 8 * g(x + h) - 8 * g(x - h) + g(x - 2 * h)) / (12 * h);
}

Outcome greeks() {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_delta = 0.0, worst_vega = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const double f = 1.0 + 99.0 * u(rng);
    const double s = 0.02 + 0.98 * u(rng);
    const double K = f * std::exp((6.0 * u(rng) - 3.0) * s);
    const double D = 0.5 + 0.5 * u(rng);
    const BlackInputs in{f, K, s, D};
    const double fd_delta =
        derivative([&](double x) { return black_call({x, K, s, D}); }, f, 1e-4 * f);
    worst_delta = std::max(worst_delta, std::abs(black_delta(in) - fd_delta));
    const double z = s * s;
    const double fd_vega =
        derivative([&](double v) { return black_call({f, K, std::sqrt(v), D}); }, z, 1e-4 * z);
    worst_vega = std::max(worst_vega, std::abs(vega_in_variance(in) / fd_vega - 1.0));
  }
  return {worst_delta <= 1e-6 && worst_vega <= 1e-7,
          fmt("max |delta - FD| %.2e, max vega relative gap %.2e", worst_delta, worst_vega)};
}

Outcome vol_bounds() {
  long points = 0, violations = 0;
  for (const auto& g : sandwich_grids()) {
    const std::size_t n = g.market.model().factor_count();
    for (double T : g.T) {
      const auto I = total_vol(g.market, g.tau, T, FactorSelection::all(n));
      const auto J = total_vol(g.market, g.tau, T, g.J);
      double csum = 0.0;
      for (double c : I.c) csum += c;
      const double cap = std::sqrt(I.sigma_B * I.sigma_B + csum);
      ++points;
      if (!(I.sigma_B <= J.total && J.total <= I.total && I.total <= cap)) ++violations;
    }
  }
  return {violations == 0, fmt("%.0f points, %.0f violations", points, violations)};
}

Outcome quadrature_vs_mc() {
  const Market m = example_market();
  McConfig cfg;
  cfg.seed = 42;
  cfg.paths = 100'000;
  const auto est = mc_average_forward(m, 10.0, 40.0, 64, cfg);
  const double simpson = average_forward(m, 10.0, 40.0, 201);
  const double half_width = std_normal_inverse_cdf(0.9985) * est.std_error;
  return {std::abs(simpson - est.mean) <= half_width,
          fmt("Simpson %.8f, MC %.8f +- %.2e (99.7%%)", simpson, est.mean, half_width)};
}

Outcome mc_check_determinism() {
  Scenario sc = example_scenario();
  sc.mc->chunks = 1;
  const auto one = mc_check(sc);
  sc.mc->chunks = 4;
  const auto four = mc_check(sc);
  return {one.json == four.json && one.pass,
          std::string(one.json == four.json ? "identical" : "different") + " reports, " +
              std::to_string(one.json.size()) + " bytes, checks " + (one.pass ? "pass" : "fail")};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "relative pricing error at T=25 within [6.4%, 7.6%]", 1.0, relative_at_25},
      {2, "relative pricing error at T=55 below 0.5%", 1.0, relative_at_55},
      {3, "pricing error sandwich on example and 200 random scenarios", 10.0, pricing_sandwich},
      {4, "hedging error sandwich on the same grids", 10.0, hedging_sandwich},
      {5, "Monte Carlo agrees with closed forms at 1e6 antithetic paths", 60.0, mc_equivalence},
      {6, "upper bound decays at rate 2 beta_2 - b", 1.0, decay_slope},
      {7, "delta and variance vega match finite differences", 5.0, greeks},
      {8, "sigma_B <= sigma_J <= sigma_I <= cap on all grids", 10.0, vol_bounds},
      {9, "Simpson average inside 99.7% Monte Carlo interval", 30.0, quadrature_vs_mc},
      {10, "mc-check report identical for 1 and 4 chunks", 120.0, mc_check_determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = out.pass && secs <= c.time_limit_s;
    failures += pass ? 0 : 1;
    std::printf("%s [%2d] %s: %s (%.2f s)\n", pass ? "PASS" : "FAIL", c.id, c.title, out.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
