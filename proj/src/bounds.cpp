// Copyright 2026 The enerfwd Authors
// SPDX-License-Identifier: Apache-2.0

#include "enerfwd/bounds.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "enerfwd/forward.hpp"
#include "enerfwd/pricing.hpp"
#include "format.hpp"

namespace enerfwd {

namespace {

using detail::format_double;

// Everything the error formulas share for one (market, option, J).
struct Gap {
  double f;         // f_I(t,T)
  double K;
  double log_fk;    // ln(f/K) = ln(delta)
  double discount;
  double var_B;     // sigma_B^2
  double var_J;     // sigma_J(T)^2
  double var_gap;   // sigma_I(T)^2 - sigma_J(T)^2, summed directly
  double c_total;   // sum_{i in I} c_i
  std::vector<double> c;
};

Gap make_gap(const Market& market, const OptionSpec& spec, const FactorSelection& J) {
  check_option(market, spec);
  const auto& m = market.model();
  J.check_against(m.factor_count());

  Gap g;
  g.f = forward_price(market, spec.T).price;
  g.K = resolve_strike(spec.strike, g.f);
  g.log_fk = std::log(g.f / g.K);
  g.discount = std::exp(-spec.r * (spec.tau - market.t()));
  g.var_B = m.sigma * m.sigma * (spec.tau - market.t());
  g.var_J = g.var_B;
  g.var_gap = 0.0;
  g.c_total = 0.0;
  for (std::size_t i = 1; i <= m.factor_count(); ++i) {
    const auto& factor = m.factors[i - 1];
    const double c = c_coefficient(factor, market.t(), spec.tau);
    g.c.push_back(c);
    g.c_total += c;
    const double v = c * std::exp(-2.0 * factor.beta * (spec.T - spec.tau));
    (J.contains(i) ? g.var_J : g.var_gap) += v;
  }
  return g;
}

double d1_of_std(double log_fk, double s) {
  if (s == 0.0) {
    if (log_fk == 0.0) return 0.0;
    return log_fk > 0.0 ? HUGE_VAL : -HUGE_VAL;
  }
  return log_fk / s + 0.5 * s;
}

// Mean of phi(d(u)) over u in [0, 1], where |d| is smallest at u_peak and
// grows monotonically away from it. The density at the peak is factored out,
// and each side is cut where the ratio drops below e^-70, so the adaptive
// rule never chases a boundary spike or denormal tails.
template <class D>
double mean_pdf(D d, double u_peak) {
  const double peak = d(u_peak);
  const double scale = std_normal_pdf(peak);
  if (scale == 0.0) return 0.0;
  auto log_ratio = [&](double u) {
    const double x = d(u);
    return std::isfinite(x) ? -0.5 * (x - peak) * (x + peak) : -HUGE_VAL;
  };
  constexpr double kCut = -70.0;
  auto edge = [&](double from, double to) {
    if (log_ratio(to) >= kCut) return to;
    for (int k = 0; k < 60; ++k) {
      const double mid = 0.5 * (from + to);
      (log_ratio(mid) >= kCut ? from : to) = mid;
    }
    return to;
  };
  auto ratio = [&](double u) { return std::exp(log_ratio(u)); };
  using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;
  double sum = 0.0;
  if (u_peak > 0.0) sum += Rule::integrate(ratio, edge(u_peak, 0.0), u_peak, 15, 1e-10);
  if (u_peak < 1.0) sum += Rule::integrate(ratio, u_peak, edge(u_peak, 1.0), 15, 1e-10);
  return scale * sum;
}

// Position in [0, 1] of the point of [lo, lo + width] closest to `target`.
double clamp_fraction(double target, double lo, double width) {
  if (width == 0.0) return 0.0;
  return std::clamp((target - lo) / width, 0.0, 1.0);
}

void require_zero_rate(const OptionSpec& spec) {
  if (spec.r != 0.0) {
    throw Error(ErrorCode::NonzeroRateUnsupported,
                "error bounds are derived for r = 0, got r = " + format_double(spec.r));
  }
}

void require_sigma_B(const Gap& g) {
  if (!(g.var_B > 0.0)) {
    throw Error(ErrorCode::ZeroSigmaB,
                "sigma_B = sigma sqrt(tau - t) is zero; the bound constants are singular");
  }
}

}  // namespace

double exact_pricing_error(const Market& market, const OptionSpec& spec, const FactorSelection& J) {
  const Gap g = make_gap(market, spec, J);
  if (g.var_gap == 0.0) return 0.0;
  // dC/ds = D f phi(d1(s)) for s = total std, so C_I - C_J is the integral of
  // that over [sigma_J, sigma_I]. Taking the width from the variance gap keeps
  // full relative precision even when the two prices agree to the last bit.
  const double s_J = std::sqrt(g.var_J);
  const double s_I = std::sqrt(g.var_J + g.var_gap);
  const double width = g.var_gap / (s_I + s_J);
  // |d1(s)| = |l/s + s/2| is smallest at s = sqrt(2|l|) (minimum for l > 0, zero for l < 0).
  const double s_peak = std::sqrt(2.0 * std::abs(g.log_fk));
  const double avg = mean_pdf([&](double u) { return d1_of_std(g.log_fk, s_J + u * width); },
                              clamp_fraction(s_peak, s_J, width));
  return g.discount * g.f * width * avg;
}

ErrorBoundReport pricing_error_bounds(const Market& market, const OptionSpec& spec,
                                      const FactorSelection& J, std::optional<Horizon> horizon) {
  const Gap g = make_gap(market, spec, J);
  require_zero_rate(spec);
  require_sigma_B(g);

  const auto& m = market.model();
  const auto& s = market.state();
  const double t = market.t();
  const Horizon hz = horizon.value_or(Horizon{t, spec.T});
  const auto [lambda_lo, lambda_hi] = seasonality_bounds(m.seasonality, hz.begin, hz.end);

  const double b = m.mu + 0.5 * m.sigma * m.sigma;
  // f phi(d1) = K phi(d2) = (f / delta) phi(d2); the d2 bounds below carry 1/delta.
  const double inv_delta = std::exp(-g.log_fk);
  const double sigma_B = std::sqrt(g.var_B);
  const double var_max = g.var_B + g.c_total;

  double y_nonpos = 0.0;
  double y_pos = 0.0;
  double curve_variance_cap = 0.0;  // sup_T of the variance term in ln h(t,T)
  for (std::size_t i = 0; i < m.factor_count(); ++i) {
    (s.y[i] <= 0.0 ? y_nonpos : y_pos) += s.y[i];
    curve_variance_cap += 0.5 * m.factors[i].sigma * m.factors[i].sigma / (2.0 * m.factors[i].beta);
  }

  const double growth = b * (spec.tau - t) + s.x;
  const double spread = std::abs(g.log_fk) / sigma_B + 0.5 * std::sqrt(var_max);
  const double alpha = lambda_lo * inv_delta / (2.0 * std::sqrt(2.0 * std::numbers::pi * var_max)) *
                       std::exp(growth - 0.5 * spread * spread + y_nonpos);
  // f(t,T) <= Lambda_u e^{b(T-t) + curve_variance_cap + X + sum_{I+} Y}; the
  // cap must stay in gamma for the upper envelope to hold.
  const double gamma = lambda_hi * inv_delta / (2.0 * std::sqrt(2.0 * std::numbers::pi * g.var_B)) *
                       std::exp(growth + curve_variance_cap + y_pos);

  ErrorBoundReport rep;
  rep.T = spec.T;
  rep.alpha_or_h = alpha;
  rep.gamma_or_g = gamma;
  rep.b = b;
  double sum = 0.0;
  for (std::size_t i : J.complement(m.factor_count()).indices()) {
    const double rate = 2.0 * m.factors[i - 1].beta - b;
    rep.decay_terms.push_back({i, g.c[i - 1], rate});
    sum += g.c[i - 1] * std::exp(-rate * (spec.T - spec.tau));
  }
  rep.lower = alpha * sum;
  rep.upper = gamma * sum;
  rep.exact = exact_pricing_error(market, spec, J);
  return rep;
}

double asymptotic_error(const Market& market, const OptionSpec& spec, const FactorSelection& J) {
  const Gap g = make_gap(market, spec, J);
  require_zero_rate(spec);
  require_sigma_B(g);
  if (g.var_gap == 0.0) return 0.0;
  return vega_in_variance({g.f, g.K, std::sqrt(g.var_B), 1.0}) * g.var_gap;
}

RateDiagnostic rate_diagnostic(const Market& market, const FactorSelection& J) {
  const auto& m = market.model();
  J.check_against(m.factor_count());
  const double b = m.mu + 0.5 * m.sigma * m.sigma;
  RateDiagnostic out;
  for (std::size_t i : J.complement(m.factor_count()).indices()) {
    const double rate = 2.0 * m.factors[i - 1].beta - b;
    out.entries.push_back({i, rate, rate > 0.0});
    out.all_converge = out.all_converge && rate > 0.0;
  }
  return out;
}

double exact_hedging_error(const Market& market, const OptionSpec& spec, const FactorSelection& J) {
  const Gap g = make_gap(market, spec, J);
  if (!(g.var_J > 0.0)) {
    throw Error(ErrorCode::ZeroVolatility, "delta under J needs a positive total volatility");
  }
  if (g.var_gap == 0.0) return 0.0;
  // Delta_I - Delta_J = D (Phi(d1_I) - Phi(d1_J)), integrated as phi over
  // [d1_J, d1_I] with the width computed without cancellation.
  const double s_J = std::sqrt(g.var_J);
  const double s_I = std::sqrt(g.var_J + g.var_gap);
  const double ds = g.var_gap / (s_I + s_J);
  const double d1_J = d1_of_std(g.log_fk, s_J);
  const double width = ds * (0.5 - g.log_fk / (s_I * s_J));
  const double u_peak = width == 0.0 ? 0.0 : std::clamp(-d1_J / width, 0.0, 1.0);
  const double avg = mean_pdf([&](double u) { return d1_J + u * width; }, u_peak);
  return g.discount * std::abs(width) * avg;
}

ErrorBoundReport hedging_error_bounds(const Market& market, const OptionSpec& spec,
                                      const FactorSelection& J) {
  const Gap g = make_gap(market, spec, J);
  require_zero_rate(spec);
  require_sigma_B(g);

  const double l = g.log_fk;
  const double var_max = g.var_B + g.c_total;
  const bool low_band = 2.0 * l <= g.var_B;
  const bool high_band = 2.0 * l >= var_max;
  if (!low_band && !high_band) {
    throw Error(ErrorCode::RegimeNotCovered,
                "hedging bounds need 2 ln(delta) <= sigma_B^2 or >= sigma_B^2 + sum c_i; got delta=" +
                    format_double(std::exp(l)) + ", sigma_B^2=" + format_double(g.var_B) +
                    ", sum c_i=" + format_double(g.c_total));
  }

  const double k = std::exp(-0.5 * (l * l / g.var_B + std::abs(l) + 0.25 * var_max));
  const double pre = 1.0 / (4.0 * std::sqrt(2.0 * std::numbers::pi));
  double upper_coef;
  double lower_coef;
  if (low_band) {
    upper_coef = pre * std::pow(g.var_B, -1.5) * std::abs(var_max - 2.0 * l);
    lower_coef = k * pre * std::pow(var_max, -1.5) * std::abs(g.var_B - 2.0 * l);
  } else {
    upper_coef = pre * std::pow(g.var_B, -1.5) * std::abs(g.var_B - 2.0 * l);
    lower_coef = k * pre * std::pow(var_max, -1.5) * std::abs(var_max - 2.0 * l);
  }

  const auto& m = market.model();
  ErrorBoundReport rep;
  rep.T = spec.T;
  rep.alpha_or_h = lower_coef;
  rep.gamma_or_g = upper_coef;
  rep.k = k;
  double sum = 0.0;
  for (std::size_t i : J.complement(m.factor_count()).indices()) {
    const double rate = 2.0 * m.factors[i - 1].beta;
    rep.decay_terms.push_back({i, g.c[i - 1], rate});
    sum += g.c[i - 1] * std::exp(-rate * (spec.T - spec.tau));
  }
  rep.lower = lower_coef * sum;
  rep.upper = upper_coef * sum;
  rep.exact = exact_hedging_error(market, spec, J);
  return rep;
}

}  // namespace enerfwd
