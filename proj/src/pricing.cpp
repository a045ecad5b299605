// Copyright 2026 The enerfwd Authors
// SPDX-License-Identifier: Apache-2.0

#include "enerfwd/pricing.hpp"

#include <boost/math/special_functions/erf.hpp>
#include <cmath>
#include <numbers>

#include "enerfwd/forward.hpp"
#include "format.hpp"

namespace enerfwd {

namespace {

constexpr double kInvSqrt2Pi = 0.39894228040143267794;  // 1/sqrt(2 pi)

struct D1D2 {
  double d1;
  double d2;
};

D1D2 black_d(const BlackInputs& in) {
  const double s = in.total_std;
  const double d2 = (std::log(in.f / in.K) - 0.5 * s * s) / s;
  return {d2 + s, d2};
}

}  // namespace

double c_coefficient(const MeanRevertingFactor& factor, double t, double tau) {
  if (!(tau >= t)) {
    throw Error(ErrorCode::TimeOrderViolation, "c_i needs tau >= t");
  }
  if (!(factor.beta > 0.0)) throw Error(ErrorCode::NonPositiveBeta, "beta must be > 0");
  if (!(factor.sigma > 0.0)) throw Error(ErrorCode::NonPositiveSigmaFactor, "sigma must be > 0");
  return factor.sigma * factor.sigma / (2.0 * factor.beta) * -std::expm1(-2.0 * factor.beta * (tau - t));
}

VolBreakdown total_vol(const Market& market, double tau, double T, const FactorSelection& selection) {
  const double t = market.t();
  if (!(t <= tau && tau <= T)) {
    throw Error(ErrorCode::TimeOrderViolation,
                "need t <= tau <= T, got t=" + detail::format_double(t) + ", tau=" +
                    detail::format_double(tau) + ", T=" + detail::format_double(T));
  }
  const auto& m = market.model();
  selection.check_against(m.factor_count());

  VolBreakdown out;
  const double var_B = m.sigma * m.sigma * (tau - t);
  out.sigma_B = std::sqrt(var_B);
  out.c.reserve(m.factor_count());
  for (const auto& f : m.factors) out.c.push_back(c_coefficient(f, t, tau));
  double var = var_B;
  for (std::size_t i : selection.indices()) {
    var += out.c[i - 1] * std::exp(-2.0 * m.factors[i - 1].beta * (T - tau));
  }
  out.total = std::sqrt(var);
  out.selection = selection;
  return out;
}

double std_normal_pdf(double x) noexcept { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double std_normal_cdf(double x) noexcept {
  if (x < -40.0) return 0.0;
  if (x > 40.0) return 1.0;
  return 0.5 * std::erfc(-x * std::numbers::sqrt2 / 2.0);
}

double std_normal_inverse_cdf(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw Error(ErrorCode::InvalidInput, "inverse normal CDF needs p in (0, 1)");
  }
  return -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * p);
}

void check_black_inputs(const BlackInputs& in) {
  if (!(in.f > 0.0) || !std::isfinite(in.f)) {
    throw Error(ErrorCode::InvalidInput, "forward must be > 0");
  }
  if (!(in.K > 0.0) || !std::isfinite(in.K)) {
    throw Error(ErrorCode::InvalidInput, "strike must be > 0");
  }
  if (!(in.total_std >= 0.0) || !std::isfinite(in.total_std)) {
    throw Error(ErrorCode::InvalidInput, "total std dev must be >= 0");
  }
  if (!(in.discount > 0.0 && in.discount <= 1.0)) {
    throw Error(ErrorCode::InvalidInput, "discount factor must lie in (0, 1]");
  }
}

double black_call(const BlackInputs& in) {
  check_black_inputs(in);
  if (in.total_std == 0.0) return in.discount * std::max(in.f - in.K, 0.0);
  const auto d = black_d(in);
  return in.discount * (in.f * std_normal_cdf(d.d1) - in.K * std_normal_cdf(d.d2));
}

double black_delta(const BlackInputs& in) {
  check_black_inputs(in);
  if (in.total_std == 0.0) {
    if (in.f == in.K) {
      throw Error(ErrorCode::ZeroVolatility, "delta is undefined at the money with zero volatility");
    }
    return in.f > in.K ? in.discount : 0.0;
  }
  return in.discount * std_normal_cdf(black_d(in).d1);
}

double vega_in_variance(const BlackInputs& in) {
  check_black_inputs(in);
  if (in.total_std == 0.0) {
    throw Error(ErrorCode::ZeroVolatility, "vega in variance needs a positive variance");
  }
  return in.discount * in.f * std_normal_pdf(black_d(in).d1) / (2.0 * in.total_std);
}

BlackInputs black_inputs(const Market& market, const OptionSpec& spec, const FactorSelection& selection) {
  check_option(market, spec);
  const double f = forward_price(market, spec.T).price;
  return {f, resolve_strike(spec.strike, f), total_vol(market, spec.tau, spec.T, selection).total,
          std::exp(-spec.r * (spec.tau - market.t()))};
}

double option_price(const Market& market, const OptionSpec& spec, const FactorSelection& selection) {
  return black_call(black_inputs(market, spec, selection));
}

}  // namespace enerfwd
