// Copyright 2026 The enerfwd Authors
// SPDX-License-Identifier: Apache-2.0

#include "enerfwd/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "format.hpp"

namespace enerfwd {

namespace {

std::string num(double v) { return detail::format_double(v); }

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::InvalidInput, std::string(what) + " must be finite");
  }
}

}  // namespace

Seasonality Seasonality::constant(double level) {
  if (!(level > 0.0) || !std::isfinite(level)) {
    throw Error(ErrorCode::SeasonalityNotPositive,
                "constant seasonality level must be positive and finite, got " + num(level));
  }
  Seasonality s;
  s.kind_ = Kind::Constant;
  s.value_ = level;
  return s;
}

Seasonality Seasonality::tabulated(std::vector<SeasonalityKnot> knots) {
  if (knots.empty()) {
    throw Error(ErrorCode::SeasonalityNotPositive, "tabulated seasonality needs at least one knot");
  }
  for (std::size_t k = 0; k < knots.size(); ++k) {
    if (!std::isfinite(knots[k].time)) {
      throw Error(ErrorCode::InvalidInput, "seasonality knot time must be finite");
    }
    if (!(knots[k].level > 0.0) || !std::isfinite(knots[k].level)) {
      throw Error(ErrorCode::SeasonalityNotPositive,
                  "seasonality knot " + std::to_string(k) + " has level " + num(knots[k].level));
    }
    if (k > 0 && !(knots[k].time > knots[k - 1].time)) {
      throw Error(ErrorCode::UnsortedKnots, "seasonality knot times must be strictly increasing");
    }
  }
  Seasonality s;
  s.kind_ = Kind::Tabulated;
  s.knots_ = std::move(knots);
  return s;
}

double Seasonality::operator()(double t) const noexcept {
  if (kind_ == Kind::Constant) return value_;
  if (t <= knots_.front().time) return knots_.front().level;
  if (t >= knots_.back().time) return knots_.back().level;
  auto hi = std::upper_bound(knots_.begin(), knots_.end(), t,
                             [](double v, const SeasonalityKnot& k) { return v < k.time; });
  auto lo = hi - 1;
  const double w = (t - lo->time) / (hi->time - lo->time);
  return lo->level + w * (hi->level - lo->level);
}

FactorSelection::FactorSelection(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  if (!indices_.empty() && indices_.front() == 0) {
    throw Error(ErrorCode::InvalidSubset, "factor indices are 1-based; got 0");
  }
}

FactorSelection FactorSelection::all(std::size_t n) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i + 1;
  return FactorSelection(std::move(idx));
}

bool FactorSelection::contains(std::size_t index) const noexcept {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

FactorSelection FactorSelection::complement(std::size_t n) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= n; ++i) {
    if (!contains(i)) out.push_back(i);
  }
  return FactorSelection(std::move(out));
}

void FactorSelection::check_against(std::size_t n) const {
  if (!indices_.empty() && indices_.back() > n) {
    throw Error(ErrorCode::InvalidSubset, "factor index " + std::to_string(indices_.back()) +
                                              " exceeds factor count " + std::to_string(n));
  }
}

Market Market::restricted(const FactorSelection& selection) const {
  selection.check_against(model_.factor_count());
  SpotModel m = model_;
  MarketState s = state_;
  m.factors.clear();
  s.y.clear();
  for (std::size_t i : selection.indices()) {
    m.factors.push_back(model_.factors[i - 1]);
    s.y.push_back(state_.y[i - 1]);
  }
  return Market(std::move(m), std::move(s));
}

Market validate(SpotModel model, MarketState state) {
  require_finite(model.mu, "mu");
  require_finite(model.sigma, "sigma");
  if (model.sigma < 0.0) {
    throw Error(ErrorCode::InvalidInput, "long-term sigma must be >= 0, got " + num(model.sigma));
  }
  for (std::size_t i = 0; i < model.factors.size(); ++i) {
    const auto& f = model.factors[i];
    const std::string which = "factor " + std::to_string(i + 1);
    if (!(f.beta > 0.0) || !std::isfinite(f.beta)) {
      throw Error(ErrorCode::NonPositiveBeta, which + ": beta must be > 0, got " + num(f.beta));
    }
    if (!(f.sigma > 0.0) || !std::isfinite(f.sigma)) {
      throw Error(ErrorCode::NonPositiveSigmaFactor,
                  which + ": sigma must be > 0, got " + num(f.sigma));
    }
  }
  if (state.y.size() != model.factors.size()) {
    throw Error(ErrorCode::StateLengthMismatch,
                "state has " + std::to_string(state.y.size()) + " factor levels, model has " +
                    std::to_string(model.factors.size()) + " factors");
  }
  require_finite(state.t, "state.t");
  require_finite(state.x, "state.x");
  for (double y : state.y) require_finite(y, "state.y");
  return Market(std::move(model), std::move(state));
}

double half_life_to_beta(double half_life_days) {
  if (!(half_life_days > 0.0) || !std::isfinite(half_life_days)) {
    throw Error(ErrorCode::NonPositiveHalfLife,
                "half life must be positive and finite, got " + num(half_life_days));
  }
  return std::numbers::ln2 / half_life_days;
}

std::pair<double, double> seasonality_bounds(const Seasonality& s, double t_begin, double t_end) {
  if (!(t_begin <= t_end)) {
    throw Error(ErrorCode::EmptyHorizon, "horizon [" + num(t_begin) + ", " + num(t_end) + "] is empty");
  }
  if (s.kind() == Seasonality::Kind::Constant) return {s.value(), s.value()};
  // A piecewise-linear function attains its extremes at the endpoints or at
  // interior knots.
  double lo = std::min(s(t_begin), s(t_end));
  double hi = std::max(s(t_begin), s(t_end));
  for (const auto& k : s.knots()) {
    if (k.time > t_begin && k.time < t_end) {
      lo = std::min(lo, k.level);
      hi = std::max(hi, k.level);
    }
  }
  return {lo, hi};
}

double resolve_strike(const StrikeRule& rule, double f) {
  if (const auto* m = std::get_if<Moneyness>(&rule)) return f / m->delta;
  return std::get<AbsoluteStrike>(rule).K;
}

double resolve_moneyness(const StrikeRule& rule, double f) {
  if (const auto* m = std::get_if<Moneyness>(&rule)) return m->delta;
  return f / std::get<AbsoluteStrike>(rule).K;
}

void check_option(const Market& market, const OptionSpec& spec) {
  require_finite(spec.tau, "option.tau");
  require_finite(spec.T, "option.T");
  if (!(market.t() <= spec.tau && spec.tau <= spec.T)) {
    throw Error(ErrorCode::TimeOrderViolation, "need t <= tau <= T, got t=" + num(market.t()) +
                                                   ", tau=" + num(spec.tau) + ", T=" + num(spec.T));
  }
  if (!(spec.r >= 0.0) || !std::isfinite(spec.r)) {
    throw Error(ErrorCode::InvalidInput, "rate r must be >= 0, got " + num(spec.r));
  }
  if (const auto* m = std::get_if<Moneyness>(&spec.strike)) {
    if (!(m->delta > 0.0) || !std::isfinite(m->delta)) {
      throw Error(ErrorCode::InvalidInput, "moneyness delta must be > 0, got " + num(m->delta));
    }
  } else {
    const double K = std::get<AbsoluteStrike>(spec.strike).K;
    if (!(K > 0.0) || !std::isfinite(K)) {
      throw Error(ErrorCode::InvalidInput, "strike K must be > 0, got " + num(K));
    }
  }
}

}  // namespace enerfwd
