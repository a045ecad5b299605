// Copyright 2026 The enerfwd Authors
// SPDX-License-Identifier: Apache-2.0

// Domain types for the geometric multi-factor spot model
//
//   S(t) = Lambda(t) * exp(X(t) + sum_i Y_i(t)),
//   dX   = mu dt + sigma dB,
//   dY_i = -beta_i Y_i dt + sigma_i dB_i.
//
// All times are in days and all rates are per day (a half life of two days
// gives beta = ln 2 / 2 = 0.3466). There is no year-fraction conversion
// anywhere in the library.

#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "enerfwd/errors.hpp"

namespace enerfwd {

struct SeasonalityKnot {
  double time;   // days
  double level;  // currency

  bool operator==(const SeasonalityKnot&) const = default;
};

/// Deterministic, bounded seasonality Lambda(t): either a constant level or
/// a piecewise-linear table with flat extrapolation.
class Seasonality {
 public:
  enum class Kind { Constant, Tabulated };

  static Seasonality constant(double level);
  static Seasonality tabulated(std::vector<SeasonalityKnot> knots);

  Kind kind() const noexcept { return kind_; }
  double value() const noexcept { return value_; }
  const std::vector<SeasonalityKnot>& knots() const noexcept { return knots_; }

  double operator()(double t) const noexcept;

  bool operator==(const Seasonality&) const = default;

 private:
  Seasonality() = default;

  Kind kind_ = Kind::Constant;
  double value_ = 1.0;
  std::vector<SeasonalityKnot> knots_;
};

struct MeanRevertingFactor {
  double beta;   // mean-reversion rate, per day
  double sigma;  // volatility, per sqrt(day)

  bool operator==(const MeanRevertingFactor&) const = default;
};

struct SpotModel {
  Seasonality seasonality = Seasonality::constant(1.0);
  double mu = 0.0;     // drift of the long-term factor, per day
  double sigma = 0.0;  // long-term volatility, per sqrt(day)
  std::vector<MeanRevertingFactor> factors;

  std::size_t factor_count() const noexcept { return factors.size(); }

  bool operator==(const SpotModel&) const = default;
};

struct MarketState {
  double t = 0.0;         // valuation time, days
  double x = 0.0;         // X(t)
  std::vector<double> y;  // Y_i(t), one per factor

  bool operator==(const MarketState&) const = default;
};

struct AbsoluteStrike {
  double K;
  bool operator==(const AbsoluteStrike&) const = default;
};

/// Strike set proportionally to the initial forward: f(t,T) / K(T) = delta.
struct Moneyness {
  double delta;
  bool operator==(const Moneyness&) const = default;
};

using StrikeRule = std::variant<AbsoluteStrike, Moneyness>;

struct OptionSpec {
  double tau = 0.0;  // exercise time, days
  double T = 0.0;    // delivery midpoint, days
  StrikeRule strike = Moneyness{1.0};
  double r = 0.0;    // continuously compounded rate, per day

  bool operator==(const OptionSpec&) const = default;
};

/// A subset J of the factor index set I = {1..n}. Indices are 1-based.
class FactorSelection {
 public:
  FactorSelection() = default;
  /// Sorts and de-duplicates; a zero index throws InvalidSubset.
  explicit FactorSelection(std::vector<std::size_t> indices);

  static FactorSelection all(std::size_t n);
  static FactorSelection none() { return {}; }

  const std::vector<std::size_t>& indices() const& noexcept { return indices_; }
  std::vector<std::size_t> indices() && noexcept { return std::move(indices_); }
  bool contains(std::size_t index) const noexcept;
  bool empty() const noexcept { return indices_.empty(); }
  std::size_t size() const noexcept { return indices_.size(); }

  /// I \ J for a model with n factors.
  FactorSelection complement(std::size_t n) const;
  /// Throws InvalidSubset if any index exceeds n.
  void check_against(std::size_t n) const;

  bool operator==(const FactorSelection&) const = default;

 private:
  std::vector<std::size_t> indices_;
};

/// A model/state pair that passed validation. Immutable; every analytic in
/// the library takes one of these.
class Market {
 public:
  const SpotModel& model() const noexcept { return model_; }
  const MarketState& state() const noexcept { return state_; }
  double t() const noexcept { return state_.t; }

  /// The model restricted to the factors in `selection`, with the matching
  /// state. Used to build the approximate model S_J.
  Market restricted(const FactorSelection& selection) const;

 private:
  friend Market validate(SpotModel model, MarketState state);
  Market(SpotModel model, MarketState state)
      : model_(std::move(model)), state_(std::move(state)) {}

  SpotModel model_;
  MarketState state_;
};

/// Checks every invariant of the model and state; the error names the first
/// violated one.
Market validate(SpotModel model, MarketState state);

/// beta = ln 2 / half_life.
double half_life_to_beta(double half_life_days);

/// Lower and upper bound of the seasonality over [t_begin, t_end].
std::pair<double, double> seasonality_bounds(const Seasonality& s, double t_begin, double t_end);

/// Strike implied by the rule for initial forward `f`.
double resolve_strike(const StrikeRule& rule, double f);

/// Moneyness f/K implied by the rule for initial forward `f`.
double resolve_moneyness(const StrikeRule& rule, double f);

/// Throws TimeOrderViolation unless t <= tau <= T; also validates strike and rate.
void check_option(const Market& market, const OptionSpec& spec);

}  // namespace enerfwd
