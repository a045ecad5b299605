// Copyright 2026 The enerfwd Authors
// SPDX-License-Identifier: Apache-2.0

// Shared fixtures: the reference two-factor scenario and a generator of
// random, valid scenarios for property tests.

#ifndef ENERFWD_TESTS_SUPPORT_HPP_
#define ENERFWD_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "enerfwd/errors.hpp"
#include "enerfwd/model.hpp"
#include "enerfwd/scenario.hpp"

namespace enerfwd::testing {

inline Market example_market() {
  const Scenario sc = example_scenario();
  return validate(sc.model, sc.state);
}

inline OptionSpec example_option(double T) {
  return OptionSpec{10.0, T, Moneyness{1.0}, 0.0};
}

inline const FactorSelection& fast_factor() {
  static const FactorSelection j({1});
  return j;
}

struct RandomCase {
  Market market;
  double tau;
  double delta;
  FactorSelection J;
};

// beta in [0.01, 1], sigma_i in [0.001, 0.05], delta in [0.5, 2] (every
// fourth case at the money), r = 0, J a random proper subset.
class CaseGenerator {
 public:
  explicit CaseGenerator(std::uint64_t seed) : rng_(seed) {}

  RandomCase next() {
    const std::size_t n = pick(2) ? 3 : 2;
    SpotModel m;
    m.seasonality = Seasonality::constant(uniform(5.0, 50.0));
    m.mu = uniform(0.0, 0.0005);
    m.sigma = uniform(0.005, 0.03);
    MarketState s;
    s.t = 0.0;
    s.x = uniform(-0.3, 0.3);
    for (std::size_t i = 0; i < n; ++i) {
      m.factors.push_back({uniform(0.01, 1.0), uniform(0.001, 0.05)});
      s.y.push_back(uniform(-0.2, 0.2));
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::shuffle(order.begin(), order.end(), rng_);
    const std::size_t keep = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
    std::vector<std::size_t> j(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep));
    std::sort(j.begin(), j.end());
    const double delta = (count_++ % 4 == 0) ? 1.0 : uniform(0.5, 2.0);
    return {validate(m, s), uniform(1.0, 30.0), delta, FactorSelection(j)};
  }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool pick(int one_in) { return std::uniform_int_distribution<int>(0, one_in - 1)(rng_) == 0; }

 private:
  std::mt19937_64 rng_;
  std::uint64_t count_ = 0;
};

}  // namespace enerfwd::testing

// Asserts that `stmt` throws enerfwd::Error carrying `expected`.
#define EXPECT_ENERFWD_ERROR(stmt, expected)                                 \
  do {                                                                       \
    try {                                                                    \
      stmt;                                                                  \
      ADD_FAILURE() << "no enerfwd::Error thrown by " #stmt;                 \
    } catch (const ::enerfwd::Error& e) {                                    \
      EXPECT_EQ(e.code(), expected) << e.what();                             \
    }                                                                        \
  } while (false)

#endif  // ENERFWD_TESTS_SUPPORT_HPP_
