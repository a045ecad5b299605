// Copyright 2026 The enerfwd Authors
// SPDX-License-Identifier: Apache-2.0

#include "enerfwd/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include "enerfwd/forward.hpp"
#include "enerfwd/pricing.hpp"
#include "format.hpp"

namespace enerfwd {

namespace {

constexpr std::uint64_t kBlockSize = 4096;

struct Moments {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void push(double v) {
    ++n;
    const double d = v - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (v - mean);
  }

  void merge(const Moments& o) {
    if (o.n == 0) return;
    if (n == 0) {
      *this = o;
      return;
    }
    const double na = static_cast<double>(n);
    const double nb = static_cast<double>(o.n);
    const double d = o.mean - mean;
    const double total = na + nb;
    mean += d * nb / total;
    m2 += o.m2 + d * d * na * nb / total;
    n += o.n;
  }
};

void check_config(const McConfig& cfg) {
  if (cfg.paths < 2) throw Error(ErrorCode::InvalidInput, "Monte Carlo needs at least 2 paths");
  if (cfg.chunks < 1) throw Error(ErrorCode::InvalidInput, "Monte Carlo needs at least 1 chunk");
}

// `make_sampler()` returns a callable double(NormalStream&) producing one iid
// sample; each worker gets its own so samplers may keep scratch buffers.
template <class MakeSampler>
McEstimate run_blocks(const McConfig& cfg, std::uint64_t samples, MakeSampler make_sampler) {
  check_config(cfg);
  const std::uint64_t blocks = (samples + kBlockSize - 1) / kBlockSize;
  std::vector<Moments> partial(blocks);
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(cfg.chunks, std::max<std::uint64_t>(blocks, 1)));

  auto work = [&](unsigned worker) {
    auto sampler = make_sampler();
    for (std::uint64_t b = worker; b < blocks; b += workers) {
      NormalStream rng(cfg.seed, b);
      const std::uint64_t count = std::min(kBlockSize, samples - b * kBlockSize);
      Moments m;
      for (std::uint64_t k = 0; k < count; ++k) m.push(sampler(rng));
      partial[b] = m;
    }
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  Moments total;
  for (const auto& m : partial) total.merge(m);

  McEstimate est;
  est.mean = total.mean;
  est.std_error = total.n > 1 ? std::sqrt(total.m2 / static_cast<double>(total.n - 1) /
                                          static_cast<double>(total.n))
                              : 0.0;
  est.ci95_lo = est.mean - kZ975 * est.std_error;
  est.ci95_hi = est.mean + kZ975 * est.std_error;
  est.paths = cfg.paths;
  est.seed = cfg.seed;
  return est;
}

// Plain or antithetic estimator of E[g(z)] with z of dimension `dim`.
template <class G>
McEstimate estimate_mean(const McConfig& cfg, std::size_t dim, const G& g) {
  const std::uint64_t samples = cfg.antithetic ? cfg.paths / 2 : cfg.paths;
  return run_blocks(cfg, samples, [&] {
    return [&g, dim, anti = cfg.antithetic, z = std::vector<double>(dim)](NormalStream& rng) mutable {
      rng.fill(z);
      const double a = g(std::span<const double>(z));
      if (!anti) return a;
      for (double& v : z) v = -v;
      return 0.5 * (a + g(std::span<const double>(z)));
    };
  });
}

// Log-return Z(t,tau,T) restricted to a factor selection, as a function of
// the normals driving [t, tau].
class LogReturn {
 public:
  LogReturn(const Market& market, const OptionSpec& spec, const FactorSelection& selection)
      : market_(market), spec_(spec), selection_(selection) {
    check_option(market, spec);
    selection.check_against(market.model().factor_count());
    const Market reduced = market.restricted(selection);
    MarketState at_tau = reduced.state();
    at_tau.t = spec.tau;
    const Market reduced_tau = validate(reduced.model(), at_tau);
    // Lambda(T) cancels in the ratio h_sel(tau,T) / h_sel(t,T).
    drift_ = std::log(deterministic_part(reduced_tau, spec.T)) -
             std::log(deterministic_part(reduced, spec.T));
    f0_ = forward_price(market, spec.T).price;
  }

  std::size_t dimension() const { return market_.model().factor_count() + 1; }
  double initial_forward() const { return f0_; }

  double operator()(std::span<const double> z) const {
    const auto& m = market_.model();
    const auto& s = market_.state();
    const MarketState end = advance(m, s, spec_.tau, z);
    double v = drift_ + (end.x - s.x);
    for (std::size_t i : selection_.indices()) {
      const double beta = m.factors[i - 1].beta;
      v += std::exp(-beta * (spec_.T - spec_.tau)) * end.y[i - 1] -
           std::exp(-beta * (spec_.T - s.t)) * s.y[i - 1];
    }
    return v;
  }

 private:
  const Market& market_;
  const OptionSpec& spec_;
  const FactorSelection& selection_;
  double drift_ = 0.0;
  double f0_ = 0.0;
};

}  // namespace

NormalStream::NormalStream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

double NormalStream::uniform() {
  // 53 random bits centred in their cell: strictly inside (0, 1).
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double NormalStream::next() { return std_normal_inverse_cdf(uniform()); }

void NormalStream::fill(std::span<double> out) {
  for (double& v : out) v = next();
}

MarketState advance(const SpotModel& model, const MarketState& from, double u,
                    std::span<const double> normals) {
  if (!(u >= from.t)) {
    throw Error(ErrorCode::TimeOrderViolation, "cannot simulate backwards from t=" +
                                                   detail::format_double(from.t) + " to " +
                                                   detail::format_double(u));
  }
  const std::size_t n = model.factor_count();
  if (normals.size() < n + 1 || from.y.size() != n) {
    throw Error(ErrorCode::StateLengthMismatch, "transition needs one normal per factor plus one");
  }
  const double dt = u - from.t;
  MarketState to;
  to.t = u;
  to.x = from.x + model.mu * dt + model.sigma * std::sqrt(dt) * normals[0];
  to.y.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& f = model.factors[i];
    const double sd = std::sqrt(f.sigma * f.sigma / (2.0 * f.beta) * -std::expm1(-2.0 * f.beta * dt));
    to.y[i] = std::exp(-f.beta * dt) * from.y[i] + sd * normals[i + 1];
  }
  return to;
}

MarketState simulate_terminal(const Market& market, double u, NormalStream& rng) {
  std::vector<double> z(market.model().factor_count() + 1);
  rng.fill(z);
  return advance(market.model(), market.state(), u, z);
}

McEstimate mc_forward(const Market& market, double T, const McConfig& cfg) {
  if (!(T >= market.t())) {
    throw Error(ErrorCode::TimeOrderViolation, "forward delivery precedes valuation time");
  }
  const auto& m = market.model();
  const double lambda = m.seasonality(T);
  auto spot = [&](std::span<const double> z) {
    const MarketState end = advance(m, market.state(), T, z);
    double e = end.x;
    for (double y : end.y) e += y;
    return lambda * std::exp(e);
  };
  return estimate_mean(cfg, m.factor_count() + 1, spot);
}

McEstimate mc_option(const Market& market, const OptionSpec& spec, const FactorSelection& selection,
                     const McConfig& cfg) {
  const LogReturn z_of(market, spec, selection);
  const double f0 = z_of.initial_forward();
  const double K = resolve_strike(spec.strike, f0);
  const double discount = std::exp(-spec.r * (spec.tau - market.t()));
  auto payoff = [&](std::span<const double> z) {
    return discount * std::max(f0 * std::exp(z_of(z)) - K, 0.0);
  };
  return estimate_mean(cfg, z_of.dimension(), payoff);
}

McEstimate mc_evolved_forward(const Market& market, const OptionSpec& spec,
                              const FactorSelection& selection, const McConfig& cfg) {
  const LogReturn z_of(market, spec, selection);
  const double f0 = z_of.initial_forward();
  return estimate_mean(cfg, z_of.dimension(),
                       [&](std::span<const double> z) { return f0 * std::exp(z_of(z)); });
}

McEstimate mc_log_return_variance(const Market& market, const OptionSpec& spec,
                                  const FactorSelection& selection, const McConfig& cfg) {
  const LogReturn z_of(market, spec, selection);
  const std::size_t dim = z_of.dimension();
  // One sample per pair of draws: (Z1 - Z2)^2 / 2 for independent draws, and
  // ((Z(z) - Z(-z)) / 2)^2 for mirrored ones. Both are unbiased for Var Z.
  return run_blocks(cfg, cfg.paths / 2, [&] {
    return [&z_of, anti = cfg.antithetic, a = std::vector<double>(dim),
            b = std::vector<double>(dim)](NormalStream& rng) mutable {
      rng.fill(a);
      if (anti) {
        for (std::size_t k = 0; k < a.size(); ++k) b[k] = -a[k];
        const double w = 0.5 * (z_of(a) - z_of(b));
        return w * w;
      }
      rng.fill(b);
      const double d = z_of(a) - z_of(b);
      return 0.5 * d * d;
    };
  });
}

McEstimate mc_average_forward(const Market& market, double T1, double T2, int time_steps,
                              const McConfig& cfg) {
  if (!(market.t() <= T1 && T1 < T2)) {
    throw Error(ErrorCode::TimeOrderViolation, "need t <= T1 < T2");
  }
  if (time_steps < 2) throw Error(ErrorCode::BadNodeCount, "need at least 2 time steps");
  const auto& m = market.model();
  const std::size_t n1 = m.factor_count() + 1;
  const std::size_t nodes = static_cast<std::size_t>(time_steps) + 1;
  std::vector<double> times(nodes);
  std::vector<double> lambda(nodes);
  for (std::size_t k = 0; k < nodes; ++k) {
    times[k] = k + 1 == nodes ? T2 : T1 + (T2 - T1) * static_cast<double>(k) / time_steps;
    lambda[k] = m.seasonality(times[k]);
  }
  auto average_spot = [&](std::span<const double> z) {
    MarketState s = market.state();
    double sum = 0.0;
    for (std::size_t k = 0; k < nodes; ++k) {
      s = advance(m, s, times[k], z.subspan(k * n1, n1));
      double e = s.x;
      for (double y : s.y) e += y;
      const double w = (k == 0 || k + 1 == nodes) ? 0.5 : 1.0;
      sum += w * lambda[k] * std::exp(e);
    }
    return sum / time_steps;
  };
  return estimate_mean(cfg, nodes * n1, average_spot);
}

}  // namespace enerfwd
