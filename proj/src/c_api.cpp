// Copyright 2026 The enerfwd Authors
// SPDX-License-Identifier: Apache-2.0

#include "enerfwd/enerfwd.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <string>
#include <thread>

#include "enerfwd/bounds.hpp"
#include "enerfwd/forward.hpp"
#include "enerfwd/pricing.hpp"
#include "enerfwd/reports.hpp"
#include "enerfwd/scenario.hpp"

struct enerfwd_scenario {
  enerfwd::Scenario scenario;
};

namespace {

using namespace enerfwd;

thread_local std::string g_last_error;
thread_local std::string g_last_kind;

enerfwd_status fail(enerfwd_status status, std::string kind, std::string message) {
  g_last_kind = std::move(kind);
  g_last_error = std::move(message);
  return status;
}

template <class F>
enerfwd_status guarded(F&& body) {
  try {
    g_last_error.clear();
    g_last_kind.clear();
    return body();
  } catch (const Error& e) {
    return fail(is_unsupported(e.code()) ? ENERFWD_ERR_UNSUPPORTED : ENERFWD_ERR_VALIDATION,
                std::string(to_string(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ENERFWD_ERR_INTERNAL, "OutOfMemory", "out of memory");
  } catch (const std::exception& e) {
    return fail(ENERFWD_ERR_INTERNAL, "Internal", e.what());
  } catch (...) {
    return fail(ENERFWD_ERR_INTERNAL, "Internal", "unknown exception");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::InvalidInput, std::string(what) + " must not be NULL");
}

OptionSpec option_at(const Scenario& sc, double T) {
  OptionSpec spec = sc.option;
  spec.T = T;
  return spec;
}

FactorSelection pick(const Scenario& sc, enerfwd_selection sel) {
  if (sel == ENERFWD_SELECT_ALL) return FactorSelection::all(sc.model.factor_count());
  if (sel == ENERFWD_SELECT_SCENARIO) return sc.selection;
  throw Error(ErrorCode::InvalidInput, "unknown selection kind");
}

McConfig mc_config(const Scenario& sc) {
  const McSettings s = sc.mc_or_default();
  if (!s.seed) throw Error(ErrorCode::InvalidInput, "Monte Carlo needs an explicit seed");
  McConfig cfg;
  cfg.seed = *s.seed;
  cfg.paths = s.paths;
  cfg.antithetic = s.antithetic;
  cfg.chunks = s.chunks.value_or(std::max(1u, std::thread::hardware_concurrency()));
  return cfg;
}

void fill(enerfwd_bound_report* out, const ErrorBoundReport& r) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  *out = {r.T, r.exact, r.lower, r.upper, r.alpha_or_h, r.gamma_or_g, r.b.value_or(nan), r.k.value_or(nan)};
}

}  // namespace

extern "C" {

const char* enerfwd_version(void) { return "0.1.0"; }
const char* enerfwd_last_error(void) { return g_last_error.c_str(); }
const char* enerfwd_last_error_kind(void) { return g_last_kind.c_str(); }
void enerfwd_string_free(char* s) { std::free(s); }

enerfwd_status enerfwd_scenario_example(enerfwd_scenario** out) {
  return guarded([&] {
    require(out, "out");
    *out = new enerfwd_scenario{example_scenario()};
    return ENERFWD_OK;
  });
}

enerfwd_status enerfwd_scenario_parse(const char* json, size_t length, enerfwd_scenario** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = nullptr;
    *out = new enerfwd_scenario{parse_scenario(std::string_view(json, length))};
    return ENERFWD_OK;
  });
}

enerfwd_status enerfwd_scenario_load(const char* path, enerfwd_scenario** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = nullptr;
    *out = new enerfwd_scenario{load_scenario(path)};
    return ENERFWD_OK;
  });
}

enerfwd_status enerfwd_scenario_override(const enerfwd_scenario* base, const enerfwd_overrides* o,
                                         enerfwd_scenario** out) {
  return guarded([&] {
    require(base, "scenario");
    require(o, "overrides");
    require(out, "out");
    *out = nullptr;
    Scenario sc = base->scenario;
    if (o->has_grid) sc.grid = GridSpec{o->grid_min, o->grid_max, o->grid_step};
    if (o->has_seed || o->has_paths || o->has_chunks) {
      McSettings mc = sc.mc_or_default();
      if (o->has_seed) mc.seed = o->seed;
      if (o->has_paths) mc.paths = o->paths;
      if (o->has_chunks) mc.chunks = o->chunks;
      sc.mc = mc;
    }
    // Re-run document validation on the merged settings.
    Scenario checked = parse_scenario(to_json(sc));
    *out = new enerfwd_scenario{std::move(checked)};
    return ENERFWD_OK;
  });
}

enerfwd_status enerfwd_scenario_to_json(const enerfwd_scenario* s, char** out) {
  return guarded([&] {
    require(s, "scenario");
    require(out, "out");
    *out = copy_string(to_json(s->scenario));
    return ENERFWD_OK;
  });
}

void enerfwd_scenario_free(enerfwd_scenario* s) { delete s; }

enerfwd_status enerfwd_report(const enerfwd_scenario* s, enerfwd_report_kind kind, enerfwd_format format,
                              const char* const* columns, size_t column_count, char** out) {
  return guarded([&] {
    require(s, "scenario");
    require(out, "out");
    *out = nullptr;
    Table table;
    switch (kind) {
      case ENERFWD_REPORT_CURVE: table = curve_table(s->scenario); break;
      case ENERFWD_REPORT_VOLS: table = vols_table(s->scenario); break;
      case ENERFWD_REPORT_PRICING_ERROR: table = pricing_error_table(s->scenario); break;
      case ENERFWD_REPORT_HEDGING_ERROR: table = hedging_error_table(s->scenario); break;
      default: throw Error(ErrorCode::InvalidInput, "unknown report kind");
    }
    if (columns) {
      std::vector<std::string> names(columns, columns + column_count);
      table = table.project(names);
    }
    *out = copy_string(format == ENERFWD_FORMAT_JSON ? to_json(table) : to_csv(table));
    return ENERFWD_OK;
  });
}

enerfwd_status enerfwd_mc_check(const enerfwd_scenario* s, char** out) {
  return guarded([&] {
    require(s, "scenario");
    require(out, "out");
    *out = nullptr;
    const McCheckReport report = mc_check(s->scenario);
    *out = copy_string(report.json);
    if (!report.pass) {
      return fail(ENERFWD_ERR_ORACLE, "OracleDisagreement",
                  "a Monte Carlo estimate is more than 3 standard errors from its closed form");
    }
    return ENERFWD_OK;
  });
}

enerfwd_status enerfwd_half_life_to_beta(double half_life_days, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = half_life_to_beta(half_life_days);
    return ENERFWD_OK;
  });
}

double enerfwd_std_normal_cdf(double x) { return std_normal_cdf(x); }

enerfwd_status enerfwd_forward_price(const enerfwd_scenario* s, double T, double* price,
                                     double* deterministic) {
  return guarded([&] {
    require(s, "scenario");
    const ForwardQuote q = forward_price(s->scenario.market(), T);
    if (price) *price = q.price;
    if (deterministic) *deterministic = q.deterministic_part;
    return ENERFWD_OK;
  });
}

enerfwd_status enerfwd_average_forward(const enerfwd_scenario* s, double T1, double T2, int nodes,
                                       double* out) {
  return guarded([&] {
    require(s, "scenario");
    require(out, "out");
    *out = average_forward(s->scenario.market(), T1, T2, nodes);
    return ENERFWD_OK;
  });
}

enerfwd_status enerfwd_total_vol(const enerfwd_scenario* s, double T, enerfwd_selection selection,
                                 double* out) {
  return guarded([&] {
    require(s, "scenario");
    require(out, "out");
    const auto& sc = s->scenario;
    *out = total_vol(sc.market(), sc.option.tau, T, pick(sc, selection)).total;
    return ENERFWD_OK;
  });
}

enerfwd_status enerfwd_option_price(const enerfwd_scenario* s, double T, enerfwd_selection selection,
                                    double* out) {
  return guarded([&] {
    require(s, "scenario");
    require(out, "out");
    const auto& sc = s->scenario;
    *out = option_price(sc.market(), option_at(sc, T), pick(sc, selection));
    return ENERFWD_OK;
  });
}

enerfwd_status enerfwd_option_delta(const enerfwd_scenario* s, double T, enerfwd_selection selection,
                                    double* out) {
  return guarded([&] {
    require(s, "scenario");
    require(out, "out");
    const auto& sc = s->scenario;
    *out = black_delta(black_inputs(sc.market(), option_at(sc, T), pick(sc, selection)));
    return ENERFWD_OK;
  });
}

enerfwd_status enerfwd_pricing_bounds(const enerfwd_scenario* s, double T, enerfwd_bound_report* out) {
  return guarded([&] {
    require(s, "scenario");
    require(out, "out");
    const auto& sc = s->scenario;
    fill(out, pricing_error_bounds(sc.market(), option_at(sc, T), sc.selection));
    return ENERFWD_OK;
  });
}

enerfwd_status enerfwd_hedging_bounds(const enerfwd_scenario* s, double T, enerfwd_bound_report* out) {
  return guarded([&] {
    require(s, "scenario");
    require(out, "out");
    const auto& sc = s->scenario;
    fill(out, hedging_error_bounds(sc.market(), option_at(sc, T), sc.selection));
    return ENERFWD_OK;
  });
}

enerfwd_status enerfwd_mc_option(const enerfwd_scenario* s, double T, enerfwd_selection selection,
                                 enerfwd_mc_estimate* out) {
  return guarded([&] {
    require(s, "scenario");
    require(out, "out");
    const auto& sc = s->scenario;
    const McEstimate e = mc_option(sc.market(), option_at(sc, T), pick(sc, selection), mc_config(sc));
    *out = {e.mean, e.std_error, e.ci95_lo, e.ci95_hi, e.paths, e.seed};
    return ENERFWD_OK;
  });
}

}  // extern "C"
