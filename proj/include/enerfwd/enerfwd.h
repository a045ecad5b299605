/*
 * Copyright 2026 The enerfwd Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface of the enerfwd shared library.
 *
 * Scenarios are opaque, immutable handles. Every fallible call returns an
 * enerfwd_status whose non-zero values equal the exit codes of the
 * command-line tool; the message and error kind of the most recent failure
 * on the calling thread are available from enerfwd_last_error() and
 * enerfwd_last_error_kind(). Strings returned through char** out-parameters
 * are owned by the caller and released with enerfwd_string_free().
 *
 * Times are in days, rates per day.
 */

#ifndef ENERFWD_ENERFWD_H_
#define ENERFWD_ENERFWD_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(ENERFWD_BUILDING_LIBRARY)
#define ENERFWD_API __declspec(dllexport)
#else
#define ENERFWD_API __declspec(dllimport)
#endif
#else
#define ENERFWD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum enerfwd_status {
  ENERFWD_OK = 0,
  ENERFWD_ERR_VALIDATION = 2,  /* malformed or invalid input */
  ENERFWD_ERR_UNSUPPORTED = 3, /* valid input outside a closed form's preconditions */
  ENERFWD_ERR_ORACLE = 4,      /* Monte Carlo disagrees with a closed form */
  ENERFWD_ERR_INTERNAL = 5
} enerfwd_status;

typedef struct enerfwd_scenario enerfwd_scenario;

typedef enum enerfwd_selection {
  ENERFWD_SELECT_ALL = 0,      /* the full factor set I */
  ENERFWD_SELECT_SCENARIO = 1  /* the scenario's reduced set J */
} enerfwd_selection;

typedef enum enerfwd_report_kind {
  ENERFWD_REPORT_CURVE = 0,         /* T,f,h */
  ENERFWD_REPORT_VOLS = 1,          /* T,sigma_I,sigma_J,sigma_B */
  ENERFWD_REPORT_PRICING_ERROR = 2, /* T,exact,lower,upper,relative */
  ENERFWD_REPORT_HEDGING_ERROR = 3  /* T,exact,lower,upper,relative */
} enerfwd_report_kind;

typedef enum enerfwd_format { ENERFWD_FORMAT_CSV = 0, ENERFWD_FORMAT_JSON = 1 } enerfwd_format;

/* Run-setting overrides applied on top of a scenario; fields with a zero
 * has_* flag are left untouched. */
typedef struct enerfwd_overrides {
  int has_grid;
  double grid_min;
  double grid_max;
  double grid_step;
  int has_seed;
  uint64_t seed;
  int has_paths;
  uint64_t paths;
  int has_chunks;
  uint32_t chunks;
} enerfwd_overrides;

typedef struct enerfwd_bound_report {
  double T;
  double exact;
  double lower;
  double upper;
  double lower_coefficient; /* alpha (pricing) or h (hedging) */
  double upper_coefficient; /* gamma (pricing) or g (hedging) */
  double b;                 /* pricing only, NaN otherwise */
  double k;                 /* hedging only, NaN otherwise */
} enerfwd_bound_report;

typedef struct enerfwd_mc_estimate {
  double mean;
  double std_error;
  double ci95_lo;
  double ci95_hi;
  uint64_t paths;
  uint64_t seed;
} enerfwd_mc_estimate;

ENERFWD_API const char* enerfwd_version(void);
ENERFWD_API const char* enerfwd_last_error(void);
ENERFWD_API const char* enerfwd_last_error_kind(void);
ENERFWD_API void enerfwd_string_free(char* s);

/* Scenarios */
ENERFWD_API enerfwd_status enerfwd_scenario_example(enerfwd_scenario** out);
ENERFWD_API enerfwd_status enerfwd_scenario_parse(const char* json, size_t length, enerfwd_scenario** out);
ENERFWD_API enerfwd_status enerfwd_scenario_load(const char* path, enerfwd_scenario** out);
ENERFWD_API enerfwd_status enerfwd_scenario_override(const enerfwd_scenario* base,
                                                     const enerfwd_overrides* overrides,
                                                     enerfwd_scenario** out);
ENERFWD_API enerfwd_status enerfwd_scenario_to_json(const enerfwd_scenario* s, char** out);
ENERFWD_API void enerfwd_scenario_free(enerfwd_scenario* s);

/* Reports. `columns` (may be NULL) restricts and orders the output columns. */
ENERFWD_API enerfwd_status enerfwd_report(const enerfwd_scenario* s, enerfwd_report_kind kind,
                                          enerfwd_format format, const char* const* columns,
                                          size_t column_count, char** out);

/* JSON verification report. Returns ENERFWD_ERR_ORACLE, with *out still set,
 * when any check has |z| > 3. */
ENERFWD_API enerfwd_status enerfwd_mc_check(const enerfwd_scenario* s, char** out);

/* Analytics on the scenario's market. T overrides the option's delivery midpoint. */
ENERFWD_API enerfwd_status enerfwd_half_life_to_beta(double half_life_days, double* out);
ENERFWD_API double enerfwd_std_normal_cdf(double x);
ENERFWD_API enerfwd_status enerfwd_forward_price(const enerfwd_scenario* s, double T, double* price,
                                                 double* deterministic_part);
ENERFWD_API enerfwd_status enerfwd_average_forward(const enerfwd_scenario* s, double T1, double T2,
                                                   int nodes, double* out);
ENERFWD_API enerfwd_status enerfwd_total_vol(const enerfwd_scenario* s, double T,
                                             enerfwd_selection selection, double* out);
ENERFWD_API enerfwd_status enerfwd_option_price(const enerfwd_scenario* s, double T,
                                                enerfwd_selection selection, double* out);
ENERFWD_API enerfwd_status enerfwd_option_delta(const enerfwd_scenario* s, double T,
                                                enerfwd_selection selection, double* out);
ENERFWD_API enerfwd_status enerfwd_pricing_bounds(const enerfwd_scenario* s, double T,
                                                  enerfwd_bound_report* out);
ENERFWD_API enerfwd_status enerfwd_hedging_bounds(const enerfwd_scenario* s, double T,
                                                  enerfwd_bound_report* out);
ENERFWD_API enerfwd_status enerfwd_mc_option(const enerfwd_scenario* s, double T,
                                             enerfwd_selection selection, enerfwd_mc_estimate* out);

#ifdef __cplusplus
}
#endif

#endif /* ENERFWD_ENERFWD_H_ */
