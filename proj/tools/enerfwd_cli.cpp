// Copyright 2026 The enerfwd Authors
// SPDX-License-Identifier: Apache-2.0

// enerfwd: command-line front end over the enerfwd C API.
//
// Exit codes: 0 success, 2 validation, 3 unsupported regime/precondition,
// 4 Monte Carlo oracle disagreement.

#include <unistd.h>

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "enerfwd/enerfwd.h"

namespace {

namespace fs = std::filesystem;

constexpr int kExitValidation = 2;

struct ScenarioDeleter {
  void operator()(enerfwd_scenario* s) const { enerfwd_scenario_free(s); }
};
using ScenarioPtr = std::unique_ptr<enerfwd_scenario, ScenarioDeleter>;

struct StringDeleter {
  void operator()(char* s) const { enerfwd_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct Options {
  std::string scenario;
  std::string out;
  std::string grid;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> paths;
  std::optional<std::uint32_t> chunks;
  bool json = false;
};

class CommandError {
 public:
  explicit CommandError(int code) : code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

void check(enerfwd_status status) {
  if (status == ENERFWD_OK) return;
  std::cerr << "enerfwd: error: " << enerfwd_last_error() << '\n';
  throw CommandError(static_cast<int>(status));
}

void usage_error(const std::string& message) {
  std::cerr << "enerfwd: error: " << message << '\n';
  throw CommandError(kExitValidation);
}

// Writes through a temporary file in the same directory and renames it into
// place, so a failed run never leaves a truncated output behind.
void write_atomically(const fs::path& path, const std::string& content) {
  const fs::path tmp = path.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) usage_error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      usage_error("write failed for " + path.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    usage_error("cannot rename output into " + path.string());
  }
}

void emit(const Options& opts, const std::string& content) {
  if (opts.out.empty()) {
    std::cout << content;
  } else {
    write_atomically(opts.out, content);
  }
}

enerfwd_overrides parse_overrides(const Options& opts) {
  enerfwd_overrides o{};
  if (!opts.grid.empty()) {
    double a = 0, b = 0, step = 0;
    char tail = 0;
    if (std::sscanf(opts.grid.c_str(), "%lf:%lf:%lf%c", &a, &b, &step, &tail) != 3) {
      usage_error("--grid expects a:b:step, got '" + opts.grid + "'");
    }
    o.has_grid = 1;
    o.grid_min = a;
    o.grid_max = b;
    o.grid_step = step;
  }
  if (opts.seed) {
    o.has_seed = 1;
    o.seed = *opts.seed;
  }
  if (opts.paths) {
    o.has_paths = 1;
    o.paths = *opts.paths;
  }
  if (opts.chunks) {
    o.has_chunks = 1;
    o.chunks = *opts.chunks;
  }
  return o;
}

ScenarioPtr load(const Options& opts) {
  enerfwd_scenario* raw = nullptr;
  if (opts.scenario.empty()) {
    check(enerfwd_scenario_example(&raw));
  } else {
    check(enerfwd_scenario_load(opts.scenario.c_str(), &raw));
  }
  ScenarioPtr base(raw);
  const enerfwd_overrides o = parse_overrides(opts);
  check(enerfwd_scenario_override(base.get(), &o, &raw));
  return ScenarioPtr(raw);
}

std::string report(const enerfwd_scenario* s, enerfwd_report_kind kind, bool json,
                   const std::vector<const char*>& columns = {}) {
  char* raw = nullptr;
  check(enerfwd_report(s, kind, json ? ENERFWD_FORMAT_JSON : ENERFWD_FORMAT_CSV,
                       columns.empty() ? nullptr : columns.data(), columns.size(), &raw));
  return OwnedString(raw).get();
}

void run_report(const Options& opts, enerfwd_report_kind kind) {
  const ScenarioPtr s = load(opts);
  emit(opts, report(s.get(), kind, opts.json));
}

void run_mc_check(const Options& opts) {
  const ScenarioPtr s = load(opts);
  char* raw = nullptr;
  const enerfwd_status status = enerfwd_mc_check(s.get(), &raw);
  OwnedString text(raw);
  if (text) emit(opts, text.get());
  check(status);
}

void run_figures(const Options& opts) {
  const ScenarioPtr s = load(opts);
  const bool json = opts.json;
  const std::string ext = json ? ".json" : ".csv";
  // Everything is computed before the first file is written.
  const std::vector<std::pair<std::string, std::string>> files = {
      {"fig1_curve", report(s.get(), ENERFWD_REPORT_CURVE, json)},
      {"fig2_vols", report(s.get(), ENERFWD_REPORT_VOLS, json)},
      {"fig3_pricing_error", report(s.get(), ENERFWD_REPORT_PRICING_ERROR, json)},
      {"fig4_pricing_relative", report(s.get(), ENERFWD_REPORT_PRICING_ERROR, json, {"T", "relative"})},
      {"fig5_hedge_error", report(s.get(), ENERFWD_REPORT_HEDGING_ERROR, json)},
      {"fig6_hedge_relative", report(s.get(), ENERFWD_REPORT_HEDGING_ERROR, json, {"T", "relative"})},
  };
  const fs::path dir = opts.out.empty() ? fs::path("figures") : fs::path(opts.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) usage_error("cannot create output directory " + dir.string());
  for (const auto& [name, content] : files) write_atomically(dir / (name + ext), content);
}

void run_example(const Options& opts) {
  const ScenarioPtr s = load(opts);
  char* raw = nullptr;
  check(enerfwd_scenario_to_json(s.get(), &raw));
  emit(opts, std::string(OwnedString(raw).get()) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pricing, error bounds and Monte Carlo checks for options on energy forwards"};
  app.require_subcommand(1);
  Options opts;

  auto add_common = [&](CLI::App* sub, const char* out_help) {
    sub->add_option("--scenario", opts.scenario, "Scenario JSON file (default: built-in example)");
    sub->add_option("--out", opts.out, out_help);
    sub->add_option("--grid", opts.grid, "Delivery grid T_min:T_max:step in days");
    sub->add_option("--seed", opts.seed, "Monte Carlo seed");
    sub->add_option("--paths", opts.paths, "Monte Carlo paths");
    sub->add_option("--chunks", opts.chunks, "Monte Carlo worker threads (does not change results)");
    sub->add_flag("--json", opts.json, "Machine-readable JSON instead of CSV");
  };
  const char* file_help = "Output file (default: stdout)";

  auto* curve = app.add_subcommand("curve", "Initial forward curve: T,f,h");
  auto* vols = app.add_subcommand("vols", "Volatility term structure: T,sigma_I,sigma_J,sigma_B");
  auto* errors = app.add_subcommand("error-bounds", "Pricing error and bounds: T,exact,lower,upper,relative");
  auto* hedge = app.add_subcommand("hedge-bounds", "Hedging error and bounds: T,exact,lower,upper,relative");
  auto* mc = app.add_subcommand("mc-check", "Monte Carlo verification of the closed forms (JSON)");
  auto* figures = app.add_subcommand("figures", "Write the six figure data series into a directory");
  auto* example = app.add_subcommand("example", "Print the scenario (default: built-in example) as JSON");
  for (auto* sub : {curve, vols, errors, hedge, mc, example}) add_common(sub, file_help);
  add_common(figures, "Output directory (default: ./figures)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitValidation;
  }

  try {
    if (*curve) run_report(opts, ENERFWD_REPORT_CURVE);
    if (*vols) run_report(opts, ENERFWD_REPORT_VOLS);
    if (*errors) run_report(opts, ENERFWD_REPORT_PRICING_ERROR);
    if (*hedge) run_report(opts, ENERFWD_REPORT_HEDGING_ERROR);
    if (*mc) run_mc_check(opts);
    if (*figures) run_figures(opts);
    if (*example) run_example(opts);
  } catch (const CommandError& e) {
    return e.code();
  }
  return 0;
}
