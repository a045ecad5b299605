// Copyright 2026 The enerfwd Authors
// SPDX-License-Identifier: Apache-2.0

#include "enerfwd/scenario.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "enerfwd/forward.hpp"

namespace enerfwd {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::ParseError, "field '" + field + "': " + what);
}

const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

std::string join(const std::string& path, const char* key) {
  return path.empty() ? std::string(key) : path + "." + key;
}

double number(const json& obj, const char* key, const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_number()) fail(join(path, key), "expected a number");
  return v.get<double>();
}

std::uint64_t count(const json& v, const std::string& field) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) fail(field, "expected a non-negative integer");
  return v.get<std::uint64_t>();
}

Seasonality parse_seasonality(const json& v) {
  if (v.is_number()) return Seasonality::constant(v.get<double>());
  if (v.is_object() && v.contains("constant")) {
    if (!v["constant"].is_number()) fail("seasonality.constant", "expected a number");
    return Seasonality::constant(v["constant"].get<double>());
  }
  if (v.is_object() && v.contains("knots")) {
    const json& k = v["knots"];
    if (!k.is_array()) fail("seasonality.knots", "expected an array of [time, level] pairs");
    std::vector<SeasonalityKnot> knots;
    for (const auto& p : k) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
        fail("seasonality.knots", "expected [time, level] pairs");
      }
      knots.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    return Seasonality::tabulated(std::move(knots));
  }
  fail("seasonality", "expected a number, {\"constant\": v} or {\"knots\": [...]}");
}

json seasonality_json(const Seasonality& s) {
  if (s.kind() == Seasonality::Kind::Constant) return s.value();
  json knots = json::array();
  for (const auto& k : s.knots()) knots.push_back({k.time, k.level});
  return json{{"knots", knots}};
}

Scenario from_json(const json& doc) {
  if (!doc.is_object()) fail("<root>", "expected a JSON object");
  Scenario sc;
  sc.model.seasonality = parse_seasonality(require(doc, "seasonality", ""));
  sc.model.mu = number(doc, "mu", "");
  sc.model.sigma = number(doc, "sigma", "");

  const json& factors = require(doc, "factors", "");
  if (!factors.is_array()) fail("factors", "expected an array");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const std::string p = "factors[" + std::to_string(i) + "]";
    sc.model.factors.push_back({number(factors[i], "beta", p), number(factors[i], "sigma", p)});
  }

  const json& state = require(doc, "state", "");
  sc.state.t = number(state, "t", "state");
  sc.state.x = number(state, "x", "state");
  const json& y = require(state, "y", "state");
  if (!y.is_array()) fail("state.y", "expected an array");
  for (const auto& v : y) {
    if (!v.is_number()) fail("state.y", "expected numbers");
    sc.state.y.push_back(v.get<double>());
  }

  const json& option = require(doc, "option", "");
  sc.option.tau = number(option, "tau", "option");
  sc.option.T = number(option, "T", "option");
  sc.option.r = option.contains("r") ? number(option, "r", "option") : 0.0;
  const json& strike = require(option, "strike", "option");
  const bool has_delta = strike.is_object() && strike.contains("delta");
  const bool has_K = strike.is_object() && strike.contains("K");
  if (has_delta == has_K) fail("option.strike", "give exactly one of 'delta' or 'K'");
  if (has_delta) {
    sc.option.strike = Moneyness{number(strike, "delta", "option.strike")};
  } else {
    sc.option.strike = AbsoluteStrike{number(strike, "K", "option.strike")};
  }

  const json& sel = require(require(doc, "selection", ""), "J", "selection");
  if (!sel.is_array()) fail("selection.J", "expected an array of 1-based factor indices");
  std::vector<std::size_t> idx;
  for (const auto& v : sel) idx.push_back(count(v, "selection.J"));
  sc.selection = FactorSelection(std::move(idx));

  if (doc.contains("grid")) {
    const json& g = doc["grid"];
    sc.grid = GridSpec{number(g, "T_min", "grid"), number(g, "T_max", "grid"), number(g, "step", "grid")};
    if (!(sc.grid->step > 0.0)) fail("grid.step", "must be > 0");
    if (!(sc.grid->t_max >= sc.grid->t_min)) fail("grid", "T_max must be >= T_min");
    if (sc.grid->t_min < sc.state.t) fail("grid.T_min", "must not precede the valuation time");
  }
  if (doc.contains("mc")) {
    const json& m = doc["mc"];
    if (!m.is_object()) fail("mc", "expected an object");
    McSettings s;
    if (m.contains("seed")) s.seed = count(m["seed"], "mc.seed");
    if (m.contains("paths")) s.paths = count(m["paths"], "mc.paths");
    if (m.contains("antithetic")) {
      if (!m["antithetic"].is_boolean()) fail("mc.antithetic", "expected a boolean");
      s.antithetic = m["antithetic"].get<bool>();
    }
    if (m.contains("chunks")) s.chunks = static_cast<unsigned>(count(m["chunks"], "mc.chunks"));
    sc.mc = s;
  }
  if (doc.contains("quad")) {
    sc.quad_nodes = static_cast<int>(count(require(doc["quad"], "nodes", "quad"), "quad.nodes"));
  }
  if (doc.contains("average")) {
    const json& a = doc["average"];
    if (!a.is_object()) fail("average", "expected an object");
    AverageSpec s;
    if (a.contains("T1")) s.T1 = number(a, "T1", "average");
    if (a.contains("T2")) s.T2 = number(a, "T2", "average");
    if (a.contains("steps")) s.steps = static_cast<int>(count(a["steps"], "average.steps"));
    if (a.contains("paths")) s.paths = count(a["paths"], "average.paths");
    sc.average = s;
  }
  return sc;
}

void check_settings(const Scenario& sc) {
  const Market market = sc.market();
  check_option(market, sc.option);
  sc.selection.check_against(market.model().factor_count());
  if (sc.grid) {
    const auto& g = *sc.grid;
    if (!(g.step > 0.0) || !(g.t_max >= g.t_min) || !std::isfinite(g.t_max)) {
      throw Error(ErrorCode::InvalidInput, "grid: need step > 0 and T_max >= T_min");
    }
  }
  if (sc.mc) {
    if (sc.mc->paths < 2) throw Error(ErrorCode::InvalidInput, "mc.paths must be >= 2");
    if (sc.mc->chunks && *sc.mc->chunks < 1) throw Error(ErrorCode::InvalidInput, "mc.chunks must be >= 1");
  }
  if (sc.quad_nodes && (*sc.quad_nodes < 3 || *sc.quad_nodes % 2 == 0)) {
    throw Error(ErrorCode::BadNodeCount, "quad.nodes must be odd and >= 3");
  }
  if (sc.average) {
    if (sc.average->steps < 2) throw Error(ErrorCode::BadNodeCount, "average.steps must be >= 2");
    if (sc.average->paths < 2) throw Error(ErrorCode::InvalidInput, "average.paths must be >= 2");
  }
}

}  // namespace

std::vector<double> GridSpec::nodes() const {
  std::vector<double> out;
  if (!(step > 0.0) || !(t_max >= t_min)) return out;
  const auto n = static_cast<std::size_t>(std::floor((t_max - t_min) / step + 1e-9));
  out.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out.push_back(t_min + static_cast<double>(k) * step);
  return out;
}

Market Scenario::market() const { return validate(model, state); }

int Scenario::quad_nodes_or_default() const { return quad_nodes.value_or(kDefaultQuadratureNodes); }

Scenario parse_scenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
  Scenario sc;
  try {
    sc = from_json(doc);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  check_settings(sc);
  return sc;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open scenario file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string to_json(const Scenario& sc) {
  json doc;
  doc["seasonality"] = seasonality_json(sc.model.seasonality);
  doc["mu"] = sc.model.mu;
  doc["sigma"] = sc.model.sigma;
  doc["factors"] = json::array();
  for (const auto& f : sc.model.factors) doc["factors"].push_back({{"beta", f.beta}, {"sigma", f.sigma}});
  doc["state"] = {{"t", sc.state.t}, {"x", sc.state.x}, {"y", sc.state.y}};
  json strike;
  if (const auto* m = std::get_if<Moneyness>(&sc.option.strike)) {
    strike["delta"] = m->delta;
  } else {
    strike["K"] = std::get<AbsoluteStrike>(sc.option.strike).K;
  }
  doc["option"] = {{"tau", sc.option.tau}, {"T", sc.option.T}, {"strike", strike}, {"r", sc.option.r}};
  doc["selection"] = {{"J", sc.selection.indices()}};
  if (sc.grid) doc["grid"] = {{"T_min", sc.grid->t_min}, {"T_max", sc.grid->t_max}, {"step", sc.grid->step}};
  if (sc.mc) {
    json m = {{"paths", sc.mc->paths}, {"antithetic", sc.mc->antithetic}};
    if (sc.mc->seed) m["seed"] = *sc.mc->seed;
    if (sc.mc->chunks) m["chunks"] = *sc.mc->chunks;
    doc["mc"] = m;
  }
  if (sc.quad_nodes) doc["quad"] = {{"nodes", *sc.quad_nodes}};
  if (sc.average) {
    json a = {{"steps", sc.average->steps}, {"paths", sc.average->paths}};
    if (sc.average->T1) a["T1"] = *sc.average->T1;
    if (sc.average->T2) a["T2"] = *sc.average->T2;
    doc["average"] = a;
  }
  return doc.dump(2);
}

Scenario example_scenario() {
  Scenario sc;
  sc.model.seasonality = Seasonality::constant(10.0);
  sc.model.mu = 0.0;
  sc.model.sigma = 0.01;
  sc.model.factors = {{0.3466, 0.01}, {0.0495, 0.01}};
  sc.state = {0.0, 0.0, {0.0, 0.0}};
  sc.option = {10.0, 25.0, Moneyness{1.0}, 0.0};
  sc.selection = FactorSelection({1});
  sc.grid = GridSpec{0.0, 80.0, 1.0};
  McSettings mc;
  mc.seed = 42;
  sc.mc = mc;
  sc.quad_nodes = kDefaultQuadratureNodes;
  return sc;
}

}  // namespace enerfwd
