// Copyright 2026 The sqzopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sqzopt/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace sqzopt {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& text, const std::string& what) {
  const std::string s = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ConfigError(what + ": '" + s + "' is not a number");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

}  // namespace

KeyValueConfig KeyValueConfig::parse(const std::string& text) {
  KeyValueConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    if (!cfg.values_.emplace(key, value).second)
      throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
  }
  return cfg;
}

KeyValueConfig KeyValueConfig::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

std::optional<std::string> KeyValueConfig::get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  used_.insert(key);
  return it->second;
}

std::string KeyValueConfig::get_or(const std::string& key, const std::string& fallback) const {
  return get(key).value_or(fallback);
}

double KeyValueConfig::number(const std::string& key, double fallback) const {
  const auto v = get(key);
  return v ? to_double(*v, key) : fallback;
}

int KeyValueConfig::integer(const std::string& key, int fallback) const {
  const auto v = get(key);
  if (!v) return fallback;
  int out = 0;
  const auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
  if (ec != std::errc() || ptr != v->data() + v->size() || v->empty())
    throw ConfigError(key + ": '" + *v + "' is not an integer");
  return out;
}

bool KeyValueConfig::boolean(const std::string& key, bool fallback) const {
  const auto v = get(key);
  if (!v) return fallback;
  std::string s = *v;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw ConfigError(key + ": '" + *v + "' is not a boolean");
}

std::vector<std::string> KeyValueConfig::unused_keys() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : values_)
    if (!used_.count(k)) out.push_back(k);
  return out;
}

std::vector<double> parse_grid(const std::string& text) {
  const std::string s = trim(text);
  if (s.empty()) throw ConfigError("grid: empty");
  std::vector<double> grid;
  if (s.find(':') != std::string::npos) {
    const auto parts = split(s, ':');
    if (parts.size() != 3) throw ConfigError("grid: range must be start:stop:step");
    const double start = to_double(parts[0], "grid"), stop = to_double(parts[1], "grid"),
                 step = to_double(parts[2], "grid");
    if (!(step > 0.0)) throw ConfigError("grid: step must be positive");
    if (stop < start) throw ConfigError("grid: stop must not be below start");
    // Points are start + k·step so the values do not accumulate rounding.
    const long long n = static_cast<long long>(std::floor((stop - start) / step + 1e-9)) + 1;
    if (n > 10'000'000) throw ConfigError("grid: too many points");
    for (long long k = 0; k < n; ++k) grid.push_back(start + static_cast<double>(k) * step);
  } else {
    for (const auto& item : split(s, ',')) grid.push_back(to_double(item, "grid"));
  }
  for (std::size_t k = 1; k < grid.size(); ++k)
    if (!(grid[k] > grid[k - 1])) throw ConfigError("grid: values must be strictly increasing");
  for (double v : grid)
    if (!std::isfinite(v)) throw ConfigError("grid: non-finite value");
  return grid;
}

SweepAxis parse_axis(const std::string& s) {
  if (s == "delta") return SweepAxis::delta;
  if (s == "n_th") return SweepAxis::n_th;
  if (s == "J0") return SweepAxis::J0;
  if (s == "beta") return SweepAxis::beta;
  throw ConfigError("unknown axis '" + s + "' (delta, n_th, J0, beta)");
}

std::string to_string(SweepAxis a) {
  switch (a) {
    case SweepAxis::delta: return "delta";
    case SweepAxis::n_th: return "n_th";
    case SweepAxis::J0: return "J0";
    case SweepAxis::beta: return "beta";
  }
  return "?";
}

void set_axis_value(SystemParams& p, SweepAxis axis, double value) {
  switch (axis) {
    case SweepAxis::delta: p.delta = value; break;
    case SweepAxis::n_th: p.n_th = value; break;
    case SweepAxis::J0: p.J0 = value; break;
    case SweepAxis::beta: p.beta = value; break;
  }
}

SystemParams parse_system_params(const KeyValueConfig& c) {
  SystemParams p;
  p.g0 = c.number("base.g0", p.g0);
  p.J0 = c.number("base.J0", p.J0);
  p.beta = c.number("base.beta", p.beta);
  const double ds = c.number("base.delta_s", p.delta_sa);
  p.delta_sa = c.number("base.delta_sa", ds);
  p.delta_sb = c.number("base.delta_sb", ds);
  p.delta = c.number("base.delta", p.delta);
  const double kappa = c.number("base.kappa", p.kappa_ex1);
  p.kappa_ex1 = c.number("base.kappa_ex1", kappa);
  p.kappa_ex2 = c.number("base.kappa_ex2", kappa);
  p.kappa_i = c.number("base.kappa_i", p.kappa_i);
  p.gamma_m = c.number("base.gamma_m", p.gamma_m);
  p.n_th = c.number("base.n_th", p.n_th);
  p.eps = cplx(c.number("base.eps", p.eps.real()), c.number("base.eps_imag", p.eps.imag()));
  try {
    if (const auto v = c.get("base.placement")) p.placement = parse_placement(*v);
    if (const auto v = c.get("base.direction")) p.direction = parse_direction(*v);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  p.full_model = c.boolean("base.full_model", p.full_model);
  p.equal_detunings = c.boolean("base.equal_detunings", p.equal_detunings);
  try {
    p.validate();
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  return p;
}

SweepConfig parse_sweep_config(const KeyValueConfig& c) {
  SweepConfig s;
  s.base = parse_system_params(c);
  s.axis = parse_axis(c.get_or("axis", "delta"));
  if (const auto g = c.get("grid")) s.grid = parse_grid(*g);
  else s.grid = {0.0};

  if (const auto o = c.get("outputs")) {
    s.outputs.clear();
    for (const auto& item : split(*o, ',')) {
      if (item == "T") s.outputs.insert(Output::T);
      else if (item == "T23") s.outputs.insert(Output::T23);
      else if (item == "eta") s.outputs.insert(Output::eta);
      else if (item == "g2") s.outputs.insert(Output::g2);
      else if (item == "frame" || item == "eigen") s.outputs.insert(Output::frame);
      else throw ConfigError("outputs: unknown item '" + item + "'");
    }
    if (s.outputs.empty()) throw ConfigError("outputs: empty");
  }
  const std::string ports = c.get_or("ports", "both");
  if (ports == "1") s.port2 = false;
  else if (ports == "2") s.port1 = false;
  else if (ports != "both") throw ConfigError("ports: expected 1, 2 or both");

  auto& cut = s.cutoffs;
  cut.fixed.optical = c.integer("cutoffs.optical", cut.fixed.optical);
  cut.fixed.spectator = c.integer("cutoffs.spectator", cut.fixed.spectator);
  const std::string phonon = c.get_or("cutoffs.phonon", std::to_string(cut.fixed.phonon));
  if (phonon == "auto") {
    cut.auto_phonon = true;
    cut.fixed.phonon = c.integer("cutoffs.phonon_start", cut.fixed.phonon);
  } else {
    cut.fixed.phonon = c.integer("cutoffs.phonon", cut.fixed.phonon);
  }
  cut.phonon_step = c.integer("cutoffs.phonon_step", cut.phonon_step);
  cut.phonon_max = c.integer("cutoffs.phonon_max", cut.phonon_max);
  cut.tolerance = c.number("cutoffs.tol", cut.tolerance);
  if (cut.fixed.optical < 2) throw ConfigError("cutoffs.optical must be at least 2");
  if (s.outputs.count(Output::g2) && cut.fixed.optical < 4)
    throw ConfigError("cutoffs.optical must be at least 4 when g2 is requested");
  if (cut.fixed.phonon < 1) throw ConfigError("cutoffs.phonon must be at least 1");
  if (cut.auto_phonon && (cut.phonon_step < 1 || cut.phonon_max < cut.fixed.phonon || !(cut.tolerance > 0.0)))
    throw ConfigError("auto cutoffs need phonon_step >= 1, phonon_max >= phonon_start and tol > 0");

  try {
    s.solver.method = parse_solver_method(c.get_or("solver", "auto"));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  s.solver.tol = c.number("solver.tol", s.solver.tol);
  s.solver.max_iterations = c.integer("solver.max_iterations", s.solver.max_iterations);
  s.solver.direct_max_size = c.integer("solver.direct_max_size", static_cast<int>(s.solver.direct_max_size));

  s.output_path = c.get_or("output", "");
  s.log_path = c.get_or("log", "");

  if (const auto g = c.get("appc.grid")) s.appc_grid = parse_grid(*g);
  s.appc_delta_12 = c.number("appc.delta_12", s.appc_delta_12);
  s.appc_delta_21 = c.number("appc.delta_21", s.appc_delta_21);

  if (s.axis == SweepAxis::beta)
    for (double b : s.grid)
      if (!(b >= 0.0 && b < 1.0)) throw ConfigError("grid: beta values must lie in [0, 1)");
  if (s.axis == SweepAxis::n_th)
    for (double n : s.grid)
      if (n < 0.0) throw ConfigError("grid: n_th values must be non-negative");

  const auto unused = c.unused_keys();
  if (!unused.empty()) throw ConfigError("unknown config key '" + unused.front() + "'");
  return s;
}

}  // namespace sqzopt
