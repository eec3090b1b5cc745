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

#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqzopt/lindblad.hpp"
#include "sqzopt/model.hpp"

namespace sqzopt {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Flat `key = value` file. `#` starts a comment; keys may be dotted
// (`base.g0`). Duplicate keys are an error.
class KeyValueConfig {
 public:
  static KeyValueConfig parse(const std::string& text);
  static KeyValueConfig load(const std::string& path);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  std::optional<std::string> get(const std::string& key) const;
  std::string get_or(const std::string& key, const std::string& fallback) const;
  double number(const std::string& key, double fallback) const;
  int integer(const std::string& key, int fallback) const;
  bool boolean(const std::string& key, bool fallback) const;

  // Keys never read through the accessors above.
  std::vector<std::string> unused_keys() const;
  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
  mutable std::set<std::string> used_;
};

// `start:stop:step` (inclusive of stop up to rounding), a comma list, or a
// single number.
std::vector<double> parse_grid(const std::string& text);

enum class SweepAxis { delta, n_th, J0, beta };
SweepAxis parse_axis(const std::string& s);
std::string to_string(SweepAxis a);
void set_axis_value(SystemParams& p, SweepAxis axis, double value);

enum class Output { T, T23, eta, g2, frame };

struct CutoffSpec {
  Cutoffs fixed;
  bool auto_phonon = false;
  int phonon_step = 2;
  int phonon_max = 60;
  double tolerance = 0.01;  // relative change of tracked observables
};

struct SweepConfig {
  SystemParams base;
  SweepAxis axis = SweepAxis::delta;
  std::vector<double> grid;
  std::set<Output> outputs{Output::T, Output::T23, Output::eta};
  bool port1 = true;
  bool port2 = true;
  CutoffSpec cutoffs;
  SteadyStateOptions solver;
  std::string output_path;  // empty: stdout
  std::string log_path;     // empty: output_path + ".log"
  // Four-case detuning validation.
  std::vector<double> appc_grid{0.0, 2.0};
  double appc_delta_12 = 0.528;
  double appc_delta_21 = 0.405;
};

// Reads base parameters and sweep settings; throws ConfigError.
SystemParams parse_system_params(const KeyValueConfig& cfg);
SweepConfig parse_sweep_config(const KeyValueConfig& cfg);

}  // namespace sqzopt
