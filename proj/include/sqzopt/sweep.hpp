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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sqzopt/config.hpp"

namespace sqzopt {

// Worker count from SQZOPT_WORKERS, else the hardware concurrency.
int worker_count_from_env();

// Runs fn(i) for i in [0, n) on `workers` threads.
void parallel_for(int n, int workers, const std::function<void(int)>& fn);

// 12 significant digits, "%.12g".
std::string format_number(double v);

struct SweepRow {
  double axis_value = 0.0;
  std::optional<double> T12, T21, T23, eta_db, g2_12, g2_21;
  std::string status = "ok";
  int phonon_cutoff = 0;
  double residual = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<std::string> log;  // one line per auto-cutoff point
  int failures = 0;
};

// One grid point; `log` receives the cutoff history when cutoffs are auto.
SweepRow evaluate_point(const SweepConfig& cfg, double axis_value, std::string* log = nullptr);

// Rows come back in grid order whatever the worker count.
SweepResult run_sweep(const SweepConfig& cfg, int workers);

// axis_value, T12, T21, T23, eta_db, g2_12, g2_21, status, phonon_cutoff, residual
std::string sweep_csv(const SweepResult& r);

struct FrameRow {
  double axis_value;
  SqueezedFrame frame;
  RwaDiagnostic rwa;
};
std::vector<FrameRow> frame_table(const SweepConfig& cfg);
// axis_value, r_s, g_s_over_g0, J_s_over_J0, delta_bs, force_F, rwa_ratio
std::string frame_csv(const std::vector<FrameRow>& rows);

// Reduced minus full model observables at one thermal occupation.
struct DeltaReport {
  double n_th = 0.0;
  double delta1 = 0.0;  // T12 − T12'
  double delta2 = 0.0;  // g2_12 − g2_12'
  double delta3 = 0.0;  // T21 − T21'
  double delta4 = 0.0;  // g2_21 − g2_21'
  double T12 = 0.0, g2_12 = 0.0, T21 = 0.0, g2_21 = 0.0;
  std::string status = "ok";
};

// Solves reduced and full models at cfg.appc_delta_12 (Port1) and
// cfg.appc_delta_21 (Port2) for every n_th in cfg.appc_grid.
std::vector<DeltaReport> validate_detuning_cases(const SweepConfig& cfg, int workers);
// n_th, delta1, delta2, delta3, delta4, T12, g2_12, T21, g2_21, status
std::string appc_csv(const std::vector<DeltaReport>& rows);

}  // namespace sqzopt
