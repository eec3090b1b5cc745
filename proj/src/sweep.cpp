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

#include "sqzopt/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>

#include "sqzopt/observables.hpp"

namespace sqzopt {

int worker_count_from_env() {
  if (const char* env = std::getenv("SQZOPT_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 1024L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(int n, int workers, const std::function<void(int)>& fn) {
  workers = std::clamp(workers, 1, std::max(1, n));
  if (workers == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) fn(i);
    });
  for (auto& t : pool) t.join();
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

std::string sanitize(std::string s) {
  for (char& ch : s)
    if (ch == ',' || ch == '\n' || ch == '\r' || ch == '"') ch = ';';
  return s;
}

struct PointValues {
  SweepRow row;
  std::vector<double> tracked;
};

PointValues solve_point(const SweepConfig& cfg, SystemParams p, const Cutoffs& cut) {
  const bool g2 = cfg.outputs.count(Output::g2) != 0;
  const bool need_port1 = cfg.port1 && (cfg.outputs.count(Output::T) || cfg.outputs.count(Output::eta) || g2);
  const bool need_port2 = cfg.port2 && (cfg.outputs.count(Output::T) || cfg.outputs.count(Output::eta) ||
                                        cfg.outputs.count(Output::T23) || g2);
  PointValues v;
  v.row.phonon_cutoff = cut.phonon;
  if (need_port1) {
    p.direction = Direction::Port1;
    const ObservableSet o = solve_observables(p, cut, cfg.solver, g2);
    v.row.T12 = o.T;
    if (g2) v.row.g2_12 = o.g2;
    v.row.residual = std::max(v.row.residual, o.steady.residual);
  }
  if (need_port2) {
    p.direction = Direction::Port2;
    const ObservableSet o = solve_observables(p, cut, cfg.solver, g2);
    v.row.T21 = o.T;
    v.row.T23 = o.T23;
    if (g2) v.row.g2_21 = o.g2;
    v.row.residual = std::max(v.row.residual, o.steady.residual);
  }
  if (v.row.T12 && v.row.T21 && *v.row.T12 > 0.0 && *v.row.T21 > 0.0 && cfg.outputs.count(Output::eta))
    v.row.eta_db = isolation_ratio_db(*v.row.T21, *v.row.T12);
  if (!cfg.outputs.count(Output::T)) {
    v.row.T12.reset();
    v.row.T21.reset();
  }
  if (!cfg.outputs.count(Output::T23)) v.row.T23.reset();
  for (const auto& x : {v.row.T12, v.row.T21, v.row.T23, v.row.g2_12, v.row.g2_21})
    if (x) v.tracked.push_back(*x);
  return v;
}

double max_relative_change(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size() && k < b.size(); ++k)
    m = std::max(m, std::abs(b[k] - a[k]) / std::max(std::abs(b[k]), 1e-300));
  return m;
}

}  // namespace

SweepRow evaluate_point(const SweepConfig& cfg, double axis_value, std::string* log) {
  SystemParams p = cfg.base;
  set_axis_value(p, cfg.axis, axis_value);
  Cutoffs cut = cfg.cutoffs.fixed;
  try {
    p.validate();
    if (!cfg.cutoffs.auto_phonon) {
      SweepRow row = solve_point(cfg, p, cut).row;
      row.axis_value = axis_value;
      return row;
    }
    std::ostringstream history, changes;
    PointValues prev = solve_point(cfg, p, cut);
    history << cut.phonon;
    bool converged = false;
    while (cut.phonon + cfg.cutoffs.phonon_step <= cfg.cutoffs.phonon_max) {
      cut.phonon += cfg.cutoffs.phonon_step;
      PointValues next = solve_point(cfg, p, cut);
      const double change = max_relative_change(prev.tracked, next.tracked);
      history << ',' << cut.phonon;
      changes << (changes.tellp() > 0 ? "," : "") << format_number(change);
      prev = std::move(next);
      if (change < cfg.cutoffs.tolerance) {
        converged = true;
        break;
      }
    }
    SweepRow row = prev.row;
    row.axis_value = axis_value;
    if (!converged) row.status = "unconverged";
    if (log)
      *log = "axis_value=" + format_number(axis_value) + " phonon_cutoffs=" + history.str() +
             " relative_changes=" + (changes.str().empty() ? "-" : changes.str()) +
             " converged=" + (converged ? "yes" : "no");
    return row;
  } catch (const std::exception& e) {
    SweepRow row;
    row.axis_value = axis_value;
    row.phonon_cutoff = cut.phonon;
    row.status = "error: " + sanitize(e.what());
    if (log) *log = "axis_value=" + format_number(axis_value) + " error=" + row.status;
    return row;
  }
}

SweepResult run_sweep(const SweepConfig& cfg, int workers) {
  SweepResult r;
  const int n = static_cast<int>(cfg.grid.size());
  r.rows.resize(static_cast<std::size_t>(n));
  std::vector<std::string> logs(static_cast<std::size_t>(n));
  parallel_for(n, workers, [&](int i) {
    const auto k = static_cast<std::size_t>(i);
    r.rows[k] = evaluate_point(cfg, cfg.grid[k], cfg.cutoffs.auto_phonon ? &logs[k] : nullptr);
  });
  for (std::size_t k = 0; k < r.rows.size(); ++k) {
    if (r.rows[k].status != "ok") ++r.failures;
    if (cfg.cutoffs.auto_phonon) r.log.push_back(std::move(logs[k]));
  }
  return r;
}

std::string sweep_csv(const SweepResult& r) {
  std::string out = "axis_value,T12,T21,T23,eta_db,g2_12,g2_21,status,phonon_cutoff,residual\n";
  auto field = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
  for (const auto& row : r.rows) {
    out += format_number(row.axis_value) + ',' + field(row.T12) + ',' + field(row.T21) + ',' + field(row.T23) + ',' +
           field(row.eta_db) + ',' + field(row.g2_12) + ',' + field(row.g2_21) + ',' + row.status + ',' +
           std::to_string(row.phonon_cutoff) + ',' + format_number(row.residual) + '\n';
  }
  return out;
}

std::vector<FrameRow> frame_table(const SweepConfig& cfg) {
  std::vector<FrameRow> rows;
  for (double v : cfg.grid) {
    SystemParams p = cfg.base;
    set_axis_value(p, cfg.axis, v);
    const SqueezedFrame f = derive_squeezed_frame(p);
    rows.push_back({v, f, rwa_diagnostic(p, f)});
  }
  return rows;
}

std::string frame_csv(const std::vector<FrameRow>& rows) {
  std::string out = "axis_value,r_s,g_s_over_g0,J_s_over_J0,delta_bs,force_F,rwa_ratio\n";
  for (const auto& r : rows) {
    const double g0 = r.frame.g_s / std::cosh(r.frame.r_s);
    const double J0 = r.frame.J_s / std::cosh(2.0 * r.frame.r_s);
    out += format_number(r.axis_value) + ',' + format_number(r.frame.r_s) + ',' +
           (g0 != 0.0 ? format_number(r.frame.g_s / g0) : std::string()) + ',' +
           (J0 != 0.0 ? format_number(r.frame.J_s / J0) : std::string()) + ',' + format_number(r.frame.delta_bs) +
           ',' + format_number(r.frame.force_F) + ',' + format_number(r.rwa.ratio()) + '\n';
  }
  return out;
}

std::vector<DeltaReport> validate_detuning_cases(const SweepConfig& cfg, int workers) {
  const int n = static_cast<int>(cfg.appc_grid.size());
  std::vector<DeltaReport> out(static_cast<std::size_t>(n));
  // Each n_th needs four reduced/full solves; parallelize over those.
  struct Job {
    int point;
    bool port1;
    bool full;
  };
  std::vector<Job> jobs;
  for (int i = 0; i < n; ++i)
    for (bool port1 : {true, false})
      for (bool full : {false, true}) jobs.push_back({i, port1, full});
  std::vector<ObservableSet> results(jobs.size());
  std::vector<std::string> errors(jobs.size());
  parallel_for(static_cast<int>(jobs.size()), workers, [&](int j) {
    const Job& job = jobs[static_cast<std::size_t>(j)];
    SystemParams p = cfg.base;
    p.n_th = cfg.appc_grid[static_cast<std::size_t>(job.point)];
    p.direction = job.port1 ? Direction::Port1 : Direction::Port2;
    p.delta = job.port1 ? cfg.appc_delta_12 : cfg.appc_delta_21;
    p.full_model = job.full;
    try {
      results[static_cast<std::size_t>(j)] = solve_observables(p, cfg.cutoffs.fixed, cfg.solver, true);
    } catch (const std::bad_alloc&) {
      errors[static_cast<std::size_t>(j)] = "memory budget exceeded; reduce cutoffs.optical, cutoffs.spectator or cutoffs.phonon";
    } catch (const std::exception& e) {
      errors[static_cast<std::size_t>(j)] = sanitize(e.what());
    }
  });
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    DeltaReport& d = out[static_cast<std::size_t>(jobs[j].point)];
    d.n_th = cfg.appc_grid[static_cast<std::size_t>(jobs[j].point)];
    if (!errors[j].empty()) {
      d.status = "error: " + errors[j];
      continue;
    }
    const ObservableSet& o = results[j];
    const double sign = jobs[j].full ? -1.0 : 1.0;
    if (jobs[j].port1) {
      d.delta1 += sign * o.T;
      d.delta2 += sign * o.g2;
      if (!jobs[j].full) d.T12 = o.T, d.g2_12 = o.g2;
    } else {
      d.delta3 += sign * o.T;
      d.delta4 += sign * o.g2;
      if (!jobs[j].full) d.T21 = o.T, d.g2_21 = o.g2;
    }
  }
  return out;
}

std::string appc_csv(const std::vector<DeltaReport>& rows) {
  std::string out = "n_th,delta1,delta2,delta3,delta4,T12,g2_12,T21,g2_21,status\n";
  for (const auto& r : rows)
    out += format_number(r.n_th) + ',' + format_number(r.delta1) + ',' + format_number(r.delta2) + ',' +
           format_number(r.delta3) + ',' + format_number(r.delta4) + ',' + format_number(r.T12) + ',' +
           format_number(r.g2_12) + ',' + format_number(r.T21) + ',' + format_number(r.g2_21) + ',' + r.status + '\n';
  return out;
}

}  // namespace sqzopt
