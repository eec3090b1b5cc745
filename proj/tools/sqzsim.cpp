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

// sqzsim: parameter sweeps, resonance analysis and model cross-checks.
//
//   sqzsim sweep <config>          transmissions / isolation / g2 CSV
//   sqzsim eigen <config>          single- and two-photon resonance roots
//   sqzsim frame <config>          squeezed-frame parameters
//   sqzsim validate-appc <config>  reduced vs four-mode model differences
//
// Exit status: 0 success, 2 if some grid points failed, 1 on config errors.
// SQZOPT_WORKERS sets the number of worker threads.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sqzopt/config.hpp"
#include "sqzopt/resonance.hpp"
#include "sqzopt/sweep.hpp"

namespace {

using namespace sqzopt;

constexpr int kOk = 0;
constexpr int kConfigError = 1;
constexpr int kPartial = 2;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write '" + path + "'");
  f << text;
}

int cmd_sweep(const SweepConfig& cfg) {
  if (cfg.outputs.count(Output::frame)) {
    write_output(cfg.output_path, frame_csv(frame_table(cfg)));
    return kOk;
  }
  const SweepResult r = run_sweep(cfg, worker_count_from_env());
  write_output(cfg.output_path, sweep_csv(r));
  if (cfg.cutoffs.auto_phonon) {
    std::string log_path = cfg.log_path;
    if (log_path.empty()) log_path = cfg.output_path.empty() ? "sweep.log" : cfg.output_path + ".log";
    std::string text;
    for (const auto& line : r.log) text += line + '\n';
    std::ofstream f(log_path, std::ios::binary | std::ios::app);
    if (!f) throw ConfigError("cannot write '" + log_path + "'");
    f << text;
  }
  if (r.failures > 0) {
    std::cerr << r.failures << " of " << r.rows.size() << " points failed\n";
    return kPartial;
  }
  return kOk;
}

void print_report(std::ostream& os, const char* title, const ResonanceReport& r,
                  const std::vector<std::string>& basis) {
  os << "# " << title << '\n';
  os << "root";
  for (const auto& b : basis) os << ',' << b;
  os << '\n';
  for (std::size_t k = 0; k < r.roots.size(); ++k) {
    os << format_number(r.roots[k]);
    for (Eigen::Index i = 0; i < r.eigenvectors.rows(); ++i)
      os << ',' << format_number(r.eigenvectors(i, static_cast<Eigen::Index>(k)));
    os << '\n';
  }
}

int cmd_eigen(const SweepConfig& cfg) {
  const SystemParams& p = cfg.base;
  const SqueezedFrame f = derive_squeezed_frame(p);
  std::ostringstream os;
  for (bool squeezed : {false, true}) {
    const Eigen::MatrixXd M0 = single_photon_matrix(p, f, squeezed);
    const ResonanceReport r = resonance_roots(M0);
    print_report(os, squeezed ? "single-photon, squeezed (Port1)" : "single-photon, bare (Port2)", r,
                 single_photon_basis());
    os << "# ratios to the smallest nonzero component\n";
    for (double root : r.roots) {
      const EigenComponents c = eigenstate_components(M0, root);
      os << format_number(root);
      for (double x : c.ratios) os << ',' << format_number(x);
      os << (c.degenerate ? ",degenerate" : "") << '\n';
    }
  }
  for (const auto& [name, g] : {std::pair{"two-photon, g0", p.g0}, std::pair{"two-photon, g_s", f.g_s}}) {
    const ResonanceReport r = two_photon_resonances(g);
    print_report(os, name, r, two_photon_basis());
  }
  const RwaDiagnostic rwa = rwa_diagnostic(p, f);
  os << "# rwa: dropped coupling " << format_number(rwa.dropped_coupling) << ", frequency gap "
     << format_number(rwa.frequency_gap) << ", ratio " << format_number(rwa.ratio()) << '\n';
  write_output(cfg.output_path, os.str());
  return kOk;
}

int cmd_frame(const SweepConfig& cfg) {
  SweepConfig c = cfg;
  if (c.axis != SweepAxis::beta) {
    c.axis = SweepAxis::beta;
    c.grid = {cfg.base.beta};
  }
  write_output(cfg.output_path, frame_csv(frame_table(c)));
  return kOk;
}

int cmd_appc(const SweepConfig& cfg) {
  const auto rows = validate_detuning_cases(cfg, worker_count_from_env());
  write_output(cfg.output_path, appc_csv(rows));
  int failures = 0;
  for (const auto& r : rows) failures += r.status != "ok";
  return failures ? kPartial : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steady-state photon transport in a squeezed optomechanical ring pair"};
  app.require_subcommand(1);
  std::string config_path;
  std::string output_override;
  auto add = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("config", config_path, "key = value config file")->required();
    sub->add_option("-o,--output", output_override, "output path, overrides the config ('-' for stdout)");
    return sub;
  };
  auto* sweep = add("sweep", "sweep one parameter and write CSV");
  auto* eigen = add("eigen", "resonance roots and eigenvectors");
  auto* frame = add("frame", "squeezed-frame parameters");
  auto* appc = add("validate-appc", "reduced vs full four-mode model");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfigError;
  }

  try {
    SweepConfig cfg = parse_sweep_config(KeyValueConfig::load(config_path));
    if (!output_override.empty()) cfg.output_path = output_override == "-" ? "" : output_override;
    if (sweep->parsed()) return cmd_sweep(cfg);
    if (eigen->parsed()) return cmd_eigen(cfg);
    if (frame->parsed()) return cmd_frame(cfg);
    if (appc->parsed()) return cmd_appc(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  }
  return kConfigError;
}
