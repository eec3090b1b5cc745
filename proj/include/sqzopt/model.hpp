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

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "sqzopt/fock.hpp"

namespace sqzopt {

// Where the mechanical string sits: between both rings (I), next to ring A
// only (II) or next to ring B only (III).
enum class Placement { AreaI, AreaII, AreaIII };

// Probe input port. Port1 drives the CCW mode of ring A, which talks to the
// squeezed CW mode of ring B; Port2 drives the CW mode, which sees the
// unsqueezed CCW mode of ring B.
enum class Direction { Port1, Port2 };

Placement parse_placement(std::string_view s);
Direction parse_direction(std::string_view s);
std::string to_string(Placement p);
std::string to_string(Direction d);

// All frequencies and rates in units of the mechanical detuning Δ_m.
struct SystemParams {
  double g0 = 0.4;          // ring-ring coupling
  double J0 = 0.09;         // single-photon optomechanical coupling
  double beta = 0.9;        // pump ratio Ω/Δ_s^b, in [0, 1)
  double delta_sa = 0.01;   // Δ_s^a = ω_a − ω_s/2
  double delta_sb = 0.01;   // Δ_s^b = ω_b − ω_s/2
  double delta = 0.0;       // probe detuning Δ = Δ_s^a − Δ_p
  double delta_m = 1.0;     // mechanical frequency in the probe frame (unit)
  double kappa_ex1 = 0.1;   // bus coupling of ring A
  double kappa_ex2 = 0.1;   // drop coupling of ring B
  double kappa_i = 0.0;     // intrinsic loss of both rings
  double gamma_m = 0.007;   // mechanical damping
  double n_th = 0.0;        // thermal phonon number
  cplx eps{0.03, 0.0};      // probe amplitude
  Placement placement = Placement::AreaI;
  Direction direction = Direction::Port1;
  bool full_model = false;  // keep the counter-propagating optical pair too
  // Use Δ for every optical detuning instead of the frame-exact values
  // Δ_b = Δ_s^b − Δ_p and Δ_b^s = Δ_s^b sqrt(1 − β²) − Δ_p.
  bool equal_detunings = false;

  double kappa_a() const { return kappa_ex1 + kappa_i; }
  double kappa_b() const { return kappa_ex2 + kappa_i; }
  // Δ_p = Δ_s^a − Δ
  double probe_frequency() const { return delta_sa - delta; }

  void validate() const;
};

struct SqueezedFrame {
  double r_s = 0.0;       // ¼ ln[(1+β)/(1−β)]
  double g_s = 0.0;       // g0 cosh r_s
  double J_s = 0.0;       // J0 cosh 2r_s
  double delta_bs = 0.0;  // Δ_s^{bs} = Δ_s^b sqrt(1 − β²), before the probe shift
  double force_F = 0.0;   // −J0 sinh² r_s
};

SqueezedFrame derive_squeezed_frame(const SystemParams& p);

// Optical detunings entering the Hamiltonian for the current direction.
struct Detunings {
  double a;        // driven ring-A mode
  double b;        // its ring-B partner (squeezed for Port1)
  double a_extra;  // counter-propagating ring-A mode (full model)
  double b_extra;  // counter-propagating ring-B mode (full model)
};
Detunings optical_detunings(const SystemParams& p, const SqueezedFrame& f);

// Fock cutoffs are maximum occupations; a mode with cutoff n has n+1 levels.
struct Cutoffs {
  int optical = 3;
  int phonon = 8;
  int spectator = -1;  // extra optical pair of the full model; <0 means `optical`
};

// Mode order: a, b, [a2, b2,] c. a is the probed ring-A mode, b its ring-B
// partner, a2/b2 the opposite circulation pair, c the mechanical mode.
SpacePtr model_space(const SystemParams& p, const Cutoffs& cutoffs);

// Frame Hamiltonian without constant terms. Port1 is the squeezed-picture
// Hamiltonian, Port2 the bare one; the full model appends the opposite pair.
Operator build_hamiltonian(const SystemParams& p, const SqueezedFrame& f, const SpacePtr& space);

// Collapse operators o_k for the factor-2 dissipator
//   L[o]ρ = 2 oρo† − o†oρ − ρo†o,
// weighted so that each channel decays at its stated rate:
// o = sqrt(κ/2) a, sqrt(κ/2) b, sqrt(γ(n+1)/2) c, sqrt(γ n/2) c†.
// Channels with zero weight are dropped.
std::vector<Operator> collapse_operators(const SystemParams& p, const SpacePtr& space);

// Per-basis-state total optical excitation number. The drive-free part of
// every model Hamiltonian conserves it.
std::vector<int> optical_excitation_labels(const SpacePtr& space);

// Size of the dropped counter-rotating coupling g0 sinh r_s against the
// frequency gap Δ_s^a + Δ_s^b sqrt(1−β²) it has to stay small against.
struct RwaDiagnostic {
  double dropped_coupling;
  double frequency_gap;
  double ratio() const { return frequency_gap == 0.0 ? INFINITY : dropped_coupling / frequency_gap; }
};
RwaDiagnostic rwa_diagnostic(const SystemParams& p, const SqueezedFrame& f);

}  // namespace sqzopt
