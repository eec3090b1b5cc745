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

#include "sqzopt/model.hpp"

#include <cmath>
#include <stdexcept>

namespace sqzopt {

Placement parse_placement(std::string_view s) {
  if (s == "I" || s == "AreaI" || s == "1") return Placement::AreaI;
  if (s == "II" || s == "AreaII" || s == "2") return Placement::AreaII;
  if (s == "III" || s == "AreaIII" || s == "3") return Placement::AreaIII;
  throw std::invalid_argument("unknown placement '" + std::string(s) + "'");
}

Direction parse_direction(std::string_view s) {
  if (s == "1" || s == "Port1" || s == "port1") return Direction::Port1;
  if (s == "2" || s == "Port2" || s == "port2") return Direction::Port2;
  throw std::invalid_argument("unknown direction '" + std::string(s) + "'");
}

std::string to_string(Placement p) {
  switch (p) {
    case Placement::AreaI: return "I";
    case Placement::AreaII: return "II";
    case Placement::AreaIII: return "III";
  }
  return "?";
}

std::string to_string(Direction d) { return d == Direction::Port1 ? "1" : "2"; }

void SystemParams::validate() const {
  auto finite = [](double x) { return std::isfinite(x); };
  if (!(beta >= 0.0 && beta < 1.0)) throw std::domain_error("pump ratio beta must lie in [0, 1)");
  for (double r : {kappa_ex1, kappa_ex2, kappa_i, gamma_m})
    if (!finite(r) || r < 0.0) throw std::domain_error("decay rates must be finite and non-negative");
  if (!finite(n_th) || n_th < 0.0) throw std::domain_error("thermal phonon number must be non-negative");
  for (double x : {g0, J0, delta_sa, delta_sb, delta, delta_m, eps.real(), eps.imag()})
    if (!finite(x)) throw std::domain_error("non-finite model parameter");
}

SqueezedFrame derive_squeezed_frame(const SystemParams& p) {
  if (!(p.beta >= 0.0 && p.beta < 1.0)) throw std::domain_error("pump ratio beta must lie in [0, 1)");
  SqueezedFrame f;
  f.r_s = 0.25 * std::log((1.0 + p.beta) / (1.0 - p.beta));
  f.g_s = p.g0 * std::cosh(f.r_s);
  f.J_s = p.J0 * std::cosh(2.0 * f.r_s);
  f.delta_bs = p.delta_sb * std::sqrt(1.0 - p.beta * p.beta);
  const double sh = std::sinh(f.r_s);
  f.force_F = -p.J0 * sh * sh;
  return f;
}

Detunings optical_detunings(const SystemParams& p, const SqueezedFrame& f) {
  const double dp = p.probe_frequency();
  const double bare_b = p.equal_detunings ? p.delta : p.delta_sb - dp;
  const double squeezed_b = p.equal_detunings ? p.delta : f.delta_bs - dp;
  if (p.direction == Direction::Port1) return {p.delta, squeezed_b, p.delta, bare_b};
  return {p.delta, bare_b, p.delta, squeezed_b};
}

SpacePtr model_space(const SystemParams& p, const Cutoffs& cutoffs) {
  const int spectator = cutoffs.spectator < 0 ? cutoffs.optical : cutoffs.spectator;
  if (cutoffs.optical < 1 || cutoffs.phonon < 1 || spectator < 1)
    throw std::invalid_argument("cutoffs must be at least 1");
  std::vector<Mode> modes{{"a", cutoffs.optical + 1}, {"b", cutoffs.optical + 1}};
  if (p.full_model) {
    modes.push_back({"a2", spectator + 1});
    modes.push_back({"b2", spectator + 1});
  }
  modes.push_back({"c", cutoffs.phonon + 1});
  return make_space(std::move(modes));
}

namespace {

struct Pair {
  const char* x;
  const char* y;
  double g;
  double Jx;
  double Jy;
  double dx;
  double dy;
};

void require_modes(const SpacePtr& space, const SystemParams& p) {
  std::vector<std::string> needed{"a", "b", "c"};
  if (p.full_model) {
    needed.push_back("a2");
    needed.push_back("b2");
  }
  for (const auto& l : needed)
    if (!space->has(l)) throw std::invalid_argument("space lacks mode '" + l + "' required by this model");
  const std::size_t expected = p.full_model ? 5 : 3;
  if (space->num_modes() != expected)
    throw std::invalid_argument(p.full_model ? "full model needs exactly modes a, b, a2, b2, c"
                                             : "reduced model needs exactly modes a, b, c");
}

}  // namespace

Operator build_hamiltonian(const SystemParams& p, const SqueezedFrame& f, const SpacePtr& space) {
  p.validate();
  require_modes(space, p);

  const Detunings det = optical_detunings(p, f);
  const bool port1 = p.direction == Direction::Port1;
  std::vector<Pair> pairs;
  // Port1: a_ccw with squeezed b_s,cw. Port2: a_cw with bare b_ccw.
  pairs.push_back({"a", "b", port1 ? f.g_s : p.g0, p.J0, port1 ? f.J_s : p.J0, det.a, det.b});
  if (p.full_model)
    pairs.push_back({"a2", "b2", port1 ? p.g0 : f.g_s, p.J0, port1 ? p.J0 : f.J_s, det.a_extra, det.b_extra});

  auto op = [&](const char* l, LadderKind k) { return mode_operator(space, l, k); };
  const Operator c = op("c", LadderKind::annihilate);
  const Operator cd = op("c", LadderKind::create);
  const Operator x = c + cd;

  std::vector<Term> terms;
  terms.push_back({p.delta_m, {op("c", LadderKind::number)}});
  for (const auto& pr : pairs) {
    const Operator nx = op(pr.x, LadderKind::number);
    const Operator ny = op(pr.y, LadderKind::number);
    terms.push_back({pr.dx, {nx}});
    terms.push_back({pr.dy, {ny}});
    terms.push_back({pr.g, {op(pr.x, LadderKind::create), op(pr.y, LadderKind::annihilate)}});
    terms.push_back({pr.g, {op(pr.x, LadderKind::annihilate), op(pr.y, LadderKind::create)}});
    switch (p.placement) {
      case Placement::AreaI:  // −(Jx x†x − Jy y†y)(c + c†)
        terms.push_back({-pr.Jx, {nx, x}});
        terms.push_back({pr.Jy, {ny, x}});
        break;
      case Placement::AreaII:
        terms.push_back({-pr.Jx, {nx, x}});
        break;
      case Placement::AreaIII:
        terms.push_back({-pr.Jy, {ny, x}});
        break;
    }
  }
  // i sqrt(κ_ex1) (ε a† − ε* a)
  const cplx drive = cplx(0.0, std::sqrt(p.kappa_ex1));
  if (p.eps != cplx(0.0)) {
    terms.push_back({drive * p.eps, {op("a", LadderKind::create)}});
    terms.push_back({-drive * std::conj(p.eps), {op("a", LadderKind::annihilate)}});
  }
  return combine(space, terms);
}

std::vector<Operator> collapse_operators(const SystemParams& p, const SpacePtr& space) {
  p.validate();
  require_modes(space, p);
  std::vector<Operator> out;
  auto add = [&](double rate, const char* label, LadderKind kind) {
    if (rate > 0.0) out.push_back(std::sqrt(rate / 2.0) * mode_operator(space, label, kind));
  };
  add(p.kappa_a(), "a", LadderKind::annihilate);
  add(p.kappa_b(), "b", LadderKind::annihilate);
  if (p.full_model) {
    add(p.kappa_a(), "a2", LadderKind::annihilate);
    add(p.kappa_b(), "b2", LadderKind::annihilate);
  }
  add(p.gamma_m * (p.n_th + 1.0), "c", LadderKind::annihilate);
  add(p.gamma_m * p.n_th, "c", LadderKind::create);
  return out;
}

std::vector<int> optical_excitation_labels(const SpacePtr& space) {
  std::vector<std::size_t> optical;
  for (std::size_t k = 0; k < space->num_modes(); ++k)
    if (space->modes()[k].label != "c") optical.push_back(k);
  std::vector<int> labels(static_cast<std::size_t>(space->dim()));
  for (int idx = 0; idx < space->dim(); ++idx) {
    int n = 0;
    for (std::size_t k : optical) n += (idx / space->stride(k)) % space->modes()[k].dim;
    labels[static_cast<std::size_t>(idx)] = n;
  }
  return labels;
}

RwaDiagnostic rwa_diagnostic(const SystemParams& p, const SqueezedFrame& f) {
  return {std::abs(p.g0 * std::sinh(f.r_s)), p.delta_sa + f.delta_bs};
}

}  // namespace sqzopt
