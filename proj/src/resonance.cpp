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

#include "sqzopt/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace sqzopt {

const std::vector<std::string>& single_photon_basis() {
  static const std::vector<std::string> b{"|1,0,0>", "|1,0,1>", "|1,0,2>", "|0,1,0>", "|0,1,1>", "|0,1,2>"};
  return b;
}

const std::vector<std::string>& two_photon_basis() {
  static const std::vector<std::string> b{"|2,0>", "|1,1>", "|0,2>"};
  return b;
}

namespace {

SystemParams for_direction(SystemParams p, bool squeezed) {
  p.direction = squeezed ? Direction::Port1 : Direction::Port2;
  p.full_model = false;
  p.delta = 0.0;
  p.eps = 0.0;
  return p;
}

}  // namespace

Eigen::MatrixXd single_photon_matrix(const SystemParams& params, const SqueezedFrame& f, bool squeezed) {
  const SystemParams p = for_direction(params, squeezed);
  const Detunings det = optical_detunings(p, f);
  const double g = squeezed ? f.g_s : p.g0;
  const double Ja = p.J0;
  const double Jb = squeezed ? f.J_s : p.J0;
  // Optomechanical prefactors of n_a X and n_b X.
  double ca = 0.0, cb = 0.0;
  switch (p.placement) {
    case Placement::AreaI: ca = -Ja; cb = Jb; break;
    case Placement::AreaII: ca = -Ja; break;
    case Placement::AreaIII: cb = -Jb; break;
  }
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(6, 6);
  for (int k = 0; k < 3; ++k) {
    M(k, k) = det.a + k * p.delta_m;
    M(3 + k, 3 + k) = det.b + k * p.delta_m;
    M(k, 3 + k) = M(3 + k, k) = g;
  }
  for (int k = 0; k < 2; ++k) {
    const double s = std::sqrt(k + 1.0);
    M(k, k + 1) = M(k + 1, k) = ca * s;
    M(3 + k, 4 + k) = M(4 + k, 3 + k) = cb * s;
  }
  return M;
}

Eigen::MatrixXd single_excitation_block(const SystemParams& params, const SqueezedFrame& f, bool squeezed) {
  const SystemParams p = for_direction(params, squeezed);
  const SpacePtr space = model_space(p, Cutoffs{1, 2, -1});
  const DenseMat H = build_hamiltonian(p, f, space).dense();
  std::vector<int> idx;
  for (int na = 1; na >= 0; --na)
    for (int nc = 0; nc < 3; ++nc) {
      const int occ[3] = {na, 1 - na, nc};
      idx.push_back(space->index(occ));
    }
  Eigen::MatrixXd M(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) M(i, j) = H(idx[i], idx[j]).real();
  return M;
}

ResonanceReport resonance_roots(const Eigen::MatrixXd& M0) {
  if (M0.rows() != M0.cols()) throw std::invalid_argument("resonance matrix must be square");
  if ((M0 - M0.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, M0.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("resonance matrix must be symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M0);
  const Eigen::Index n = M0.rows();
  ResonanceReport r;
  r.eigenvectors.resize(n, n);
  // Eigenvalues come ascending, so roots −λ come out descending; reverse.
  for (Eigen::Index k = 0; k < n; ++k) {
    r.roots.push_back(-es.eigenvalues()(n - 1 - k));
    Eigen::VectorXd v = es.eigenvectors().col(n - 1 - k);
    Eigen::Index imax;
    v.cwiseAbs().maxCoeff(&imax);
    if (v(imax) < 0.0) v = -v;
    r.eigenvectors.col(k) = v;
  }
  return r;
}

EigenComponents eigenstate_components(const Eigen::MatrixXd& M0, double root) {
  const ResonanceReport r = resonance_roots(M0);
  std::vector<Eigen::Index> near;
  Eigen::Index best = -1;
  for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(r.roots.size()); ++k) {
    const double d = std::abs(r.roots[static_cast<std::size_t>(k)] - root);
    if (d <= 1e-6) near.push_back(k);
    if (best < 0 || d < std::abs(r.roots[static_cast<std::size_t>(best)] - root)) best = k;
  }
  if (near.empty()) throw std::invalid_argument("no resonance root within 1e-6 of the requested value");

  EigenComponents c;
  c.root = r.roots[static_cast<std::size_t>(best)];
  c.vector = r.eigenvectors.col(best);
  c.degenerate = near.size() > 1;
  c.subspace.resize(M0.rows(), static_cast<Eigen::Index>(near.size()));
  for (std::size_t k = 0; k < near.size(); ++k) c.subspace.col(static_cast<Eigen::Index>(k)) = r.eigenvectors.col(near[k]);

  const double vmax = c.vector.cwiseAbs().maxCoeff();
  double vmin = vmax;
  for (Eigen::Index i = 0; i < c.vector.size(); ++i)
    if (std::abs(c.vector(i)) > 1e-12 * vmax) vmin = std::min(vmin, std::abs(c.vector(i)));
  for (Eigen::Index i = 0; i < c.vector.size(); ++i) {
    const double a = std::abs(c.vector(i));
    c.ratios.push_back(a > 1e-12 * vmax ? a / vmin : 0.0);
  }
  return c;
}

Eigen::MatrixXd two_photon_matrix(double g_nu) {
  if (!(g_nu >= 0.0)) throw std::invalid_argument("g_nu must be non-negative");
  const double c = std::sqrt(2.0) * g_nu;
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(3, 3);
  M(0, 1) = M(1, 0) = c;
  M(1, 2) = M(2, 1) = c;
  return M;
}

ResonanceReport two_photon_resonances(double g_nu) {
  // 2Δ + λ = 0 for each eigenvalue λ of the coupling part.
  ResonanceReport r = resonance_roots(two_photon_matrix(g_nu));
  for (double& x : r.roots) x *= 0.5;
  return r;
}

}  // namespace sqzopt
