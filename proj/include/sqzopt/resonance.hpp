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

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sqzopt/model.hpp"

namespace sqzopt {

// Basis labels |n_a, n_b, n_c⟩ of the single-excitation subspace with at
// most two phonons, in matrix order.
const std::vector<std::string>& single_photon_basis();
// |n_a, n_b⟩ of the two-photon subspace.
const std::vector<std::string>& two_photon_basis();

// M0 of the truncated single-photon problem M(Δ) = Δ·I + M0. Δ-independent
// detuning offsets (Δ_s^b vs Δ_s^a, and the squeezed shift unless
// p.equal_detunings) stay on the b diagonal.
Eigen::MatrixXd single_photon_matrix(const SystemParams& p, const SqueezedFrame& f, bool squeezed);

// Same block read off the full Hamiltonian at Δ = 0, ε = 0.
Eigen::MatrixXd single_excitation_block(const SystemParams& p, const SqueezedFrame& f, bool squeezed);

struct ResonanceReport {
  std::vector<double> roots;     // ascending
  Eigen::MatrixXd eigenvectors;  // column k belongs to roots[k], unit norm
};

// Δ at which M(Δ) = Δ·I + M0 has a zero eigenvalue, i.e. Δ = −eig(M0).
ResonanceReport resonance_roots(const Eigen::MatrixXd& M0);

struct EigenComponents {
  double root = 0.0;
  Eigen::VectorXd vector;      // unit norm, largest component positive
  std::vector<double> ratios;  // |v_i| / smallest nonzero |v_j|; 0 for vanishing components
  bool degenerate = false;
  Eigen::MatrixXd subspace;    // orthonormal basis of all roots within tolerance
};

// Throws std::invalid_argument if no root lies within 1e-6 of `root`.
EigenComponents eigenstate_components(const Eigen::MatrixXd& M0, double root);

// Two-photon block 2Δ·I + sqrt(2) g_ν tridiag(1, 0, 1) on {|2,0⟩, |1,1⟩, |0,2⟩}.
Eigen::MatrixXd two_photon_matrix(double g_nu);
ResonanceReport two_photon_resonances(double g_nu);

}  // namespace sqzopt
