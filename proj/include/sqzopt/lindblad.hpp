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

#include <stdexcept>
#include <string>
#include <vector>

#include "sqzopt/fock.hpp"

namespace sqzopt {

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Markovian generator
//   dρ/dt = −i[H, ρ] + Σ_k (2 o_k ρ o_k† − o_k†o_k ρ − ρ o_k†o_k)
// written as Aρ + ρA† + 2 Σ_k o_k ρ o_k† with A = −iH − Σ_k o_k†o_k.
// Density matrices are vectorized column-major, so the assembled matrix is
//   I⊗A + conj(A)⊗I + 2 Σ_k conj(o_k)⊗o_k.
class Liouvillian {
 public:
  Liouvillian(const Operator& hamiltonian, std::vector<Operator> collapse, double hermitian_tol = 1e-10);

  const SpacePtr& space_ptr() const { return space_; }
  const HilbertSpace& space() const { return *space_; }
  int dim() const { return dim_; }
  long long size() const { return static_cast<long long>(dim_) * dim_; }

  const Operator& hamiltonian() const { return hamiltonian_; }
  const std::vector<Operator>& collapse() const { return collapse_; }
  // A = −iH − Σ o†o
  const SparseMat& effective() const { return effective_; }

  // out = L(rho) without forming the superoperator.
  void apply(const DenseMat& rho, DenseMat& out) const;
  DenseMat apply(const DenseMat& rho) const;

  // D²×D² superoperator. Memory grows as D² times the operator fill.
  SparseMat assemble() const;

 private:
  SpacePtr space_;
  int dim_;
  Operator hamiltonian_;
  std::vector<Operator> collapse_;
  SparseMat effective_;
  SparseMat effective_adj_;
  std::vector<SparseMat> jumps_;
  std::vector<SparseMat> jumps_adj_;
};

Liouvillian build_liouvillian(const Operator& hamiltonian, const std::vector<Operator>& collapse);

enum class SolverMethod { direct, iterative, automatic };
std::string to_string(SolverMethod m);
SolverMethod parse_solver_method(const std::string& s);

struct SteadyStateOptions {
  SolverMethod method = SolverMethod::automatic;
  double tol = 1e-14;  // relative residual of the normalized linear system
  int max_iterations = 20000;
  // Basis partition for the block preconditioner; blocks must be invariant
  // under the dominant (drive-free) part of the generator. Empty: one block.
  std::vector<int> sectors;
  // `automatic` factorizes directly up to this many unknowns (D²).
  long long direct_max_size = 2500;
  bool check_positivity = true;
};

struct SteadyStateResult {
  DenseMat rho;
  double residual = 0.0;  // max |L vec(ρ)|
  std::vector<int> cutoffs;
  SolverMethod solver = SolverMethod::direct;
  double wall_time = 0.0;
  int iterations = 0;
  double trace_error = 0.0;
  double hermiticity_error = 0.0;
  double min_eigenvalue = 0.0;
};

// Solves L vec(ρ) = 0 with the row of the last diagonal element replaced by
// the trace condition tr ρ = 1, then symmetrizes ρ ← (ρ + ρ†)/2. Throws
// SolverError for singular systems, Krylov stagnation, or a minimum
// eigenvalue below −1e-8.
SteadyStateResult steady_state(const Liouvillian& L, const SteadyStateOptions& options = {});

struct DensityCheck {
  double trace_error;
  double hermiticity_error;
  double min_eigenvalue;
};
DensityCheck check_density_matrix(const DenseMat& rho);

struct PropagateOptions {
  double rtol = 1e-10;
  double atol = 1e-13;
  double initial_step = 0.0;  // 0 picks one from the generator scale
  double min_step = 1e-12;
  long long max_steps = 50'000'000;
};

// ρ(t_final) by adaptive Dormand–Prince 5(4) on dρ/dt = L(ρ).
// Throws SolverError on step-size underflow.
DenseMat propagate(const Liouvillian& L, const DenseMat& rho0, double t_final, const PropagateOptions& options = {});

// tr(ρ O)
cplx expectation(const DenseMat& rho, const Operator& op);

}  // namespace sqzopt
