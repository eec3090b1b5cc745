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

#include <Eigen/Dense>

namespace sqzopt::krylov {

using Vector = Eigen::VectorXcd;
// out = M(in); `out` is presized by the caller.
using LinearMap = std::function<void(const Vector& in, Vector& out)>;

struct Result {
  int iterations = 0;          // operator applications / 2 for BiCGSTAB, inner steps for GMRES
  double relative_residual = 0.0;
  bool converged = false;
};

// Right-preconditioned BiCGSTAB. `x` holds the initial guess on entry.
Result bicgstab(const LinearMap& op, const LinearMap& precond, const Vector& b, Vector& x, double tol,
                int max_iterations);

// Right-preconditioned restarted GMRES(m) with Givens rotations.
Result gmres(const LinearMap& op, const LinearMap& precond, const Vector& b, Vector& x, double tol,
             int max_iterations, int restart);

}  // namespace sqzopt::krylov
