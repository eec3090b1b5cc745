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

#include "sqzopt/krylov.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace sqzopt::krylov {

using cplx = std::complex<double>;

Result bicgstab(const LinearMap& op, const LinearMap& precond, const Vector& b, Vector& x, double tol,
                int max_iterations) {
  Result res;
  const Eigen::Index n = b.size();
  const double bnorm = b.norm();
  if (bnorm == 0.0) {
    x.setZero();
    res.converged = true;
    return res;
  }

  Vector r(n), tmp(n);
  op(x, tmp);
  r = b - tmp;
  const Vector r_hat = r;
  Vector p = Vector::Zero(n), v = Vector::Zero(n), y(n), z(n), s(n), t(n);
  cplx rho_old = 1.0, alpha = 1.0, omega = 1.0;
  res.relative_residual = r.norm() / bnorm;
  Vector x_best = x;
  double best = res.relative_residual;

  for (int it = 1; it <= max_iterations; ++it) {
    const cplx rho = r_hat.dot(r);
    if (std::abs(rho) < 1e-300) break;  // breakdown
    if (it == 1) {
      p = r;
    } else {
      const cplx beta = (rho / rho_old) * (alpha / omega);
      p = r + beta * (p - omega * v);
    }
    precond(p, y);
    op(y, v);
    const cplx denom = r_hat.dot(v);
    if (std::abs(denom) < 1e-300) break;
    alpha = rho / denom;
    s = r - alpha * v;
    res.iterations = it;
    if (s.norm() / bnorm < tol) {
      x += alpha * y;
      // Recompute the true residual before declaring success.
      op(x, tmp);
      res.relative_residual = (b - tmp).norm() / bnorm;
      if (res.relative_residual < tol) {
        res.converged = true;
        return res;
      }
      r = b - tmp;
      rho_old = rho;
      continue;
    }
    precond(s, z);
    op(z, t);
    const double tt = t.squaredNorm();
    if (tt == 0.0) break;
    omega = t.dot(s) / tt;
    x += alpha * y + omega * z;
    r = s - omega * t;
    rho_old = rho;
    res.relative_residual = r.norm() / bnorm;
    if (res.relative_residual < best) {
      best = res.relative_residual;
      x_best = x;
    }
    if (res.relative_residual < tol) {
      op(x, tmp);
      res.relative_residual = (b - tmp).norm() / bnorm;
      if (res.relative_residual < tol) {
        res.converged = true;
        return res;
      }
      r = b - tmp;  // drifted recurrence: continue from the true residual
    }
    if (std::abs(omega) < 1e-300) break;
  }
  if (best < res.relative_residual) x = x_best;
  op(x, tmp);
  res.relative_residual = (b - tmp).norm() / bnorm;
  res.converged = res.relative_residual < tol;
  return res;
}

Result gmres(const LinearMap& op, const LinearMap& precond, const Vector& b, Vector& x, double tol,
             int max_iterations, int restart) {
  Result res;
  const Eigen::Index n = b.size();
  const double bnorm = b.norm();
  if (bnorm == 0.0) {
    x.setZero();
    res.converged = true;
    return res;
  }
  const int m = std::max(1, restart);
  std::vector<Vector> basis(static_cast<std::size_t>(m + 1), Vector(n));
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(m + 1, m);
  Eigen::VectorXcd g(m + 1);
  std::vector<cplx> cs(static_cast<std::size_t>(m)), sn(static_cast<std::size_t>(m));
  Vector w(n), z(n), r(n);

  int total = 0;
  while (total < max_iterations) {
    op(x, w);
    r = b - w;
    double beta = r.norm();
    res.relative_residual = beta / bnorm;
    if (res.relative_residual < tol) {
      res.converged = true;
      break;
    }
    basis[0] = r / beta;
    g.setZero();
    g(0) = beta;
    h.setZero();
    int k = 0;
    for (; k < m && total < max_iterations; ++k, ++total) {
      precond(basis[static_cast<std::size_t>(k)], z);
      op(z, w);
      for (int i = 0; i <= k; ++i) {
        h(i, k) = basis[static_cast<std::size_t>(i)].dot(w);
        w -= h(i, k) * basis[static_cast<std::size_t>(i)];
      }
      const double hn = w.norm();
      h(k + 1, k) = hn;
      if (hn > 0.0) basis[static_cast<std::size_t>(k + 1)] = w / hn;
      for (int i = 0; i < k; ++i) {
        const cplx t = std::conj(cs[i]) * h(i, k) + std::conj(sn[i]) * h(i + 1, k);
        h(i + 1, k) = -sn[i] * h(i, k) + cs[i] * h(i + 1, k);
        h(i, k) = t;
      }
      const double denom = std::hypot(std::abs(h(k, k)), hn);
      cs[k] = denom == 0.0 ? cplx(1.0) : h(k, k) / denom;
      sn[k] = denom == 0.0 ? cplx(0.0) : cplx(hn / denom);
      h(k, k) = denom;
      h(k + 1, k) = 0.0;
      g(k + 1) = -sn[k] * g(k);
      g(k) = std::conj(cs[k]) * g(k);
      res.relative_residual = std::abs(g(k + 1)) / bnorm;
      if (res.relative_residual < tol || hn == 0.0) {
        ++k;
        ++total;
        break;
      }
    }
    // Solve the k×k triangular least-squares system and update x.
    Eigen::VectorXcd yk = h.topLeftCorner(k, k).triangularView<Eigen::Upper>().solve(g.head(k));
    w.setZero();
    for (int i = 0; i < k; ++i) w += yk(i) * basis[static_cast<std::size_t>(i)];
    precond(w, z);
    x += z;
    res.iterations = total;
    if (res.relative_residual < tol) {
      op(x, w);
      res.relative_residual = (b - w).norm() / bnorm;
      if (res.relative_residual < tol) {
        res.converged = true;
        break;
      }
    }
  }
  res.iterations = total;
  return res;
}

}  // namespace sqzopt::krylov
