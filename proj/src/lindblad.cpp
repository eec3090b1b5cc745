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

#include "sqzopt/lindblad.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/SparseLU>

#include "sqzopt/krylov.hpp"

namespace sqzopt {

namespace {

using Triplet = Eigen::Triplet<cplx>;

double max_abs(const SparseMat& m) {
  double v = 0.0;
  for (int k = 0; k < m.outerSize(); ++k)
    for (SparseMat::InnerIterator it(m, k); it; ++it) v = std::max(v, std::abs(it.value()));
  return v;
}

}  // namespace

Liouvillian::Liouvillian(const Operator& hamiltonian, std::vector<Operator> collapse, double hermitian_tol)
    : space_(hamiltonian.space_ptr()),
      dim_(hamiltonian.dim()),
      hamiltonian_(hamiltonian),
      collapse_(std::move(collapse)) {
  if (!hamiltonian_.is_hermitian(hermitian_tol)) throw std::invalid_argument("Hamiltonian is not Hermitian");
  SparseMat damping(dim_, dim_);
  for (const auto& o : collapse_) {
    if (!o.same_space(hamiltonian_)) throw std::invalid_argument("collapse operator space mismatch");
    jumps_.push_back(o.matrix());
    jumps_adj_.push_back(SparseMat(o.matrix().adjoint()));
    damping += SparseMat(jumps_adj_.back() * jumps_.back());
  }
  effective_ = SparseMat(cplx(0.0, -1.0) * hamiltonian_.matrix() - damping).pruned(0.0, 0.0);
  effective_.makeCompressed();
  effective_adj_ = SparseMat(effective_.adjoint());
}

void Liouvillian::apply(const DenseMat& rho, DenseMat& out) const {
  out.noalias() = effective_ * rho;
  out.noalias() += rho * effective_adj_;
  DenseMat tmp(dim_, dim_);
  for (std::size_t k = 0; k < jumps_.size(); ++k) {
    tmp.noalias() = jumps_[k] * rho;
    out.noalias() += 2.0 * (tmp * jumps_adj_[k]);
  }
}

DenseMat Liouvillian::apply(const DenseMat& rho) const {
  DenseMat out(dim_, dim_);
  apply(rho, out);
  return out;
}

namespace {

// Triplets of the superoperator, optionally leaving out one row.
std::vector<Triplet> superoperator_triplets(const SparseMat& A, const std::vector<SparseMat>& jumps, int dim,
                                            long long skip_row) {
  std::vector<Triplet> t;
  std::size_t estimate = 2 * static_cast<std::size_t>(A.nonZeros()) * dim;
  for (const auto& o : jumps) estimate += static_cast<std::size_t>(o.nonZeros() * o.nonZeros());
  t.reserve(estimate);
  auto push = [&](long long r, long long c, cplx v) {
    if (r != skip_row) t.emplace_back(static_cast<int>(r), static_cast<int>(c), v);
  };
  for (int j = 0; j < A.outerSize(); ++j)
    for (SparseMat::InnerIterator it(A, j); it; ++it) {
      const long long i = it.row();
      const cplx v = it.value();
      for (long long k = 0; k < dim; ++k) {
        push(k * dim + i, k * dim + j, v);              // I ⊗ A
        push(i * dim + k, j * dim + k, std::conj(v));   // conj(A) ⊗ I
      }
    }
  for (const auto& o : jumps)
    for (int j = 0; j < o.outerSize(); ++j)
      for (SparseMat::InnerIterator it(o, j); it; ++it)
        for (int l = 0; l < o.outerSize(); ++l)
          for (SparseMat::InnerIterator jt(o, l); jt; ++jt)
            push(it.row() * static_cast<long long>(dim) + jt.row(), static_cast<long long>(j) * dim + l,
                 2.0 * std::conj(it.value()) * jt.value());
  return t;
}

}  // namespace

SparseMat Liouvillian::assemble() const {
  const long long n = size();
  auto t = superoperator_triplets(effective_, jumps_, dim_, -1);
  SparseMat m(n, n);
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

Liouvillian build_liouvillian(const Operator& hamiltonian, const std::vector<Operator>& collapse) {
  return Liouvillian(hamiltonian, collapse);
}

std::string to_string(SolverMethod m) {
  switch (m) {
    case SolverMethod::direct: return "direct";
    case SolverMethod::iterative: return "iterative";
    case SolverMethod::automatic: return "auto";
  }
  return "?";
}

SolverMethod parse_solver_method(const std::string& s) {
  if (s == "direct") return SolverMethod::direct;
  if (s == "iterative") return SolverMethod::iterative;
  if (s == "auto" || s == "automatic") return SolverMethod::automatic;
  throw std::invalid_argument("unknown solver method '" + s + "'");
}

namespace {

// Block preconditioner for the steady-state system. Within each sector s the
// drive-free generator is the Sylvester map X ↦ A_s X + X A_t†; it is
// inverted exactly through A_s = Q_s T_s Q_s⁻¹ (eigen- or Schur-form), and
// couplings between sectors as well as the jump terms are ignored.
class SectorSylvester {
 public:
  SectorSylvester(const SparseMat& A, std::vector<int> labels) {
    const int dim = static_cast<int>(A.rows());
    if (labels.empty()) labels.assign(static_cast<std::size_t>(dim), 0);
    if (static_cast<int>(labels.size()) != dim) throw std::invalid_argument("sector labels do not match dimension");

    perm_.resize(static_cast<std::size_t>(dim));
    std::iota(perm_.begin(), perm_.end(), 0);
    std::stable_sort(perm_.begin(), perm_.end(), [&](int x, int y) { return labels[x] < labels[y]; });

    double scale = 0.0;
    int start = 0;
    while (start < dim) {
      int end = start;
      while (end < dim && labels[perm_[end]] == labels[perm_[start]]) ++end;
      Block b;
      b.offset = start;
      b.size = end - start;
      DenseMat As(b.size, b.size);
      for (int i = 0; i < b.size; ++i)
        for (int j = 0; j < b.size; ++j) As(i, j) = A.coeff(perm_[start + i], perm_[start + j]);
      factor(As, b);
      for (Eigen::Index i = 0; i < b.T.rows(); ++i) scale = std::max(scale, std::abs(b.T(i, i)));
      blocks_.push_back(std::move(b));
      start = end;
    }
    scale = std::max(scale, 1e-300);
    floor_ = 1e-6 * scale;
    replacement_ = -1e-3 * scale;
  }

  void apply(const DenseMat& R, DenseMat& X) const {
    DenseMat W = R(perm_, perm_);
    for (const auto& b : blocks_) W.middleRows(b.offset, b.size) = b.Qinv * W.middleRows(b.offset, b.size);
    for (const auto& b : blocks_) W.middleCols(b.offset, b.size) = W.middleCols(b.offset, b.size) * b.Qinv.adjoint();
    for (const auto& s : blocks_)
      for (const auto& t : blocks_) solve_block(s, t, W.block(s.offset, t.offset, s.size, t.size));
    for (const auto& b : blocks_) W.middleRows(b.offset, b.size) = b.Q * W.middleRows(b.offset, b.size);
    for (const auto& b : blocks_) W.middleCols(b.offset, b.size) = W.middleCols(b.offset, b.size) * b.Q.adjoint();
    X(perm_, perm_) = W;
  }

 private:
  struct Block {
    int offset = 0;
    int size = 0;
    DenseMat Q, Qinv, T;
    bool diagonal = true;
  };

  static void factor(const DenseMat& As, Block& b) {
    const double norm = std::max(1.0, As.cwiseAbs().maxCoeff());
    Eigen::ComplexEigenSolver<DenseMat> es(As);
    if (es.info() == Eigen::Success) {
      const DenseMat& V = es.eigenvectors();
      Eigen::PartialPivLU<DenseMat> lu(V);
      DenseMat Vinv = lu.inverse();
      const double err = (V * es.eigenvalues().asDiagonal() * Vinv - As).cwiseAbs().maxCoeff();
      if (std::isfinite(err) && err <= 1e-9 * norm) {
        b.Q = V;
        b.Qinv = std::move(Vinv);
        b.T = es.eigenvalues().asDiagonal();
        b.diagonal = true;
        return;
      }
    }
    Eigen::ComplexSchur<DenseMat> schur(As);
    b.Q = schur.matrixU();
    b.Qinv = b.Q.adjoint();
    b.T = schur.matrixT();
    b.diagonal = false;
  }

  cplx guard(cplx d) const { return std::abs(d) < floor_ ? cplx(replacement_) : d; }

  // T_s Y + Y T_t† = C, solved in place.
  template <typename BlockXpr>
  void solve_block(const Block& s, const Block& t, BlockXpr C) const {
    if (s.diagonal && t.diagonal) {
      for (int j = 0; j < t.size; ++j) {
        const cplx mu = std::conj(t.T(j, j));
        for (int i = 0; i < s.size; ++i) C(i, j) /= guard(s.T(i, i) + mu);
      }
      return;
    }
    for (int j = t.size - 1; j >= 0; --j) {
      if (!t.diagonal && j + 1 < t.size) {
        const int m = t.size - j - 1;
        C.col(j) -= C.middleCols(j + 1, m) * t.T.row(j).segment(j + 1, m).adjoint();
      }
      const cplx mu = std::conj(t.T(j, j));
      for (int i = s.size - 1; i >= 0; --i) {
        cplx acc = C(i, j);
        if (!s.diagonal && i + 1 < s.size) acc -= (s.T.row(i).segment(i + 1, s.size - i - 1) * C.col(j).segment(i + 1, s.size - i - 1)).value();
        C(i, j) = acc / guard(s.T(i, i) + mu);
      }
    }
  }

  std::vector<int> perm_;
  std::vector<Block> blocks_;
  double floor_ = 0.0;
  double replacement_ = -1.0;
};

DenseMat solve_direct(const Liouvillian& L) {
  const int d = L.dim();
  const long long n = L.size();
  const long long trace_row = n - 1;  // (d-1, d-1) in column-major order
  std::vector<SparseMat> jumps;
  for (const auto& o : L.collapse()) jumps.push_back(o.matrix());
  auto t = superoperator_triplets(L.effective(), jumps, d, trace_row);
  for (int i = 0; i < d; ++i) t.emplace_back(static_cast<int>(trace_row), i * d + i, cplx(1.0));
  SparseMat m(n, n);
  m.setFromTriplets(t.begin(), t.end());
  m.makeCompressed();

  Eigen::SparseLU<SparseMat, Eigen::COLAMDOrdering<int>> lu;
  lu.analyzePattern(m);
  lu.factorize(m);
  if (lu.info() != Eigen::Success)
    throw SolverError("steady state is not unique: normalized Liouvillian is singular (" + lu.lastErrorMessage() + ")");
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(n);
  rhs(trace_row) = 1.0;
  Eigen::VectorXcd x = lu.solve(rhs);
  if (!x.allFinite()) throw SolverError("steady state is not unique: direct solve produced non-finite values");
  return Eigen::Map<DenseMat>(x.data(), d, d);
}

DenseMat solve_iterative(const Liouvillian& L, const SteadyStateOptions& opt, int& iterations) {
  const int d = L.dim();
  const long long n = L.size();
  const long long trace_row = n - 1;
  SectorSylvester precond(L.effective(), opt.sectors);

  DenseMat in_m(d, d), out_m(d, d);
  krylov::LinearMap op = [&](const krylov::Vector& in, krylov::Vector& out) {
    Eigen::Map<const DenseMat> X(in.data(), d, d);
    Eigen::Map<DenseMat> Y(out.data(), d, d);
    in_m = X;
    L.apply(in_m, out_m);
    Y = out_m;
    out(trace_row) = in_m.trace();
  };
  krylov::LinearMap pc = [&](const krylov::Vector& in, krylov::Vector& out) {
    in_m = Eigen::Map<const DenseMat>(in.data(), d, d);
    precond.apply(in_m, out_m);
    Eigen::Map<DenseMat>(out.data(), d, d) = out_m;
  };

  krylov::Vector b = krylov::Vector::Zero(n);
  b(trace_row) = 1.0;
  krylov::Vector x = krylov::Vector::Zero(n);
  auto res = krylov::bicgstab(op, pc, b, x, opt.tol, opt.max_iterations);
  iterations = res.iterations;
  if (!res.converged) {
    auto res2 = krylov::gmres(op, pc, b, x, opt.tol, opt.max_iterations, 60);
    iterations += res2.iterations;
    if (!res2.converged)
      throw SolverError("iterative steady-state solve did not converge (relative residual " +
                        std::to_string(res2.relative_residual) + " after " + std::to_string(iterations) +
                        " iterations); the steady state may be degenerate");
  }
  return Eigen::Map<DenseMat>(x.data(), d, d);
}

}  // namespace

DensityCheck check_density_matrix(const DenseMat& rho) {
  DensityCheck c;
  c.trace_error = std::abs(rho.trace() - cplx(1.0));
  c.hermiticity_error = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  DenseMat h = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<DenseMat> es(h, Eigen::EigenvaluesOnly);
  c.min_eigenvalue = es.eigenvalues().minCoeff();
  return c;
}

SteadyStateResult steady_state(const Liouvillian& L, const SteadyStateOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SteadyStateResult result;
  SolverMethod method = options.method;
  if (method == SolverMethod::automatic)
    method = L.size() <= options.direct_max_size ? SolverMethod::direct : SolverMethod::iterative;
  result.solver = method;

  DenseMat rho = method == SolverMethod::direct ? solve_direct(L) : solve_iterative(L, options, result.iterations);
  rho = 0.5 * (rho + rho.adjoint()).eval();
  const cplx tr = rho.trace();
  if (std::abs(tr) < 1e-300 || !rho.allFinite()) throw SolverError("steady state has vanishing trace");
  rho /= tr.real();

  result.residual = L.apply(rho).cwiseAbs().maxCoeff();
  const auto check = check_density_matrix(rho);
  result.trace_error = check.trace_error;
  result.hermiticity_error = check.hermiticity_error;
  result.min_eigenvalue = check.min_eigenvalue;
  if (options.check_positivity && check.min_eigenvalue < -1e-8)
    throw SolverError("steady state violates positivity: min eigenvalue " + std::to_string(check.min_eigenvalue));
  for (const auto& m : L.space().modes()) result.cutoffs.push_back(m.dim - 1);
  result.rho = std::move(rho);
  result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

DenseMat propagate(const Liouvillian& L, const DenseMat& rho0, double t_final, const PropagateOptions& opt) {
  if (rho0.rows() != L.dim() || rho0.cols() != L.dim()) throw std::invalid_argument("initial state dimension mismatch");
  if (t_final < 0.0) throw std::invalid_argument("t_final must be non-negative");
  // Dormand–Prince 5(4) tableau.
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                          e6 = 22.0 / 525, e7 = -1.0 / 40;
  (void)c2, (void)c3, (void)c4, (void)c5;  // autonomous system

  const int d = L.dim();
  DenseMat y = rho0, k1(d, d), k2(d, d), k3(d, d), k4(d, d), k5(d, d), k6(d, d), k7(d, d), tmp(d, d), y_new(d, d);
  if (t_final == 0.0) return y;

  L.apply(y, k1);
  double h = opt.initial_step;
  if (h <= 0.0) {
    const double rate = std::max(max_abs(L.effective()), 1e-12);
    h = std::min(t_final, 0.05 / rate);
  }
  double t = 0.0;
  long long steps = 0;
  while (t < t_final) {
    if (++steps > opt.max_steps) throw SolverError("propagate exceeded the maximum number of steps");
    h = std::min(h, t_final - t);
    tmp = y + h * a21 * k1;
    L.apply(tmp, k2);
    tmp = y + h * (a31 * k1 + a32 * k2);
    L.apply(tmp, k3);
    tmp = y + h * (a41 * k1 + a42 * k2 + a43 * k3);
    L.apply(tmp, k4);
    tmp = y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
    L.apply(tmp, k5);
    tmp = y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
    L.apply(tmp, k6);
    y_new = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    L.apply(y_new, k7);
    tmp = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    const double scale = std::max(y.cwiseAbs().maxCoeff(), y_new.cwiseAbs().maxCoeff());
    const double err = tmp.cwiseAbs().maxCoeff() / (opt.atol + opt.rtol * scale);
    if (!std::isfinite(err)) throw SolverError("propagate produced non-finite values");
    if (err <= 1.0) {
      t += h;
      y.swap(y_new);
      k1.swap(k7);
    }
    const double factor = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
    h *= factor;
    if (h < opt.min_step && t < t_final) throw SolverError("propagate step size underflow");
  }
  return y;
}

cplx expectation(const DenseMat& rho, const Operator& op) {
  cplx sum = 0.0;
  const SparseMat& m = op.matrix();
  for (int j = 0; j < m.outerSize(); ++j)
    for (SparseMat::InnerIterator it(m, j); it; ++it) sum += it.value() * rho(j, it.row());
  return sum;
}

}  // namespace sqzopt
