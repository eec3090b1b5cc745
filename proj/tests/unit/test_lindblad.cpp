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

#include <doctest.h>

#include <cmath>

#include "sqzopt/lindblad.hpp"
#include "sqzopt/model.hpp"

using namespace sqzopt;

namespace {

// γ(n+1) L[c] + γ n L[c†] in the factor-2 convention.
Liouvillian thermal(double n_th, int cutoff, double gamma = 0.007) {
  auto s = make_space({{"c", cutoff + 1}});
  const Operator c = mode_operator(s, "c", LadderKind::annihilate);
  return Liouvillian(mode_operator(s, "c", LadderKind::number),
                     {std::sqrt(gamma * (n_th + 1)) * c, std::sqrt(gamma * n_th) * c.adjoint()});
}

void check_geometric(const DenseMat& rho, double n_th, double tol) {
  for (int n = 0; n < rho.rows(); ++n) {
    const double expected = std::pow(n_th, n) / std::pow(n_th + 1.0, n + 1);
    CHECK(std::abs(rho(n, n).real() - expected) < tol);
  }
}

}  // namespace

TEST_SUITE("lindblad") {

TEST_CASE("pure decay relaxes to the ground state") {
  auto s = make_space({{"q", 2}});
  const Liouvillian L(Operator::zero(s), {std::sqrt(0.3) * mode_operator(s, "q", LadderKind::annihilate)});
  for (auto m : {SolverMethod::direct, SolverMethod::iterative}) {
    SteadyStateOptions o;
    o.method = m;
    const auto r = steady_state(L, o);
    CHECK(std::abs(r.rho(0, 0) - 1.0) < 1e-12);
    CHECK(r.rho.cwiseAbs().sum() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.solver == m);
  }
}

TEST_CASE("assembled superoperator matches the matrix-free action and preserves trace") {
  SystemParams p;
  p.n_th = 1.0;
  const auto space = model_space(p, {2, 2});
  const Liouvillian L(build_hamiltonian(p, derive_squeezed_frame(p), space), collapse_operators(p, space));
  const SparseMat M = L.assemble();
  const int d = L.dim();

  // vec(I)ᵀ M = 0
  Eigen::VectorXcd id = Eigen::VectorXcd::Zero(L.size());
  for (int i = 0; i < d; ++i) id(i * d + i) = 1.0;
  const Eigen::RowVectorXcd left = id.transpose() * M;
  double mmax = 0.0;
  for (int k = 0; k < M.outerSize(); ++k)
    for (SparseMat::InnerIterator it(M, k); it; ++it) mmax = std::max(mmax, std::abs(it.value()));
  CHECK(left.cwiseAbs().maxCoeff() < 1e-10 * mmax);

  // Explicit Kronecker form −i(I⊗H − Hᵀ⊗I) + Σ 2 ō⊗o − I⊗o†o − (o†o)ᵀ⊗I.
  const DenseMat H = L.hamiltonian().dense();
  const DenseMat I = DenseMat::Identity(d, d);
  auto kron = [](const DenseMat& x, const DenseMat& y) {
    DenseMat k(x.rows() * y.rows(), x.cols() * y.cols());
    for (int i = 0; i < x.rows(); ++i)
      for (int j = 0; j < x.cols(); ++j) k.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    return k;
  };
  DenseMat ref = cplx(0, -1) * (kron(I, H) - kron(H.transpose(), I));
  for (const auto& op : L.collapse()) {
    const DenseMat o = op.dense();
    const DenseMat od = o.adjoint() * o;
    ref += 2.0 * kron(o.conjugate(), o) - kron(I, od) - kron(od.transpose(), I);
  }
  CHECK((DenseMat(M) - ref).cwiseAbs().maxCoeff() < 1e-14);

  DenseMat rho = DenseMat::Random(d, d);
  const DenseMat out = L.apply(rho);
  const Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(rho.data(), L.size());
  const Eigen::VectorXcd w = M * v;
  CHECK((Eigen::Map<const Eigen::VectorXcd>(out.data(), L.size()) - w).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("thermal channel reaches the Gibbs state") {
  const auto r = steady_state(thermal(2.0, 40));
  CHECK(r.solver == SolverMethod::direct);
  check_geometric(r.rho, 2.0, 1e-4);
  // Exact truncated geometric distribution and mean occupation.
  const double q = 2.0 / 3.0;
  double mean = 0.0;
  for (int n = 0; n <= 40; ++n) {
    const double pn = std::pow(q, n) * (1.0 - q) / (1.0 - std::pow(q, 41));
    CHECK(std::abs(r.rho(n, n).real() - pn) < 1e-10);
    mean += n * r.rho(n, n).real();
  }
  CHECK(std::abs(mean - 2.0) < 1e-5);
  CHECK(r.trace_error < 1e-10);
  CHECK(r.hermiticity_error < 1e-10);
  CHECK(r.min_eigenvalue > -1e-8);
}

TEST_CASE("thermal channel at n_th = 10 with the iterative solver") {
  SteadyStateOptions o;
  o.method = SolverMethod::iterative;
  const auto r = steady_state(thermal(10.0, 70), o);
  CHECK(r.solver == SolverMethod::iterative);
  // At cutoff 70 the truncated Gibbs state itself sits 1.06e-4 above the
  // untruncated p_0, so compare with the truncated distribution here.
  const double q = 10.0 / 11.0;
  for (int n = 0; n <= 70; ++n)
    CHECK(std::abs(r.rho(n, n).real() - std::pow(q, n) * (1.0 - q) / (1.0 - std::pow(q, 71))) < 1e-8);
  check_geometric(steady_state(thermal(10.0, 80), o).rho, 10.0, 1e-4);
}

TEST_CASE("driven cavity amplitude") {
  const double kappa = 0.1, kappa_ex = 0.07, delta = 0.13;
  const cplx eps = 0.03;
  auto s = make_space({{"a", 11}});
  const Operator a = mode_operator(s, "a", LadderKind::annihilate);
  const Operator H = combine(s, {{delta, {a.adjoint(), a}},
                                 {cplx(0, std::sqrt(kappa_ex)) * eps, {a.adjoint()}},
                                 {cplx(0, -std::sqrt(kappa_ex)) * std::conj(eps), {a}}});
  const Liouvillian L(H, {std::sqrt(kappa) * a});
  const cplx expected = std::sqrt(kappa_ex) * eps / cplx(kappa, delta);
  for (auto m : {SolverMethod::direct, SolverMethod::iterative}) {
    SteadyStateOptions o;
    o.method = m;
    const auto r = steady_state(L, o);
    CHECK(std::abs(expectation(r.rho, a) - expected) < 1e-8);
  }
}

TEST_CASE("direct and iterative solvers agree") {
  for (double n_th : {0.0, 2.0}) {
    SystemParams p;
    p.n_th = n_th;
    p.delta = 0.45;
    const auto space = model_space(p, {2, 3});  // D = 36
    const Liouvillian L(build_hamiltonian(p, derive_squeezed_frame(p), space), collapse_operators(p, space));
    SteadyStateOptions o;
    o.method = SolverMethod::direct;
    const auto rd = steady_state(L, o);
    o.method = SolverMethod::iterative;
    o.sectors = optical_excitation_labels(space);
    const auto ri = steady_state(L, o);
    CHECK((rd.rho - ri.rho).cwiseAbs().maxCoeff() < 1e-10);
    o.sectors.clear();
    const auto rs = steady_state(L, o);
    CHECK((rd.rho - rs.rho).cwiseAbs().maxCoeff() < 1e-10);
    for (const auto* r : {&rd, &ri, &rs}) {
      CHECK(r->residual < 1e-10);
      CHECK(r->trace_error < 1e-10);
      CHECK(r->hermiticity_error < 1e-10);
      CHECK(r->min_eigenvalue > -1e-8);
      CHECK(r->cutoffs == std::vector<int>{2, 2, 3});
    }
  }
}

TEST_CASE("degenerate steady state is reported") {
  auto s = make_space({{"q", 2}, {"r", 2}});
  // Two independently decaying-free modes: every diagonal state is stationary.
  const Liouvillian L(mode_operator(s, "q", LadderKind::number), {});
  SteadyStateOptions o;
  o.method = SolverMethod::direct;
  CHECK_THROWS_AS(steady_state(L, o), SolverError);
}

TEST_CASE("invalid inputs") {
  auto s = make_space({{"q", 2}});
  auto t = make_space({{"r", 2}});
  const Operator a = mode_operator(s, "q", LadderKind::annihilate);
  CHECK_THROWS_AS(Liouvillian(a, {}), std::invalid_argument);
  CHECK_THROWS_AS(Liouvillian(Operator::zero(s), {mode_operator(t, "r", LadderKind::annihilate)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_solver_method("lu"), std::invalid_argument);
}

TEST_CASE("propagate without dynamics is the identity") {
  auto s = make_space({{"q", 3}});
  const Liouvillian L(Operator::zero(s), {});
  DenseMat rho = DenseMat::Zero(3, 3);
  rho(0, 0) = 0.25;
  rho(2, 2) = 0.75;
  rho(0, 2) = rho(2, 0) = 0.1;
  CHECK((propagate(L, rho, 50.0) - rho).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("excited-state population decays as exp(-2 gamma t)") {
  const double gamma = 0.3;
  auto s = make_space({{"q", 2}});
  const Liouvillian L(Operator::zero(s), {std::sqrt(gamma) * mode_operator(s, "q", LadderKind::annihilate)});
  DenseMat rho = DenseMat::Zero(2, 2);
  rho(1, 1) = 1.0;
  for (double t : {0.5, 2.0, 7.0}) {
    const DenseMat r = propagate(L, rho, t);
    CHECK(std::abs(r(1, 1).real() - std::exp(-2.0 * gamma * t)) < 1e-9);
    CHECK(std::abs(r.trace() - 1.0) < 1e-8);
  }
}

TEST_CASE("field amplitude decays at exactly kappa") {
  const double kappa = 0.1;
  auto s = make_space({{"a", 4}});
  const Operator a = mode_operator(s, "a", LadderKind::annihilate);
  const Liouvillian L(Operator::zero(s), {std::sqrt(kappa) * a});
  DenseMat rho = DenseMat::Zero(4, 4);
  rho.topLeftCorner(2, 2).setConstant(0.5);
  const cplx a0 = expectation(rho, a);
  const double t = 5.0;
  const cplx at = expectation(propagate(L, rho, t, {1e-12, 1e-15}), a);
  const double rate = -std::log(std::abs(at / a0)) / t;
  CHECK(std::abs(rate / kappa - 1.0) < 1e-6);
}

TEST_CASE("long-time propagation reaches the steady state") {
  SystemParams p;
  p.delta = 0.528;
  const auto space = model_space(p, {2, 4});
  const Liouvillian L(build_hamiltonian(p, derive_squeezed_frame(p), space), collapse_operators(p, space));
  const auto ss = steady_state(L);
  DenseMat rho0 = DenseMat::Zero(L.dim(), L.dim());
  rho0(0, 0) = 1.0;
  const DenseMat rho = propagate(L, rho0, 6000.0, {1e-9, 1e-12});
  CHECK((rho - ss.rho).cwiseAbs().maxCoeff() < 1e-6);
  CHECK(std::abs(rho.trace() - 1.0) < 1e-8);
}

TEST_CASE("density checks") {
  DenseMat rho = DenseMat::Zero(2, 2);
  rho(0, 0) = 1.2;
  rho(1, 1) = -0.2;
  const auto c = check_density_matrix(rho);
  CHECK(c.trace_error < 1e-15);
  CHECK(c.min_eigenvalue == doctest::Approx(-0.2));
}

}
