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

#include "sqzopt/observables.hpp"

using namespace sqzopt;

TEST_SUITE("observables") {

TEST_CASE("isolation ratio") {
  CHECK(isolation_ratio_db(0.3, 0.3) == 0.0);
  CHECK(isolation_ratio_db(1.0, 0.01) == doctest::Approx(20.0));
  CHECK_THROWS_AS(isolation_ratio_db(0.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(isolation_ratio_db(0.5, -1.0), std::domain_error);
}

TEST_CASE("bare ring without couplings") {
  SystemParams p;
  p.g0 = p.J0 = 0.0;
  p.beta = 0.0;
  p.delta = 0.0;
  const Cutoffs cut{6, 1};
  // No intrinsic loss: the bus-coupled ring is all-pass.
  auto o = solve_observables(p, cut);
  CHECK(std::abs(o.T - 1.0) < 1e-10);
  CHECK(std::abs(o.T23) < 1e-10);
  // Intrinsic loss equal to the bus coupling: critical coupling, no output.
  p.kappa_i = p.kappa_ex1;
  o = solve_observables(p, cut, {}, false);
  CHECK(std::abs(o.T) < 1e-10);
  CHECK(std::abs(o.T23) < 1e-10);
  // Far detuned: transparent.
  p.delta = 50.0;
  o = solve_observables(p, cut, {}, false);
  CHECK(std::abs(o.T - 1.0) < 1e-5);
}

TEST_CASE("linear dynamics keep coherent statistics") {
  SystemParams p;
  p.J0 = 0.0;
  for (double d : {-0.3, 0.1, 0.528}) {
    p.delta = d;
    for (auto dir : {Direction::Port1, Direction::Port2}) {
      p.direction = dir;
      const auto o = solve_observables(p, {5, 1});
      CHECK(std::abs(o.g2 - 1.0) < 1e-6);
    }
  }
}

TEST_CASE("transmission from the density matrix") {
  // Coherent cavity state: T = |1 − sqrt(κ_ex1) α / ε|², T23 from the b mode.
  SystemParams p;
  const auto space = model_space(p, {6, 1});
  const cplx alpha(0.2, -0.1), beta(0.05, 0.15);
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(space->dim());
  double fa = 1.0;
  for (int na = 0; na <= 6; ++na) {
    if (na > 0) fa *= na;
    double fb = 1.0;
    for (int nb = 0; nb <= 6; ++nb) {
      if (nb > 0) fb *= nb;
      const int occ[3] = {na, nb, 0};
      psi(space->index(occ)) = std::pow(alpha, na) / std::sqrt(fa) * std::pow(beta, nb) / std::sqrt(fb);
    }
  }
  psi.normalize();
  const DenseMat rho = psi * psi.adjoint();
  const Transmission t = transmissions(rho, p, space);
  const double s = std::sqrt(p.kappa_ex1);
  CHECK(t.T == doctest::Approx(std::norm(1.0 - s * alpha / p.eps)).epsilon(1e-6));
  CHECK(t.T23 == doctest::Approx(p.kappa_ex2 * std::norm(beta) / std::norm(p.eps)).epsilon(1e-6));
  CHECK(second_order_correlation(rho, p, space) == doctest::Approx(1.0).epsilon(1e-6));

  SystemParams q = p;
  q.eps = 0.0;
  CHECK_THROWS_AS(transmissions(rho, q, space), std::domain_error);
  CHECK_THROWS_AS(second_order_correlation(rho, q, space), std::domain_error);
  // Perfect destructive interference leaves no flux.
  const int vac[3] = {0, 0, 0};
  DenseMat dark = DenseMat::Zero(space->dim(), space->dim());
  dark(space->index(vac), space->index(vac)) = 1.0;
  SystemParams r = p;
  r.kappa_ex1 = 0.0;
  r.eps = 1e-8;
  CHECK_THROWS_AS(second_order_correlation(dark, r, space), std::domain_error);
}

TEST_CASE("weak-drive scaling and photon-number bound") {
  SystemParams p;
  p.delta = 0.45;
  for (auto dir : {Direction::Port1, Direction::Port2}) {
    p.direction = dir;
    p.eps = 0.03;
    const auto a = solve_observables(p, {4, 6}, {}, false);
    p.eps = 0.015;
    const auto b = solve_observables(p, {4, 6}, {}, false);
    CHECK(std::abs(a.T - b.T) < 0.01 * std::max(a.T, b.T));
    CHECK(a.T + a.T23 <= 1.05);
    CHECK(a.T >= 0.0);
    CHECK(a.T23 >= 0.0);
  }
}

TEST_CASE("no squeezing means no nonreciprocity") {
  SystemParams p;
  p.beta = 0.0;
  for (double d : {-0.6, 0.0, 0.4}) {
    p.delta = d;
    p.direction = Direction::Port1;
    const auto a = solve_observables(p, {3, 5}, {}, false);
    p.direction = Direction::Port2;
    const auto b = solve_observables(p, {3, 5}, {}, false);
    CHECK(std::abs(a.T - b.T) < 1e-9);
  }
}

}
