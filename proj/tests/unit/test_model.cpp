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

#include "sqzopt/model.hpp"

using namespace sqzopt;

TEST_SUITE("model") {

TEST_CASE("squeezed frame closed forms") {
  SystemParams p;
  p.beta = 0.0;
  SqueezedFrame f = derive_squeezed_frame(p);
  CHECK(f.r_s == 0.0);
  CHECK(f.g_s == p.g0);
  CHECK(f.J_s == p.J0);
  CHECK(f.force_F == 0.0);
  CHECK(f.delta_bs == p.delta_sb);

  p.beta = 0.9;
  f = derive_squeezed_frame(p);
  CHECK(f.J_s == doctest::Approx(0.206474).epsilon(1e-6));
  CHECK(std::abs(f.J_s - 0.206) < 1e-3);
  CHECK(f.g_s == doctest::Approx(0.513354).epsilon(1e-6));
  CHECK(f.r_s == doctest::Approx(0.736110).epsilon(1e-6));

  p.beta = 0.6;
  f = derive_squeezed_frame(p);
  CHECK(std::abs(f.r_s - std::log(2.0) / 2.0) < 1e-15);
  CHECK(std::abs(f.J_s / p.J0 - 1.25) < 1e-14);
  CHECK(std::abs(f.g_s / p.g0 - 1.0606601717798212) < 1e-14);
  CHECK(std::abs(f.force_F + p.J0 * std::pow(std::sinh(f.r_s), 2)) < 1e-16);

  double last = -1.0;
  for (double b = 0.0; b < 0.999; b += 0.01) {
    p.beta = b;
    f = derive_squeezed_frame(p);
    CHECK(f.r_s > last);
    CHECK(f.g_s >= p.g0);
    CHECK(f.J_s >= p.J0);
    last = f.r_s;
  }
  p.beta = 1.0;
  CHECK_THROWS_AS(derive_squeezed_frame(p), std::domain_error);
  p.beta = -0.1;
  CHECK_THROWS_AS(derive_squeezed_frame(p), std::domain_error);
}

TEST_CASE("free Hamiltonian is diagonal") {
  SystemParams p;
  p.g0 = p.J0 = 0.0;
  p.eps = 0.0;
  p.delta = 0.3;
  const SqueezedFrame f = derive_squeezed_frame(p);
  const auto space = model_space(p, {2, 3});
  const DenseMat H = build_hamiltonian(p, f, space).dense();
  const Detunings d = optical_detunings(p, f);
  for (int i = 0; i < space->dim(); ++i) {
    const auto n = space->occupations(i);
    CHECK(std::abs(H(i, i) - (d.a * n[0] + d.b * n[1] + p.delta_m * n[2])) < 1e-15);
  }
  CHECK((H - DenseMat(H.diagonal().asDiagonal())).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("Hamiltonians are Hermitian for every placement and direction") {
  for (auto pl : {Placement::AreaI, Placement::AreaII, Placement::AreaIII})
    for (auto dir : {Direction::Port1, Direction::Port2})
      for (bool full : {false, true}) {
        SystemParams p;
        p.placement = pl;
        p.direction = dir;
        p.full_model = full;
        p.eps = cplx(0.03, 0.01);
        const auto space = model_space(p, {2, 3, 1});
        const Operator H = build_hamiltonian(p, derive_squeezed_frame(p), space);
        CHECK((H.matrix() - SparseMat(H.matrix().adjoint())).cwiseAbs().sum() <= 1e-12 * H.max_abs());
      }
}

TEST_CASE("without squeezing both directions coincide") {
  SystemParams p;
  p.beta = 0.0;
  p.delta = 0.37;
  const auto space = model_space(p, {3, 4});
  p.direction = Direction::Port1;
  const Operator h1 = build_hamiltonian(p, derive_squeezed_frame(p), space);
  p.direction = Direction::Port2;
  const Operator h2 = build_hamiltonian(p, derive_squeezed_frame(p), space);
  CHECK(max_abs_diff(h1, h2) < 1e-15);
}

TEST_CASE("squeezed couplings enter the Port1 Hamiltonian") {
  SystemParams p;
  p.eps = 0.0;
  const SqueezedFrame f = derive_squeezed_frame(p);
  const auto space = model_space(p, {1, 1});
  const DenseMat H = build_hamiltonian(p, f, space).dense();
  auto idx = [&](int a, int b, int c) {
    const int n[3] = {a, b, c};
    return space->index(n);
  };
  CHECK(std::abs(H(idx(1, 0, 0), idx(0, 1, 0)).real() - f.g_s) < 1e-15);
  CHECK(std::abs(H(idx(1, 0, 0), idx(1, 0, 1)).real() + p.J0) < 1e-15);
  CHECK(std::abs(H(idx(0, 1, 0), idx(0, 1, 1)).real() - f.J_s) < 1e-15);

  p.placement = Placement::AreaIII;
  const DenseMat H3 = build_hamiltonian(p, f, space).dense();
  CHECK(std::abs(H3(idx(1, 0, 0), idx(1, 0, 1))) == 0.0);
  CHECK(std::abs(H3(idx(0, 1, 0), idx(0, 1, 1)).real() + f.J_s) < 1e-15);
  p.placement = Placement::AreaII;
  const DenseMat H2 = build_hamiltonian(p, f, space).dense();
  CHECK(std::abs(H2(idx(1, 0, 0), idx(1, 0, 1)).real() + p.J0) < 1e-15);
  CHECK(std::abs(H2(idx(0, 1, 0), idx(0, 1, 1))) == 0.0);
}

TEST_CASE("optical excitation number is conserved without drive and mechanics") {
  SystemParams p;
  p.eps = 0.0;
  const SqueezedFrame f = derive_squeezed_frame(p);
  for (bool full : {false, true}) {
    p.full_model = full;
    const auto space = model_space(p, {2, 3, 2});
    const Operator H = build_hamiltonian(p, f, space);
    Operator N = mode_operator(space, "a", LadderKind::number) + mode_operator(space, "b", LadderKind::number);
    if (full) N = N + mode_operator(space, "a2", LadderKind::number) + mode_operator(space, "b2", LadderKind::number);
    CHECK(commutator(H, N).max_abs() < 1e-14);

    // The optomechanical part changes only the phonon number.
    SystemParams q = p;
    q.g0 = 0.0;
    q.J0 = 0.0;
    const Operator Hom = H - build_hamiltonian(q, derive_squeezed_frame(q), space);
    const Operator Nc = mode_operator(space, "c", LadderKind::number);
    CHECK(commutator(Hom, N).max_abs() < 1e-14);
    CHECK(commutator(Hom, Nc).max_abs() > 0.01);
  }
  p.full_model = false;
  p.eps = 0.03;
  const auto space = model_space(p, {2, 3});
  const auto labels = optical_excitation_labels(space);
  const int occ[3] = {2, 1, 3};
  CHECK(labels[static_cast<std::size_t>(space->index(occ))] == 3);
}

TEST_CASE("collapse operators") {
  SystemParams p;
  p.n_th = 0.0;
  auto space = model_space(p, {2, 3});
  CHECK(collapse_operators(p, space).size() == 3);

  p.n_th = 10.0;
  const auto ops = collapse_operators(p, space);
  REQUIRE(ops.size() == 4);
  // Rates κ = 0.1, γ(n+1) = 0.077, γ n = 0.07 enter as sqrt(rate / 2).
  const double expected[4] = {std::sqrt(0.05), std::sqrt(0.05), std::sqrt(0.0385), std::sqrt(0.035)};
  const char* labels[4] = {"a", "b", "c", "c"};
  const LadderKind kinds[4] = {LadderKind::annihilate, LadderKind::annihilate, LadderKind::annihilate,
                               LadderKind::create};
  for (int k = 0; k < 4; ++k) {
    const Operator ref = expected[k] * mode_operator(space, labels[k], kinds[k]);
    CHECK(max_abs_diff(ops[static_cast<std::size_t>(k)], ref) < 1e-15);
  }

  p.n_th = 0.0;
  p.full_model = true;
  space = model_space(p, {2, 3});
  CHECK(collapse_operators(p, space).size() == 5);

  p.kappa_i = -0.1;
  CHECK_THROWS(collapse_operators(p, space));
}

TEST_CASE("space mismatch is rejected") {
  SystemParams p;
  const auto reduced = model_space(p, {2, 3});
  p.full_model = true;
  CHECK_THROWS_AS(build_hamiltonian(p, derive_squeezed_frame(p), reduced), std::invalid_argument);
  CHECK_THROWS_AS(build_hamiltonian(p, derive_squeezed_frame(p), make_space({{"a", 2}, {"c", 2}})),
                  std::invalid_argument);
}

TEST_CASE("rwa diagnostic") {
  SystemParams p;
  const SqueezedFrame f = derive_squeezed_frame(p);
  const RwaDiagnostic d = rwa_diagnostic(p, f);
  CHECK(d.dropped_coupling == doctest::Approx(0.4 * std::sinh(f.r_s)));
  CHECK(d.frequency_gap == doctest::Approx(0.01 + 0.01 * std::sqrt(1 - 0.81)));
  CHECK(d.ratio() > 1.0);
}

}
