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

#include "sqzopt/observables.hpp"

#include <cmath>
#include <stdexcept>

namespace sqzopt {

namespace {

void require_drive(const SystemParams& p) {
  if (std::abs(p.eps) == 0.0) throw std::domain_error("observables need a nonzero probe amplitude");
}

}  // namespace

Transmission transmissions(const DenseMat& rho, const SystemParams& p, const SpacePtr& space) {
  require_drive(p);
  const Operator a = mode_operator(space, "a", LadderKind::annihilate);
  const double s = std::sqrt(p.kappa_ex1);
  const cplx ma = expectation(rho, a);
  const double na = expectation(rho, mode_operator(space, "a", LadderKind::number)).real();
  const double nb = expectation(rho, mode_operator(space, "b", LadderKind::number)).real();
  const double e2 = std::norm(p.eps);
  Transmission t;
  t.T = (e2 - 2.0 * s * std::real(std::conj(p.eps) * ma) + p.kappa_ex1 * na) / e2;
  t.T23 = p.kappa_ex2 * nb / e2;
  return t;
}

double isolation_ratio_db(double T21, double T12) {
  if (!(T21 > 0.0) || !(T12 > 0.0)) throw std::domain_error("isolation ratio needs positive transmissions");
  return 10.0 * std::log10(T21 / T12);
}

double second_order_correlation(const DenseMat& rho, const SystemParams& p, const SpacePtr& space) {
  require_drive(p);
  const Operator a = mode_operator(space, "a", LadderKind::annihilate);
  const Operator ad = a.adjoint();
  const Operator id = Operator::identity(space);
  const Operator up[3] = {id, ad, ad * ad};
  const Operator down[3] = {id, a, a * a};

  // m[i][j] = ⟨a†^i a^j⟩
  cplx m[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = expectation(rho, up[i] * down[j]);

  const cplx e = p.eps;
  const cplx ec = std::conj(e);
  const double s = std::sqrt(p.kappa_ex1);
  const double binom[3] = {1.0, 2.0, 1.0};

  // a_out = ε − s a, so a_out†^k a_out^k = Σ C(k,i) C(k,j) ε*^{k−i} ε^{k−j} (−s)^{i+j} a†^i a^j.
  cplx n1 = ec * e * m[0][0] - s * ec * m[0][1] - s * e * m[1][0] + s * s * m[1][1];
  cplx n2 = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      n2 += binom[i] * binom[j] * std::pow(ec, 2 - i) * std::pow(e, 2 - j) * std::pow(-s, i + j) * m[i][j];
  const double flux = n1.real();
  if (flux < 1e-14) throw std::domain_error("no output flux: g2 denominator below 1e-14");
  return n2.real() / (flux * flux);
}

ObservableSet solve_observables(const SystemParams& p, const Cutoffs& cutoffs, SteadyStateOptions options,
                                bool with_g2) {
  const SqueezedFrame f = derive_squeezed_frame(p);
  const SpacePtr space = model_space(p, cutoffs);
  const Liouvillian L(build_hamiltonian(p, f, space), collapse_operators(p, space));
  if (options.sectors.empty()) options.sectors = optical_excitation_labels(space);
  ObservableSet out;
  out.direction = p.direction;
  out.steady = steady_state(L, options);
  const Transmission t = transmissions(out.steady.rho, p, space);
  out.T = t.T;
  out.T23 = t.T23;
  if (with_g2) out.g2 = second_order_correlation(out.steady.rho, p, space);
  return out;
}

}  // namespace sqzopt
