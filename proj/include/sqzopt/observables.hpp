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

#include <limits>

#include "sqzopt/fock.hpp"
#include "sqzopt/lindblad.hpp"
#include "sqzopt/model.hpp"

namespace sqzopt {

// Bus transmission T (T12 for Port1, T21 for Port2) and drop-port transfer
// T23 = κ_ex2 ⟨b†b⟩/|ε|², from the output field a_out = ε − sqrt(κ_ex1) a.
struct Transmission {
  double T = 0.0;
  double T23 = 0.0;
};

Transmission transmissions(const DenseMat& rho, const SystemParams& p, const SpacePtr& space);

// η = 10 log10(T21 / T12) in dB.
double isolation_ratio_db(double T21, double T12);

// Equal-time g²(0) of the bus output, from normally ordered moments
// ⟨a†^m a^n⟩ with m, n ≤ 2.
double second_order_correlation(const DenseMat& rho, const SystemParams& p, const SpacePtr& space);

struct ObservableSet {
  Direction direction = Direction::Port1;
  double T = 0.0;
  double T23 = 0.0;
  double g2 = std::numeric_limits<double>::quiet_NaN();  // NaN unless requested
  SteadyStateResult steady;
};

// Builds the model at `p`, solves its steady state and evaluates the
// observables. The block preconditioner uses optical excitation sectors.
ObservableSet solve_observables(const SystemParams& p, const Cutoffs& cutoffs, SteadyStateOptions options = {},
                                bool with_g2 = true);

}  // namespace sqzopt
