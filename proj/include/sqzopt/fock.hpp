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

#include <complex>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace sqzopt {

using cplx = std::complex<double>;
using SparseMat = Eigen::SparseMatrix<cplx, Eigen::ColMajor>;
using DenseMat = Eigen::MatrixXcd;

struct Mode {
  std::string label;
  int dim;  // Fock cutoff + 1

  bool operator==(const Mode&) const = default;
};

// Ordered product of truncated bosonic modes. The first mode is the
// slowest-varying index of the composite basis:
//   index(n_0, ..., n_{k-1}) = ((n_0 * d_1 + n_1) * d_2 + n_2) ...
class HilbertSpace {
 public:
  explicit HilbertSpace(std::vector<Mode> modes);

  const std::vector<Mode>& modes() const { return modes_; }
  std::size_t num_modes() const { return modes_.size(); }
  int dim() const { return dim_; }

  bool has(std::string_view label) const;
  std::size_t position(std::string_view label) const;
  int mode_dim(std::string_view label) const { return modes_[position(label)].dim; }
  // Index step between consecutive occupations of mode `pos`.
  int stride(std::size_t pos) const { return strides_[pos]; }

  std::vector<int> occupations(int index) const;
  int index(std::span<const int> occupations) const;
  std::string ket_label(int index) const;

  bool operator==(const HilbertSpace& other) const { return modes_ == other.modes_; }

 private:
  std::vector<Mode> modes_;
  std::vector<int> strides_;
  int dim_ = 1;
};

using SpacePtr = std::shared_ptr<const HilbertSpace>;

SpacePtr make_space(std::vector<Mode> modes);

// Sparse operator on a HilbertSpace. Immutable once built; the entry storage
// is compressed with sorted inner indices so iteration order is deterministic.
class Operator {
 public:
  Operator(SpacePtr space, SparseMat matrix);

  static Operator zero(SpacePtr space);
  static Operator identity(SpacePtr space);

  const SpacePtr& space_ptr() const { return space_; }
  const HilbertSpace& space() const { return *space_; }
  const SparseMat& matrix() const { return matrix_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }

  Operator adjoint() const;
  DenseMat dense() const { return DenseMat(matrix_); }
  // Largest entry modulus.
  double max_abs() const;
  bool is_hermitian(double rel_tol = 1e-12) const;
  bool same_space(const Operator& other) const;

  Operator operator+(const Operator& rhs) const;
  Operator operator-(const Operator& rhs) const;
  Operator operator*(const Operator& rhs) const;
  Operator operator*(cplx s) const;
  friend Operator operator*(cplx s, const Operator& op) { return op * s; }

 private:
  SpacePtr space_;
  SparseMat matrix_;
};

enum class LadderKind { annihilate, create, number };

// Single-mode ladder operator embedded with identities on every other mode.
Operator mode_operator(const SpacePtr& space, std::string_view label, LadderKind kind);

struct Term {
  cplx coefficient;
  std::vector<Operator> factors;  // matrix product factors[0] * factors[1] * ...
};

// Sum of coefficient * product(factors). All factors must share one space.
Operator combine(const SpacePtr& space, const std::vector<Term>& terms);

Operator commutator(const Operator& a, const Operator& b);

// Max-norm of a - b.
double max_abs_diff(const Operator& a, const Operator& b);

}  // namespace sqzopt
