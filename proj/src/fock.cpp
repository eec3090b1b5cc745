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

#include "sqzopt/fock.hpp"

#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sqzopt {

HilbertSpace::HilbertSpace(std::vector<Mode> modes) : modes_(std::move(modes)) {
  if (modes_.empty()) throw std::invalid_argument("HilbertSpace needs at least one mode");
  std::set<std::string> seen;
  for (const auto& m : modes_) {
    if (m.dim < 1) throw std::invalid_argument("mode '" + m.label + "' has non-positive dimension");
    if (!seen.insert(m.label).second) throw std::invalid_argument("duplicate mode label '" + m.label + "'");
  }
  strides_.assign(modes_.size(), 1);
  long long total = 1;
  for (std::size_t k = modes_.size(); k-- > 0;) {
    strides_[k] = static_cast<int>(total);
    total *= modes_[k].dim;
    if (total > std::numeric_limits<int>::max()) throw std::invalid_argument("HilbertSpace dimension overflows int");
  }
  dim_ = static_cast<int>(total);
}

bool HilbertSpace::has(std::string_view label) const {
  for (const auto& m : modes_)
    if (m.label == label) return true;
  return false;
}

std::size_t HilbertSpace::position(std::string_view label) const {
  for (std::size_t k = 0; k < modes_.size(); ++k)
    if (modes_[k].label == label) return k;
  throw std::invalid_argument("unknown mode label '" + std::string(label) + "'");
}

std::vector<int> HilbertSpace::occupations(int index) const {
  if (index < 0 || index >= dim_) throw std::out_of_range("basis index out of range");
  std::vector<int> n(modes_.size());
  for (std::size_t k = 0; k < modes_.size(); ++k) n[k] = (index / strides_[k]) % modes_[k].dim;
  return n;
}

int HilbertSpace::index(std::span<const int> occupations) const {
  if (occupations.size() != modes_.size()) throw std::invalid_argument("occupation list length mismatch");
  int idx = 0;
  for (std::size_t k = 0; k < modes_.size(); ++k) {
    if (occupations[k] < 0 || occupations[k] >= modes_[k].dim)
      throw std::out_of_range("occupation exceeds cutoff of mode '" + modes_[k].label + "'");
    idx += occupations[k] * strides_[k];
  }
  return idx;
}

std::string HilbertSpace::ket_label(int index) const {
  auto n = occupations(index);
  std::ostringstream os;
  os << '|';
  for (std::size_t k = 0; k < n.size(); ++k) os << (k ? "," : "") << n[k];
  os << '>';
  return os.str();
}

SpacePtr make_space(std::vector<Mode> modes) {
  return std::make_shared<const HilbertSpace>(std::move(modes));
}

Operator::Operator(SpacePtr space, SparseMat matrix) : space_(std::move(space)), matrix_(std::move(matrix)) {
  if (!space_) throw std::invalid_argument("Operator needs a space");
  if (matrix_.rows() != space_->dim() || matrix_.cols() != space_->dim())
    throw std::invalid_argument("Operator matrix does not match space dimension");
  matrix_.makeCompressed();
}

Operator Operator::zero(SpacePtr space) {
  const int d = space->dim();
  return Operator(std::move(space), SparseMat(d, d));
}

Operator Operator::identity(SpacePtr space) {
  const int d = space->dim();
  SparseMat id(d, d);
  id.setIdentity();
  return Operator(std::move(space), std::move(id));
}

Operator Operator::adjoint() const { return Operator(space_, SparseMat(matrix_.adjoint())); }

double Operator::max_abs() const {
  double m = 0.0;
  for (int k = 0; k < matrix_.outerSize(); ++k)
    for (SparseMat::InnerIterator it(matrix_, k); it; ++it) m = std::max(m, std::abs(it.value()));
  return m;
}

bool Operator::is_hermitian(double rel_tol) const {
  const double scale = max_abs();
  if (scale == 0.0) return true;
  return max_abs_diff(*this, adjoint()) <= rel_tol * scale;
}

bool Operator::same_space(const Operator& other) const {
  return space_ == other.space_ || *space_ == *other.space_;
}

namespace {
void require_same(const Operator& a, const Operator& b) {
  if (!a.same_space(b)) throw std::invalid_argument("operators live on different Hilbert spaces");
}
}  // namespace

Operator Operator::operator+(const Operator& rhs) const {
  require_same(*this, rhs);
  return Operator(space_, SparseMat(matrix_ + rhs.matrix_));
}

Operator Operator::operator-(const Operator& rhs) const {
  require_same(*this, rhs);
  return Operator(space_, SparseMat(matrix_ - rhs.matrix_));
}

Operator Operator::operator*(const Operator& rhs) const {
  require_same(*this, rhs);
  SparseMat prod = (matrix_ * rhs.matrix_).pruned(0.0, 0.0);
  return Operator(space_, std::move(prod));
}

Operator Operator::operator*(cplx s) const { return Operator(space_, SparseMat(matrix_ * s)); }

Operator mode_operator(const SpacePtr& space, std::string_view label, LadderKind kind) {
  const std::size_t pos = space->position(label);
  const int dim = space->dim();
  const int local = space->modes()[pos].dim;
  const int stride = space->stride(pos);

  std::vector<Eigen::Triplet<cplx>> entries;
  entries.reserve(static_cast<std::size_t>(dim));
  for (int idx = 0; idx < dim; ++idx) {
    const int n = (idx / stride) % local;
    switch (kind) {
      case LadderKind::annihilate:
        // a|n> = sqrt(n)|n-1>
        if (n > 0) entries.emplace_back(idx - stride, idx, std::sqrt(static_cast<double>(n)));
        break;
      case LadderKind::create:
        // a†|n> = sqrt(n+1)|n+1>, zero out of the top state
        if (n + 1 < local) entries.emplace_back(idx + stride, idx, std::sqrt(static_cast<double>(n + 1)));
        break;
      case LadderKind::number:
        if (n > 0) entries.emplace_back(idx, idx, static_cast<double>(n));
        break;
      default:
        throw std::invalid_argument("unknown ladder operator kind");
    }
  }
  SparseMat m(dim, dim);
  m.setFromTriplets(entries.begin(), entries.end());
  return Operator(space, std::move(m));
}

Operator combine(const SpacePtr& space, const std::vector<Term>& terms) {
  const int d = space->dim();
  SparseMat sum(d, d);
  for (const auto& term : terms) {
    if (term.factors.empty()) throw std::invalid_argument("combine: empty product term");
    for (const auto& f : term.factors)
      if (!(*f.space_ptr() == *space)) throw std::invalid_argument("combine: operator space mismatch");
    SparseMat prod = term.factors.front().matrix();
    for (std::size_t k = 1; k < term.factors.size(); ++k) prod = prod * term.factors[k].matrix();
    sum += term.coefficient * prod;
  }
  return Operator(space, sum.pruned(0.0, 0.0));
}

Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

double max_abs_diff(const Operator& a, const Operator& b) {
  require_same(a, b);
  return Operator(a.space_ptr(), SparseMat(a.matrix() - b.matrix())).max_abs();
}

}  // namespace sqzopt
