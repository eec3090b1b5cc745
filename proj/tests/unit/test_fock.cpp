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

#include "sqzopt/fock.hpp"

using namespace sqzopt;

TEST_SUITE("fock") {

TEST_CASE("annihilator matrix elements") {
  auto s = make_space({{"c", 3}});
  const DenseMat a = mode_operator(s, "c", LadderKind::annihilate).dense();
  DenseMat expected = DenseMat::Zero(3, 3);
  expected(0, 1) = 1.0;
  expected(1, 2) = std::sqrt(2.0);
  CHECK((a - expected).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("first mode varies slowest") {
  auto s = make_space({{"a", 2}, {"c", 2}});
  const DenseMat n = mode_operator(s, "a", LadderKind::number).dense();
  Eigen::VectorXcd d(4);
  d << 0.0, 0.0, 1.0, 1.0;
  CHECK((n - DenseMat(d.asDiagonal())).cwiseAbs().maxCoeff() == 0.0);
  const int occ[2] = {1, 0};
  CHECK(s->index(occ) == 2);
  CHECK(s->occupations(3) == std::vector<int>{1, 1});
  CHECK(s->ket_label(2) == "|1,0>");
}

TEST_CASE("number equals adjoint(a) a for every dim up to 8") {
  for (int d = 1; d <= 8; ++d) {
    auto s = make_space({{"x", d}, {"y", 2}});
    const Operator a = mode_operator(s, "x", LadderKind::annihilate);
    const Operator n = mode_operator(s, "x", LadderKind::number);
    CHECK(max_abs_diff(n, a.adjoint() * a) <= 4 * d * 2.3e-16);  // sqrt(n)² rounding
    CHECK(max_abs_diff(mode_operator(s, "x", LadderKind::create), a.adjoint()) == 0.0);
  }
}

TEST_CASE("operators on distinct modes commute exactly") {
  auto s = make_space({{"a", 3}, {"b", 4}, {"c", 5}});
  const LadderKind kinds[] = {LadderKind::annihilate, LadderKind::create, LadderKind::number};
  const char* labels[] = {"a", "b", "c"};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (auto ki : kinds)
        for (auto kj : kinds)
          CHECK(commutator(mode_operator(s, labels[i], ki), mode_operator(s, labels[j], kj)).max_abs() == 0.0);
    }
}

TEST_CASE("canonical commutator fails only on the top Fock level") {
  auto s = make_space({{"c", 5}});
  const Operator a = mode_operator(s, "c", LadderKind::annihilate);
  const DenseMat defect = (commutator(a, a.adjoint()) - Operator::identity(s)).dense();
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      if (i == 4 && j == 4) CHECK(std::abs(defect(i, j) + 5.0) < 1e-14);
      else CHECK(std::abs(defect(i, j)) < 1e-15);
    }
}

TEST_CASE("adjoint is an involution") {
  auto s = make_space({{"a", 3}, {"c", 4}});
  const Operator x = combine(s, {{cplx(0.3, 0.7), {mode_operator(s, "a", LadderKind::create),
                                                   mode_operator(s, "c", LadderKind::annihilate)}}});
  CHECK(max_abs_diff(x.adjoint().adjoint(), x) == 0.0);
  CHECK_FALSE(x.is_hermitian());
}

TEST_CASE("combine") {
  auto s = make_space({{"a", 2}, {"b", 2}});
  const Operator a = mode_operator(s, "a", LadderKind::annihilate);
  CHECK(combine(s, {{1.0, {a}}, {-1.0, {a}}}).matrix().nonZeros() == 0);

  auto c = make_space({{"c", 2}});
  const Operator x = combine(c, {{1.0, {mode_operator(c, "c", LadderKind::create)}},
                                 {1.0, {mode_operator(c, "c", LadderKind::annihilate)}}});
  DenseMat px(2, 2);
  px << 0.0, 1.0, 1.0, 0.0;
  CHECK((x.dense() - px).cwiseAbs().maxCoeff() == 0.0);

  // g0 (a† b + a b†) built densely with Kronecker products.
  const double g0 = 0.4;
  const Operator h = combine(s, {{g0, {a.adjoint(), mode_operator(s, "b", LadderKind::annihilate)}},
                                 {g0, {a, mode_operator(s, "b", LadderKind::create)}}});
  Eigen::MatrixXcd lo(2, 2), id = Eigen::MatrixXcd::Identity(2, 2);
  lo << 0.0, 1.0, 0.0, 0.0;
  auto kron = [](const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) {
    Eigen::MatrixXcd k(x.rows() * y.rows(), x.cols() * y.cols());
    for (int i = 0; i < x.rows(); ++i)
      for (int j = 0; j < x.cols(); ++j) k.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    return k;
  };
  const Eigen::MatrixXcd ref = g0 * (kron(lo.adjoint(), id) * kron(id, lo) + kron(lo, id) * kron(id, lo.adjoint()));
  CHECK((h.dense() - ref).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(h.is_hermitian());
  const int s10[2] = {1, 0}, s01[2] = {0, 1};
  CHECK(std::abs(h.dense()(s->index(s10), s->index(s01)) - g0) < 1e-15);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(make_space({}), std::invalid_argument);
  CHECK_THROWS_AS(make_space({{"a", 2}, {"a", 3}}), std::invalid_argument);
  CHECK_THROWS_AS(make_space({{"a", 0}}), std::invalid_argument);
  auto s = make_space({{"a", 2}});
  auto t = make_space({{"b", 2}});
  CHECK_THROWS_AS(mode_operator(s, "z", LadderKind::number), std::invalid_argument);
  CHECK_THROWS_AS(mode_operator(s, "a", static_cast<LadderKind>(7)), std::invalid_argument);
  CHECK_THROWS_AS(mode_operator(s, "a", LadderKind::number) + mode_operator(t, "b", LadderKind::number),
                  std::invalid_argument);
  CHECK_THROWS_AS(combine(s, {{1.0, {mode_operator(t, "b", LadderKind::number)}}}), std::invalid_argument);
  CHECK_THROWS_AS(s->occupations(2), std::out_of_range);
}

}
