// Copyright 2026 The geomech Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "geomech/geomcalc.hpp"
#include "geomech/weylnum.hpp"

namespace geomech::weyl {
namespace {

// Real root of q^3 + q - 4 by Cardano's formula.
double cardano_root() {
  double s = std::sqrt(4.0 + 1.0 / 27.0);
  return std::cbrt(2.0 + s) + std::cbrt(2.0 - s);
}

NonlinearStructure cubic() { return NonlinearStructure(sym::parse("1 + u^2", {"u"})); }
NonlinearStructure linear() { return NonlinearStructure(Expr(1)); }

TEST(ClockShift, SmallDimensions) {
  ClockShift two = clock_shift(2);
  EXPECT_LE(max_deviation(two.U * two.V, Complex(-1) * (two.V * two.U)), 1e-15);
  ClockShift three = clock_shift(3);
  Complex z3(-0.5, std::sqrt(3.0) / 2.0);
  EXPECT_LE(std::abs(three.zeta - z3), 1e-15);
  DenseOp group = three.U * three.V * three.U.adjoint() * three.V.adjoint();
  EXPECT_LE(max_deviation(group, z3 * DenseOp::identity(3)), 1e-12);
  EXPECT_THROW(clock_shift(1), DimensionMismatch);
}

TEST(ClockShift, UnitaryAndGroupCommutator) {
  for (int d = 2; d <= 32; ++d) {
    ClockShift cs = clock_shift(d);
    EXPECT_TRUE(cs.U.is_unitary()) << d;
    EXPECT_TRUE(cs.V.is_unitary()) << d;
    DenseOp group = cs.U * cs.V * cs.U.adjoint() * cs.V.adjoint();
    EXPECT_LE(max_deviation(group, cs.zeta * DenseOp::identity(d)), 1e-12) << d;
    EXPECT_TRUE(cs.U.pow(d).is_unitary());
    EXPECT_LE(max_deviation(cs.V.pow(d), DenseOp::identity(d)), 1e-12);
  }
}

TEST(WeylCommutation, Examples) {
  ClockShift five = clock_shift(5);
  EXPECT_TRUE(weyl_commutation_check(five.U, five.V, root_of_unity(5)).passed());
  Eigen::MatrixXcd d1 = Eigen::VectorXcd::LinSpaced(4, 1.0, 4.0).asDiagonal();
  Eigen::MatrixXcd d2 = Eigen::VectorXcd::LinSpaced(4, -2.0, 5.0).asDiagonal();
  EXPECT_TRUE(weyl_commutation_check(DenseOp(d1), DenseOp(d2), 1.0).passed());
  ClockShift four = clock_shift(4);
  CheckResult bad = weyl_commutation_check(four.U, four.V, root_of_unity(3));
  EXPECT_FALSE(bad.passed());
  EXPECT_FALSE(bad.residual.empty());
  EXPECT_THROW(weyl_commutation_check(four.U, five.V, 1.0), DimensionMismatch);
}

TEST(WeylCommutation, PhaseLawExhaustive) {
  for (int d = 2; d <= 7; ++d) {
    ClockShift cs = clock_shift(d);
    std::vector<DenseOp> up, vp;
    for (int k = 0; k < d; ++k) {
      up.push_back(cs.U.pow(k));
      vp.push_back(cs.V.pow(k));
    }
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) {
        DenseOp x = up[a] * vp[b];
        for (int c = 0; c < d; ++c) {
          for (int e = 0; e < d; ++e) {
            DenseOp y = up[c] * vp[e];
            Complex phase = root_of_unity(d, b * c - a * e);
            ASSERT_LE(max_deviation(y * x, phase * (x * y)), 1e-12) << d << a << b << c << e;
          }
        }
      }
    }
  }
}

TEST(DenseOp, Validation) {
  EXPECT_THROW(DenseOp(Eigen::MatrixXcd::Zero(2, 3)), DimensionMismatch);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2);
  m(0, 1) = std::nan("");
  EXPECT_THROW(DenseOp{m}, DomainError);
  EXPECT_TRUE(truncated_fock(5).N.is_self_adjoint());
  EXPECT_FALSE(truncated_fock(5).a.is_self_adjoint());
}

TEST(Fock, TwoLevels) {
  Fock f = truncated_fock(2);
  DenseOp comm = f.a * f.a_dag - f.a_dag * f.a;
  Eigen::MatrixXcd expected = Eigen::Vector2cd(1.0, -1.0).asDiagonal();
  EXPECT_LE(max_deviation(comm, DenseOp(expected)), 1e-15);
  EXPECT_EQ(f.N(0, 0), Complex(0.0));
  EXPECT_THROW(truncated_fock(1), DimensionMismatch);
}

TEST(Fock, TruncationDefectIsOneEntry) {
  for (int n_max : {3, 8, 16}) {
    Fock f = truncated_fock(n_max);
    EXPECT_EQ(f.a_dag.matrix(), f.a.matrix().adjoint());
    for (int i = 0; i < n_max; ++i) {
      for (int j = 0; j < n_max; ++j) {
        EXPECT_LE(std::abs(f.N(i, j) - Complex(i == j ? i : 0)), 1e-12);
      }
    }
    auto defect = ccr_defect(f);
    ASSERT_EQ(defect.size(), 1u);
    EXPECT_EQ(defect[0].row, n_max - 1);
    EXPECT_EQ(defect[0].col, n_max - 1);
    EXPECT_LE(std::abs(defect[0].value - Complex(1.0 - n_max)), 1e-12);
  }
}

TEST(Fock, NumberStates) {
  Fock f = truncated_fock(4);
  Eigen::VectorXcd vac = vacuum(4);
  EXPECT_EQ(fock_state(0, f.a_dag, vac), vac);
  Eigen::VectorXcd one = fock_state(1, f.a_dag, vac);
  EXPECT_LE((one - Eigen::VectorXcd::Unit(4, 1)).cwiseAbs().maxCoeff(), 1e-15);
  for (int n_max : {4, 12}) {
    Fock g = truncated_fock(n_max);
    for (int n = 0; n < n_max; ++n) {
      Eigen::VectorXcd s = fock_state(n, g.a_dag, vacuum(n_max));
      EXPECT_NEAR(s.norm(), 1.0, 1e-12);
      EXPECT_LE((g.N.matrix() * s - static_cast<double>(n) * s).cwiseAbs().maxCoeff(), 1e-9);
    }
  }
  EXPECT_THROW(fock_state(4, f.a_dag, vac), TruncationOverflow);
}

TEST(Nonlinear, Examples) {
  NonlinearStructure flat = linear();
  EXPECT_EQ(nonlinear_add(flat, {1.25, 2.0}, {-0.5, 1.0}), (PhasePoint{0.75, 3.0}));
  NonlinearStructure k = cubic();
  EXPECT_EQ(nonlinear_add(k, {1.0, 0.0}, {0.0, 0.0}), (PhasePoint{1.0, 0.0}));
  PhasePoint sum = nonlinear_add(k, {1.0, 0.0}, {1.0, 0.0});
  EXPECT_NEAR(sum.q, cardano_root(), 1e-10);
  EXPECT_NEAR(sum.q, 1.3788, 1e-4);
  EXPECT_EQ(nonlinear_scale(k, 1.0, {0.7, -0.3}), (PhasePoint{0.7, -0.3}));
  EXPECT_EQ(nonlinear_scale(k, 0.0, {0.7, -0.3}), (PhasePoint{0.0, 0.0}));
  PhasePoint scaled = nonlinear_scale(k, 2.0, {1.0, 1.0});
  EXPECT_NEAR(scaled.q, cardano_root(), 1e-10);
  EXPECT_EQ(scaled.p, 2.0);
}

TEST(Nonlinear, GroupLaws) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  NonlinearStructure k = cubic();
  for (int t = 0; t < 200; ++t) {
    PhasePoint a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)};
    EXPECT_EQ(nonlinear_add(k, a, b), nonlinear_add(k, b, a));
    EXPECT_EQ(nonlinear_add(k, a, {0.0, 0.0}), a);
    PhasePoint l = nonlinear_add(k, nonlinear_add(k, a, b), c);
    PhasePoint r = nonlinear_add(k, a, nonlinear_add(k, b, c));
    EXPECT_NEAR(l.q, r.q, 1e-9);
    EXPECT_NEAR(l.p, r.p, 1e-12);
    double x = u(rng), y = u(rng);
    PhasePoint twice = nonlinear_scale(k, x, nonlinear_scale(k, y, a));
    PhasePoint once = nonlinear_scale(k, x * y, a);
    EXPECT_NEAR(twice.q, once.q, 1e-9);
    // The forward map is a linear isomorphism onto ordinary R^2.
    EXPECT_NEAR(k.forward(nonlinear_add(k, a, b).q), k.forward(a.q) + k.forward(b.q), 1e-9);
  }
}

TEST(Nonlinear, ReducesToOrdinaryStructure) {
  NonlinearStructure flat = linear();
  for (double q : uniform_grid(-3, 3, 24)) {
    EXPECT_EQ(nonlinear_add(flat, {q, 1.0}, {0.25, 0.5}), (PhasePoint{q + 0.25, 1.5}));
    EXPECT_EQ(nonlinear_scale(flat, -1.5, {q, 2.0}).q, -1.5 * q);
  }
}

TEST(Nonlinear, TranslationAction) {
  std::vector<double> grid = uniform_grid(-1.0, 1.0, 32);
  TranslationReport flat = nonlinear_translation_action(linear(), 0.5, grid);
  ASSERT_EQ(flat.table.size(), 33u);
  for (const auto& [x, y] : flat.table) EXPECT_EQ(y, x + 0.5);
  TranslationReport none = nonlinear_translation_action(cubic(), 0.0, grid);
  for (const auto& [x, y] : none.table) EXPECT_EQ(y, x);
  TranslationReport r = nonlinear_translation_action(cubic(), 0.5, grid, -0.8);
  EXPECT_TRUE(r.passed);
  EXPECT_LT(r.group_law_residual, 1e-9);
}

TEST(Nonlinear, SymplecticFactorMatchesPullback) {
  NonlinearStructure k = cubic();
  calc::Chart qp("T*R", {"q", "p"});
  calc::DiffForm w(qp, 2);
  w.add({0, 1}, Expr(1));
  calc::DiffForm pulled = calc::pullback_map(qp, {k.forward_expr(), Expr::symbol("p")}, w);
  EXPECT_TRUE(sym::equal(pulled.component({0, 1}), k.symplectic_factor()).is_equal());
  EXPECT_TRUE(sym::equal(k.symplectic_factor(), sym::parse("1 + 3*q^2", {"q"})).is_equal());
  // Not a multiple of the canonical form by a constant.
  EXPECT_FALSE(sym::equal(k.symplectic_factor(), Expr(1)).is_equal());
}

TEST(Nonlinear, InvalidStructures) {
  EXPECT_THROW(NonlinearStructure(sym::parse("1 - u^2", {"u"})), SingularJacobian);
  EXPECT_THROW(NonlinearStructure(sym::parse("1 + x", {"x", "u"})), UnknownSymbol);
  // q/(1 + |q|) has range (-1, 1).
  NonlinearStructure bounded(sym::parse("1/(1 + u)", {"u"}));
  EXPECT_NEAR(nonlinear_add(bounded, {0.5, 0.0}, {0.5, 0.0}).q, 2.0, 1e-12);
  EXPECT_THROW(nonlinear_add(bounded, {1.0, 0.0}, {1.0, 0.0}), InversionFailure);
  EXPECT_THROW(nonlinear_add(bounded, {3.0, 0.0}, {3.0, 0.0}), InversionFailure);
  EXPECT_THROW(nonlinear_scale(bounded, 10.0, {1.0, 0.0}), InversionFailure);
}

TEST(Nonlinear, ClosedFormInverse) {
  // q |q| has inverse sign(Q) sqrt(|Q|).
  NonlinearStructure sq(Expr::symbol("u") + Expr(1), "u", sym::parse("sign(Q)*(sqrt(1 + 4*abs(Q)) - 1)/2", {"Q"}));
  EXPECT_NEAR(nonlinear_add(sq, {1.0, 0.0}, {1.0, 0.0}).q, (std::sqrt(17.0) - 1.0) / 2.0, 1e-14);
  EXPECT_THROW(NonlinearStructure(Expr::symbol("u") + Expr(1), "u", sym::parse("Q", {"Q"})), NotInverse);
}

}  // namespace
}  // namespace geomech::weyl
