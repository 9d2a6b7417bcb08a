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

#include "geomech/lagrangian.hpp"

namespace geomech::lagrange {
namespace {

using calc::Chart;

const Chart kQV("TQ", {"q", "v"});
const Chart kYW("yw", {"y", "w"});

Expr E(const Chart& c, const std::string& text) {
  std::vector<std::string> names = c.coords();
  names.push_back("omega");
  return sym::parse(text, names, {"f", "F"});
}

VectorField field(const Chart& c, const std::vector<std::string>& comps) {
  std::vector<Expr> out;
  for (const auto& t : comps) out.push_back(E(c, t));
  return VectorField(c, out);
}

LagrangianSystem sys(const std::string& l) { return {tangent::canonical_structure(1), E(kQV, l)}; }

TEST(CartanForms, OneForm) {
  EXPECT_EQ(cartan_one_form(sys("v^2/2")).component({0}), E(kQV, "v"));
  EXPECT_TRUE(cartan_one_form(sys("q")).components().empty());
  DiffForm theta = cartan_one_form(sys("(v^2 - q^2)/2"));
  EXPECT_EQ(theta.component({0}), E(kQV, "v"));
  EXPECT_EQ(theta.component({1}), Expr(0));
}

TEST(CartanForms, TwoForm) {
  DiffForm w = lagrangian_two_form(sys("v^2/2"));
  EXPECT_EQ(w.component({0, 1}), Expr(1));
  EXPECT_TRUE(lagrangian_two_form(sys("q*v")).components().empty());
  LagrangianSystem two{tangent::canonical_structure(2), Expr()};
  two.L = sym::parse("sin(q1)*v2^3 + f(q2*v1) + v1*v2*q1", two.ts.chart.coords(), {"f"});
  EXPECT_TRUE(calc::exterior_derivative(lagrangian_two_form(two)).components().empty());
}

TEST(Energy, Examples) {
  EXPECT_EQ(energy(sys("v^2/2")), E(kQV, "v^2/2"));
  EXPECT_EQ(energy(sys("(v^2 - q^2)/2")), E(kQV, "(v^2 + q^2)/2"));
  EXPECT_TRUE(energy(sys("q*v")).is_zero());
}

TEST(Regularity, Examples) {
  Regularity free = regularity(sys("v^2/2"));
  EXPECT_EQ(free.kind, Regularity::Kind::Regular);
  EXPECT_EQ(free.det, Expr(1));

  Regularity lin = regularity(sys("q*v"));
  EXPECT_EQ(lin.kind, Regularity::Kind::Degenerate);
  EXPECT_TRUE(lin.det.is_zero());

  Regularity quartic = regularity(sys("v^4"));
  EXPECT_EQ(quartic.kind, Regularity::Kind::SingularLocus);
  EXPECT_EQ(quartic.det, E(kQV, "12*v^2"));
  ASSERT_TRUE(quartic.witness.has_value());
  EXPECT_EQ(quartic.witness->values.at("v"), 0.0);
}

TEST(ElSolve, FreeParticle) {
  VectorField g = el_solve(sys("v^2/2"));
  EXPECT_TRUE(calc::check_equal(g, field(kQV, {"v", "0"}), {}).passed());
}

TEST(ElSolve, HarmonicOscillator) {
  VectorField g = el_solve(sys("(v^2 - q^2)/2"));
  EXPECT_TRUE(calc::check_equal(g, field(kQV, {"v", "-q"}), {}).passed());
}

TEST(ElSolve, DegenerateLagrangian) {
  try {
    el_solve(sys("q*v"));
    FAIL() << "expected DegenerateLagrangian";
  } catch (const DegenerateLagrangian& e) {
    EXPECT_FALSE(e.point().empty());
  }
}

TEST(ElSolve, OutputIsSecondOrderWithZeroResidual) {
  for (const char* l : {"v^2/2", "(v^2 - q^2)/2", "v^2*(2 + sin(q))/2 - q^4", "exp(q)*v^2 + q*v", "v^4/12 + v^2",
                        "f(q)*v^2/2"}) {
    LagrangianSystem s = sys(l);
    VectorField g = el_solve(s);
    EXPECT_TRUE(tangent::is_sode(g, s.ts).passed()) << l;
    EXPECT_TRUE(calc::check_zero(el_residual(s, g), {}).passed()) << l;
  }
}

TEST(ElResidual, Examples) {
  EXPECT_TRUE(calc::check_zero(el_residual(sys("v^2/2"), field(kQV, {"v", "0"})), {}).passed());
  EXPECT_TRUE(calc::check_zero(el_residual(sys("(v^2 - q^2)/2"), field(kQV, {"v", "-q"})), {}).passed());
  DiffForm r = el_residual(sys("v^2/2"), field(kQV, {"v", "1"}));
  EXPECT_EQ(r.component({0}), Expr(1));
  EXPECT_EQ(r.component({1}), Expr(0));
}

TEST(Properties, GaugeTermLeavesDynamicsUnchanged) {
  for (const char* l : {"v^2/2", "(v^2 - q^2)/2", "v^2*(2 + sin(q))/2"}) {
    VectorField g = el_solve(sys(l));
    VectorField gauged = el_solve(sys(std::string(l) + " + v*F'(q)"));
    EXPECT_TRUE(calc::check_equal(g, gauged, {}).passed()) << l;
  }
}

TEST(Properties, AlternativeFreeParticleLagrangian) {
  VectorField a = el_solve(sys("v^2/2"));
  VectorField b = el_solve(sys("v^4/12"));
  EXPECT_TRUE(calc::check_equal(a, b, {}).passed());
}

TEST(Properties, TwoDegreesOfFreedom) {
  LagrangianSystem s{tangent::canonical_structure(2), sym::Expr()};
  Chart c = s.ts.chart;
  s.L = sym::parse("(v1^2 + v2^2)/2 + v1*v2/4 - q1^2*q2", c.coords());
  VectorField g = el_solve(s);
  EXPECT_TRUE(tangent::is_sode(g, s.ts).passed());
  EXPECT_TRUE(calc::check_zero(el_residual(s, g), {}).passed());
}

Diffeo second_example() {
  return Diffeo(kQV, kYW, {E(kQV, "q*omega^(-2)"), E(kQV, "v/omega")}, {E(kYW, "omega^2*y"), E(kYW, "omega*w")});
}

TEST(TransformDescription, Identity) {
  LagrangianSystem s = sys("(v^2 - q^2)/2");
  LagrangianSystem t = transform_description(s, Diffeo::identity(kQV));
  EXPECT_EQ(t.L, s.L);
  EXPECT_TRUE(calc::check_equal(t.ts.S, s.ts.S, {}).passed());
}

TEST(TransformDescription, PointTransformation) {
  Diffeo scale(kQV, kYW, {E(kQV, "2*q"), E(kQV, "2*v")}, {E(kYW, "y/2"), E(kYW, "w/2")});
  LagrangianSystem s = sys("v^2/2");
  LagrangianSystem t = transform_description(s, scale);
  EXPECT_EQ(t.L, E(kYW, "w^2/8"));
  VectorField g = el_solve(t);
  EXPECT_TRUE(calc::check_equal(g, calc::pushforward(scale, el_solve(s)), {}).passed());
  EXPECT_TRUE(calc::check_equal(g, field(kYW, {"w", "0"}), {}).passed());
}

TEST(TransformDescription, OscillatorWithFrequency) {
  // (y, w) description of frequency omega, carried back to (q, v).
  LagrangianSystem target{tangent::canonical_structure(kYW), E(kYW, "(w^2 - omega^2*y^2)/2")};
  VectorField target_field = field(kYW, {"w", "-omega^2*y"});
  EXPECT_TRUE(calc::check_zero(el_residual(target, target_field), {}).passed());
  Diffeo phi = second_example();
  LagrangianSystem back = transform_description(target, phi.inverse());
  VectorField gamma = field(kQV, {"omega*v", "-omega*q"});
  EXPECT_TRUE(calc::check_zero(el_residual(back, gamma), {}).passed());
  EXPECT_TRUE(tangent::is_sode(gamma, back.ts).passed());
  EXPECT_TRUE(calc::check_equal(el_solve(back), gamma, {}).passed());
}

TEST(TransformDescription, CommutesWithSolving) {
  std::vector<Diffeo> diffeos = {
      second_example(),
      Diffeo(kQV, kYW, {E(kQV, "q + v^3"), E(kQV, "v")}, {E(kYW, "y - w^3"), E(kYW, "w")}),
      Diffeo(kQV, kYW, {E(kQV, "q/f(v)"), E(kQV, "v")}, {E(kYW, "y*f(w)"), E(kYW, "w")}),
  };
  for (const auto& phi : diffeos) {
    for (const char* l : {"v^2/2", "(v^2 - q^2)/2"}) {
      LagrangianSystem s = sys(l);
      VectorField g = el_solve(s);
      LagrangianSystem t = transform_description(s, phi);
      VectorField moved = calc::pushforward(phi, g);
      EXPECT_TRUE(calc::check_zero(el_residual(t, moved), {}).passed()) << l;
      EXPECT_TRUE(calc::check_equal(el_solve(t), moved, {}).passed()) << l;
    }
  }
}

}  // namespace
}  // namespace geomech::lagrange
