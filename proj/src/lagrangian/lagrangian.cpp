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

#include <cmath>

#include "geomech/lagrangian.hpp"

namespace geomech::lagrange {

DiffForm cartan_one_form(const LagrangianSystem& sys) { return tangent::d_S(sys.L, sys.ts); }

DiffForm lagrangian_two_form(const LagrangianSystem& sys) {
  return Expr(-1) * calc::exterior_derivative(cartan_one_form(sys));
}

Expr energy(const LagrangianSystem& sys) { return sys.ts.delta.apply(sys.L) - sys.L; }

calc::Matrix velocity_hessian(const LagrangianSystem& sys) {
  const auto& coords = sys.ts.chart.coords();
  std::size_t m = coords.size() / 2;
  calc::Matrix h(m, std::vector<Expr>(m));
  for (std::size_t j = 0; j < m; ++j) {
    Expr dj = sym::differentiate(sys.L, coords[m + j]);
    for (std::size_t k = 0; k < m; ++k) h[j][k] = sym::differentiate(dj, coords[m + k]);
  }
  return h;
}

const char* to_string(Regularity::Kind kind) {
  switch (kind) {
    case Regularity::Kind::Regular:
      return "regular";
    case Regularity::Kind::SingularLocus:
      return "singular-locus";
    case Regularity::Kind::Degenerate:
      return "degenerate";
  }
  return "";
}

Regularity regularity(const LagrangianSystem& sys, const Sampling& s) {
  Regularity out;
  out.det = calc::determinant(velocity_hessian(sys));
  auto points = sym::sample_points({out.det, sys.L}, 1, s);
  sym::EqualResult zero = sym::equal(out.det, Expr(0), s);
  if (zero.verdict == sym::Verdict::Equal) {
    out.kind = Regularity::Kind::Degenerate;
    if (!points.empty()) out.witness = points.front();
    return out;
  }
  // Parameters and opaque functions keep their sampled values; chart
  // coordinates run over the grid.
  if (points.empty()) return out;
  const auto& coords = sys.ts.chart.coords();
  std::size_t n = coords.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n && total < 6561; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    sym::EvalPoint p = points.front();
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      p.values[coords[i]] = static_cast<double>(static_cast<int>(c % 3) - 1);
      c /= 3;
    }
    try {
      if (sym::eval(out.det, p) == 0.0) {
        out.kind = Regularity::Kind::SingularLocus;
        out.witness = p;
        return out;
      }
    } catch (const DomainError&) {
    }
  }
  return out;
}

VectorField el_solve(const LagrangianSystem& sys, const Sampling& s) {
  const calc::Chart& chart = sys.ts.chart;
  std::size_t n = chart.dim();
  calc::Matrix w = calc::form_matrix(lagrangian_two_form(sys));
  // (i_Gamma w)_j = Gamma^i w_ij
  calc::Matrix a(n, std::vector<Expr>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[j][i] = w[i][j];
  }
  DiffForm de = DiffForm::exact(chart, energy(sys));
  std::vector<Expr> b(n);
  for (std::size_t j = 0; j < n; ++j) b[j] = de.component({static_cast<int>(j)});
  std::vector<Expr> gamma;
  if (!calc::solve_linear(a, b, gamma, s)) {
    Expr det = calc::determinant(a);
    auto pts = sym::sample_points({det, sys.L}, 1, s);
    throw DegenerateLagrangian("Lagrangian two-form is degenerate (det " + sym::to_string(det) + ")",
                               pts.empty() ? PointValues{} : pts.front().values);
  }
  return VectorField(chart, gamma);
}

DiffForm el_residual(const LagrangianSystem& sys, const VectorField& gamma) {
  return calc::lie_derivative(gamma, cartan_one_form(sys)) - DiffForm::exact(sys.ts.chart, sys.L);
}

LagrangianSystem transform_description(const LagrangianSystem& sys, const Diffeo& phi,
                                       const Sampling& s) {
  return {tangent::transport_structure(sys.ts, phi, s), phi.push(sys.L)};
}

}  // namespace geomech::lagrange
