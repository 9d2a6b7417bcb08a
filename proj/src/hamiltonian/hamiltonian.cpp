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

#include "geomech/hamiltonian.hpp"

namespace geomech::hamilton {
namespace {

/// Throws DegenerateOmega unless the 2-form is certified nondegenerate.
Expr nondegenerate_det(const DiffForm& w, const Sampling& s, const std::string& label) {
  Expr det = calc::determinant(calc::form_matrix(w));
  sym::EqualResult r = sym::equal(det, Expr(0), s);
  if (r.verdict != sym::Verdict::NotEqual) {
    auto pts = sym::sample_points({det}, 1, s);
    throw DegenerateOmega(label + " is degenerate", pts.empty() ? PointValues{} : pts.front().values);
  }
  return det;
}

}  // namespace

CanonicalCotangent canonical_cotangent(int m) {
  if (m < 1) throw DimensionMismatch("cotangent bundle needs m >= 1");
  std::vector<std::string> coords;
  for (const char* prefix : {"q", "p"}) {
    for (int i = 1; i <= m; ++i) coords.push_back(m == 1 ? prefix : prefix + std::to_string(i));
  }
  return canonical_cotangent(Chart("T*Q", coords));
}

CanonicalCotangent canonical_cotangent(const Chart& chart) {
  if (chart.dim() % 2 != 0) throw OddDimension("chart '" + chart.name() + "' is odd-dimensional");
  std::size_t m = chart.dim() / 2;
  CanonicalCotangent out{chart, DiffForm(chart, 1), DiffForm(chart, 2), Bivector::zero(chart),
                         VectorField::zero(chart)};
  std::vector<Expr> delta(chart.dim(), Expr(0));
  for (std::size_t i = 0; i < m; ++i) {
    int q = static_cast<int>(i);
    int p = static_cast<int>(m + i);
    out.theta.add({q}, chart.coord(m + i));
    out.omega.add({q, p}, Expr(1));
    out.Lambda = out.Lambda + Bivector::wedge(chart, i, m + i);
    delta[m + i] = chart.coord(m + i);
  }
  out.delta = VectorField(chart, delta);
  return out;
}

HamiltonianSystem canonical_system(const Chart& chart, const Expr& h) {
  CanonicalCotangent c = canonical_cotangent(chart);
  return {chart, h, c.omega, c.Lambda};
}

CheckResult check_inverse_pair(const HamiltonianSystem& sys, const Sampling& s) {
  return calc::check_equal(t_phi(sys.Lambda, sys.omega), Tensor11::identity(sys.chart), s);
}

VectorField hamiltonian_vf(const HamiltonianSystem& sys, const Sampling& s) {
  calc::require_same_chart(sys.chart, sys.omega.chart());
  std::size_t n = sys.chart.dim();
  calc::Matrix w = calc::form_matrix(sys.omega);
  calc::Matrix a(n, std::vector<Expr>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[j][i] = w[i][j];
  }
  DiffForm dh = DiffForm::exact(sys.chart, sys.H);
  std::vector<Expr> b(n);
  for (std::size_t j = 0; j < n; ++j) b[j] = dh.component({static_cast<int>(j)});
  std::vector<Expr> x;
  if (!calc::solve_linear(a, b, x, s)) {
    nondegenerate_det(sys.omega, s, "symplectic form");
    throw DegenerateOmega("symplectic form is degenerate", {});
  }
  return VectorField(sys.chart, x);
}

VectorField poisson_vf(const HamiltonianSystem& sys) {
  return sys.Lambda.sharp(DiffForm::exact(sys.chart, sys.H));
}

Expr poisson_bracket(const Expr& f, const Expr& g, const Bivector& l) {
  const auto& c = l.chart().coords();
  std::vector<Expr> df;
  std::vector<Expr> dg;
  for (const auto& x : c) {
    df.push_back(sym::differentiate(f, x));
    dg.push_back(sym::differentiate(g, x));
  }
  std::vector<Expr> terms;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (df[i].is_zero()) continue;
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (l(i, j).is_zero() || dg[j].is_zero()) continue;
      terms.push_back(l(i, j) * df[i] * dg[j]);
    }
  }
  return sym::add(std::move(terms));
}

StructureConstants::StructureConstants(int dim)
    : dim_(dim), c_(static_cast<std::size_t>(dim) * dim * dim, Rational(0)) {
  if (dim < 1) throw BadStructureConstants("Lie algebra dimension must be positive");
}

const Rational& StructureConstants::operator()(int k, int i, int j) const {
  return c_.at((static_cast<std::size_t>(k) * dim_ + i) * dim_ + j);
}

void StructureConstants::set(int k, int i, int j, const Rational& value) {
  c_.at((static_cast<std::size_t>(k) * dim_ + i) * dim_ + j) = value;
  c_.at((static_cast<std::size_t>(k) * dim_ + j) * dim_ + i) = -value;
}

void StructureConstants::validate() const {
  auto idx = [](int a, int b, int c, int d) {
    return "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "," + std::to_string(c + 1) +
           (d >= 0 ? "," + std::to_string(d + 1) : "") + ")";
  };
  for (int k = 0; k < dim_; ++k) {
    for (int i = 0; i < dim_; ++i) {
      for (int j = 0; j < dim_; ++j) {
        if ((*this)(k, i, j) != -(*this)(k, j, i)) {
          throw BadStructureConstants("c^k_ij not antisymmetric at (k,i,j) = " + idx(k, i, j, -1));
        }
      }
    }
  }
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      for (int k = 0; k < dim_; ++k) {
        for (int l = 0; l < dim_; ++l) {
          Rational sum = 0;
          for (int m = 0; m < dim_; ++m) {
            sum += (*this)(m, i, j) * (*this)(l, m, k) + (*this)(m, j, k) * (*this)(l, m, i) +
                   (*this)(m, k, i) * (*this)(l, m, j);
          }
          if (sum != 0) {
            throw BadStructureConstants("Jacobi identity fails at (i,j,k,l) = " + idx(i, j, k, l));
          }
        }
      }
    }
  }
}

StructureConstants so3_constants() {
  StructureConstants sc(3);
  sc.set(2, 0, 1, 1);
  sc.set(0, 1, 2, 1);
  sc.set(1, 2, 0, 1);
  return sc;
}

Bivector lie_poisson(const StructureConstants& sc) {
  sc.validate();
  int n = sc.dim();
  std::vector<std::string> coords;
  for (int i = 1; i <= n; ++i) coords.push_back("xi" + std::to_string(i));
  Chart chart("g*", coords);
  calc::Matrix m(n, std::vector<Expr>(n, Expr(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<Expr> terms;
      for (int k = 0; k < n; ++k) {
        if (sc(k, i, j) != 0) terms.push_back(Expr(sc(k, i, j)) * chart.coord(k));
      }
      m[i][j] = sym::add(std::move(terms));
    }
  }
  return Bivector(chart, m);
}

Tensor11 t_phi(const Bivector& l, const DiffForm& omega_phi) {
  calc::require_same_chart(l.chart(), omega_phi.chart());
  calc::Matrix w = calc::form_matrix(omega_phi);
  // T^i_j = Lambda^{ik} w_jk
  return Tensor11(l.chart(), calc::multiply(l.matrix(), calc::transpose(w)));
}

DiffForm d_T(const Expr& f, const Tensor11& t) { return t.apply(DiffForm::exact(t.chart(), f)); }

DiffForm omega_from_constant(const Expr& f, const Tensor11& t) {
  return calc::exterior_derivative(d_T(f, t));
}

CheckResult invariance_check(const VectorField& gamma, const Expr& f, const Sampling& s) {
  return sym::check_zero(gamma.apply(f), s, "Gamma(f)");
}

CheckResult invariance_check(const VectorField& gamma, const DiffForm& w, const Sampling& s) {
  return calc::check_zero(calc::lie_derivative(gamma, w), s);
}

CheckResult invariance_check(const VectorField& gamma, const Tensor11& t, const Sampling& s) {
  return calc::check_zero(calc::lie_derivative(gamma, t), s);
}

Tensor11 recursion_operator(const DiffForm& w1, const DiffForm& w2, const Sampling& s) {
  calc::require_same_chart(w1.chart(), w2.chart());
  nondegenerate_det(w1, s, "first 2-form");
  Expr det = nondegenerate_det(w2, s, "second 2-form");
  calc::Matrix inv = calc::adjugate(calc::form_matrix(w2));
  Expr inv_det = sym::pow(det, -1);
  for (auto& row : inv) {
    for (auto& e : row) e = inv_det * e;
  }
  return Tensor11(w1.chart(), calc::multiply(inv, calc::form_matrix(w1)));
}

std::vector<Expr> trace_invariants(const Tensor11& n, int k_max) {
  if (k_max < 1) throw DimensionMismatch("trace invariants need k_max >= 1");
  std::vector<Expr> out;
  calc::Matrix power = n.matrix();
  for (int k = 1; k <= k_max; ++k) {
    if (k > 1) power = calc::multiply(power, n.matrix());
    std::vector<Expr> diag;
    for (std::size_t i = 0; i < power.size(); ++i) diag.push_back(power[i][i]);
    out.push_back(sym::add(std::move(diag)));
  }
  return out;
}

CheckResult magri_compatible(const Bivector& l1, const Bivector& l2, const Sampling& s) {
  calc::require_same_chart(l1.chart(), l2.chart());
  const char* names[] = {"first", "second"};
  const Bivector* inputs[] = {&l1, &l2};
  for (int i = 0; i < 2; ++i) {
    CheckResult r = calc::check_zero(calc::jacobiator(*inputs[i]), s);
    if (!r.passed()) {
      throw NotPoisson(std::string(names[i]) + " bivector is not Poisson (" + r.detail + ")",
                       r.witness ? r.witness->values : PointValues{});
    }
  }
  return calc::check_zero(calc::jacobiator(l1 + l2), s);
}

}  // namespace geomech::hamilton
