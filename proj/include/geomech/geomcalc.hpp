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

#pragma once

// Chart-level tensor calculus: vector fields, differential forms, (1,1)
// tensors and bivectors with components in symbolic expressions, together
// with d, wedge, interior product, Lie derivatives, brackets, the Nijenhuis
// torsion, the Poisson jacobiator and transport along diffeomorphisms.

#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "geomech/symexpr.hpp"

namespace geomech::calc {

using sym::CheckResult;
using sym::Expr;
using sym::Sampling;

/// Ordered coordinate names of a local model R^n.
class Chart {
 public:
  Chart() = default;
  Chart(std::string name, std::vector<std::string> coords);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& coords() const { return coords_; }
  std::size_t dim() const { return coords_.size(); }
  /// Position of a coordinate; throws UnknownSymbol.
  std::size_t index(const std::string& coord) const;
  Expr coord(std::size_t i) const { return Expr::symbol(coords_[i]); }

  friend bool operator==(const Chart& a, const Chart& b) {
    return a.name_ == b.name_ && a.coords_ == b.coords_;
  }
  friend bool operator!=(const Chart& a, const Chart& b) { return !(a == b); }

 private:
  std::string name_;
  std::vector<std::string> coords_;
};

void require_same_chart(const Chart& a, const Chart& b);

using Matrix = std::vector<std::vector<Expr>>;

/// X = X^i d/dx^i
class VectorField {
 public:
  VectorField() = default;
  VectorField(Chart chart, std::vector<Expr> components);
  static VectorField zero(const Chart& chart);
  /// The coordinate field d/dx^i.
  static VectorField coordinate(const Chart& chart, std::size_t i);

  const Chart& chart() const { return chart_; }
  const std::vector<Expr>& components() const { return components_; }
  const Expr& operator[](std::size_t i) const { return components_[i]; }
  std::size_t dim() const { return components_.size(); }

  /// Directional derivative X(f).
  Expr apply(const Expr& f) const;

 private:
  Chart chart_;
  std::vector<Expr> components_;
};

VectorField operator+(const VectorField& a, const VectorField& b);
VectorField operator-(const VectorField& a, const VectorField& b);
VectorField operator*(const Expr& f, const VectorField& x);

/// Strictly increasing coordinate positions of a basis form dx^I.
using MultiIndex = std::vector<int>;

/// Differential k-form stored on increasing multi-indices; zero components
/// are not stored.
class DiffForm {
 public:
  DiffForm() = default;
  DiffForm(Chart chart, int degree);
  static DiffForm scalar(const Chart& chart, const Expr& f);
  /// dx^i
  static DiffForm differential(const Chart& chart, std::size_t i);
  /// df
  static DiffForm exact(const Chart& chart, const Expr& f);

  const Chart& chart() const { return chart_; }
  int degree() const { return degree_; }
  const std::map<MultiIndex, Expr>& components() const { return components_; }

  /// Component for any index tuple: antisymmetrized, 0 on repeats.
  Expr component(const MultiIndex& index) const;
  /// Adds c dx^{index}; the index may be unsorted.
  void add(const MultiIndex& index, const Expr& c);
  /// Value of a 0-form.
  Expr value() const { return component({}); }

 private:
  Chart chart_;
  int degree_ = 0;
  std::map<MultiIndex, Expr> components_;
};

DiffForm operator+(const DiffForm& a, const DiffForm& b);
DiffForm operator-(const DiffForm& a, const DiffForm& b);
DiffForm operator*(const Expr& f, const DiffForm& w);

/// Full antisymmetric matrix w_ij = w(d_i, d_j) of a 2-form.
Matrix form_matrix(const DiffForm& w);
DiffForm form_from_matrix(const Chart& chart, const Matrix& m);

/// T = T^i_j d/dx^i (x) dx^j with m[i][j] = T^i_j.
class Tensor11 {
 public:
  Tensor11() = default;
  Tensor11(Chart chart, Matrix m);
  static Tensor11 zero(const Chart& chart);
  static Tensor11 identity(const Chart& chart);

  const Chart& chart() const { return chart_; }
  const Matrix& matrix() const { return m_; }
  const Expr& operator()(std::size_t i, std::size_t j) const { return m_[i][j]; }

  VectorField apply(const VectorField& x) const;
  /// Transpose action on a 1-form: (alpha o T)_j = alpha_i T^i_j.
  DiffForm apply(const DiffForm& alpha) const;

 private:
  Chart chart_;
  Matrix m_;
};

Tensor11 operator+(const Tensor11& a, const Tensor11& b);
Tensor11 operator-(const Tensor11& a, const Tensor11& b);
Tensor11 operator*(const Expr& f, const Tensor11& t);
/// (A o B)(X) = A(B(X))
Tensor11 compose(const Tensor11& a, const Tensor11& b);

/// Antisymmetric (2,0) tensor with m[i][j] = Lambda^{ij} = -m[j][i].
class Bivector {
 public:
  Bivector() = default;
  /// Takes the upper triangle of m and antisymmetrizes.
  Bivector(Chart chart, const Matrix& m);
  static Bivector zero(const Chart& chart);
  /// d/dx^i ^ d/dx^j
  static Bivector wedge(const Chart& chart, std::size_t i, std::size_t j);

  const Chart& chart() const { return chart_; }
  const Matrix& matrix() const { return m_; }
  const Expr& operator()(std::size_t i, std::size_t j) const { return m_[i][j]; }

  /// Lambda#(alpha)^j = Lambda^{ji} alpha_i
  VectorField sharp(const DiffForm& alpha) const;

 private:
  Chart chart_;
  Matrix m_;
};

Bivector operator+(const Bivector& a, const Bivector& b);
Bivector operator-(const Bivector& a, const Bivector& b);
Bivector operator*(const Expr& f, const Bivector& l);

/// Plain n x n x n component container (Nijenhuis torsion N^i_{jk},
/// jacobiator J^{ijk}).
class Components3 {
 public:
  Components3() = default;
  explicit Components3(Chart chart);
  const Chart& chart() const { return chart_; }
  const Expr& operator()(std::size_t i, std::size_t j, std::size_t k) const;
  Expr& operator()(std::size_t i, std::size_t j, std::size_t k);
  std::size_t dim() const { return n_; }

 private:
  Chart chart_;
  std::size_t n_ = 0;
  std::vector<Expr> data_;
};

DiffForm exterior_derivative(const DiffForm& w);
DiffForm wedge(const DiffForm& a, const DiffForm& b);
DiffForm interior_product(const VectorField& x, const DiffForm& w);
VectorField lie_bracket(const VectorField& x, const VectorField& y);
DiffForm lie_derivative(const VectorField& x, const DiffForm& w);
Tensor11 lie_derivative(const VectorField& x, const Tensor11& t);
VectorField lie_derivative(const VectorField& x, const VectorField& y);
/// N^i_{jk} = ([S d_j, S d_k] - S[S d_j, d_k] - S[d_j, S d_k])^i
Components3 nijenhuis(const Tensor11& s);
/// J^{ijk} = cyclic sum of Lambda^{il} d_l Lambda^{jk}
Components3 jacobiator(const Bivector& l);
/// w-flat: w(X, .)_j = X^i w_ij
DiffForm flat(const DiffForm& w, const VectorField& x);

/// Forward and inverse coordinate expressions of a diffeomorphism between
/// two charts. `forward` gives dst coordinates in src coordinates and
/// `inverse` the src coordinates in dst coordinates.
class Diffeo {
 public:
  Diffeo() = default;
  /// Validates inverse o forward and forward o inverse at sample points and
  /// a nonsingular Jacobian; throws NotInverse / SingularJacobian.
  Diffeo(Chart src, Chart dst, std::vector<Expr> forward, std::vector<Expr> inverse,
         const Sampling& s = {});
  static Diffeo identity(const Chart& chart);

  const Chart& src() const { return src_; }
  const Chart& dst() const { return dst_; }
  const std::vector<Expr>& forward() const { return forward_; }
  const std::vector<Expr>& inverse_map() const { return inverse_; }
  Diffeo inverse() const;

  /// Substitutes dst coordinates in an expression on dst: f o phi.
  Expr pull(const Expr& f_on_dst) const;
  /// Substitutes src coordinates in an expression on src: g o phi^{-1}.
  Expr push(const Expr& g_on_src) const;
  /// d phi^a / d x^i in src coordinates.
  Matrix jacobian() const;

 private:
  struct Unchecked {};
  Diffeo(Unchecked, Chart src, Chart dst, std::vector<Expr> forward, std::vector<Expr> inverse);
  Chart src_;
  Chart dst_;
  std::vector<Expr> forward_;
  std::vector<Expr> inverse_;
};

/// phi o psi (psi applied first).
Diffeo compose(const Diffeo& phi, const Diffeo& psi, const Sampling& s = {});

VectorField pushforward(const Diffeo& phi, const VectorField& x);
DiffForm pullback(const Diffeo& phi, const DiffForm& w);
/// (D phi)^{-1} (T o phi) D phi, inverse Jacobian by adjugate/determinant.
Tensor11 pullback(const Diffeo& phi, const Tensor11& t, const Sampling& s = {});
/// Pullback of a form on `target` along an arbitrary smooth map whose
/// components are expressions on `source` (embeddings, fiber derivatives).
DiffForm pullback_map(const Chart& source, const std::vector<Expr>& map, const DiffForm& w);

// Symbolic linear algebra.
Matrix jacobian(const std::vector<Expr>& f, const std::vector<std::string>& vars);
Matrix transpose(const Matrix& m);
Matrix multiply(const Matrix& a, const Matrix& b);
Expr determinant(const Matrix& m);
Matrix adjugate(const Matrix& m);
/// Solves A x = b by Gaussian elimination; a pivot is accepted only if it is
/// certified nonzero by sampling. Returns false when no pivot exists.
bool solve_linear(Matrix a, std::vector<Expr> b, std::vector<Expr>& x, const Sampling& s);
Eigen::MatrixXd evaluate(const Matrix& m, const sym::EvalPoint& p);
int numeric_rank(const Matrix& m, const sym::EvalPoint& p, double tol = 1e-9);

// Component-wise verification.
CheckResult check_equal(const VectorField& a, const VectorField& b, const Sampling& s);
CheckResult check_equal(const DiffForm& a, const DiffForm& b, const Sampling& s);
CheckResult check_equal(const Tensor11& a, const Tensor11& b, const Sampling& s);
CheckResult check_equal(const Bivector& a, const Bivector& b, const Sampling& s);
CheckResult check_zero(const VectorField& x, const Sampling& s);
CheckResult check_zero(const DiffForm& w, const Sampling& s);
CheckResult check_zero(const Tensor11& t, const Sampling& s);
CheckResult check_zero(const Components3& c, const Sampling& s);

std::string to_string(const VectorField& x);
std::string to_string(const DiffForm& w);
std::string to_string(const Tensor11& t);
std::string to_string(const Bivector& l);

}  // namespace geomech::calc
