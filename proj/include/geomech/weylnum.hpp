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

// Finite Weyl systems: clock and shift pairs, truncated Fock space and the
// nonlinear vector space structure (q, p) -> (q K(|q|), p). hbar = 1.

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "geomech/symexpr.hpp"

namespace geomech::weyl {

using Complex = std::complex<double>;
using sym::CheckResult;
using sym::Expr;

/// Square complex matrix with finite entries.
class DenseOp {
 public:
  DenseOp() = default;
  /// Throws DimensionMismatch (not square) or DomainError (non-finite entry).
  explicit DenseOp(Eigen::MatrixXcd m);
  static DenseOp identity(int dim);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }

  DenseOp adjoint() const;
  DenseOp pow(int n) const;

  bool is_unitary(double tol = 1e-12) const;
  bool is_self_adjoint(double tol = 1e-12) const;

 private:
  Eigen::MatrixXcd m_;
};

DenseOp operator*(const DenseOp& a, const DenseOp& b);
DenseOp operator+(const DenseOp& a, const DenseOp& b);
DenseOp operator-(const DenseOp& a, const DenseOp& b);
DenseOp operator*(Complex c, const DenseOp& a);
/// Largest entry of |a - b|; throws DimensionMismatch.
double max_deviation(const DenseOp& a, const DenseOp& b);

struct ClockShift {
  DenseOp U;  // diag(1, zeta, ..., zeta^(d-1))
  DenseOp V;  // V e_k = e_(k+1 mod d)
  Complex zeta;
};

/// Throws DimensionMismatch for d < 2.
ClockShift clock_shift(int d);
Complex root_of_unity(int d, int k = 1);

/// UV = phase VU within tol; the residual is the max deviation.
CheckResult weyl_commutation_check(const DenseOp& u, const DenseOp& v, Complex phase,
                                   double tol = 1e-12);

struct Fock {
  DenseOp a;
  DenseOp a_dag;
  DenseOp N;
};

/// a|n> = sqrt(n)|n-1> on span{|0>, ..., |n_max - 1>}. Throws
/// DimensionMismatch for n_max < 2.
Fock truncated_fock(int n_max);

struct MatrixEntry {
  int row = 0;
  int col = 0;
  Complex value;
};

/// Entries where [a, a_dag] differs from the identity by more than tol.
std::vector<MatrixEntry> ccr_defect(const Fock& f, double tol = 1e-12);

Eigen::VectorXcd vacuum(int n_max);
/// (a_dag)^n |0> / sqrt(n!). Throws TruncationOverflow when n >= dim.
Eigen::VectorXcd fock_state(int n, const DenseOp& a_dag, const Eigen::VectorXcd& vacuum);

struct PhasePoint {
  double q = 0.0;
  double p = 0.0;
  friend bool operator==(const PhasePoint& a, const PhasePoint& b) { return a.q == b.q && a.p == b.p; }
};

/// phi(q, p) = (q K(|q|), p) with K an expression in `variable`.
class NonlinearStructure {
 public:
  /// Checks K(|q|) + q K'(|q|) sign(q) != 0 on a grid of q in [-range,
  /// range]; throws SingularJacobian with the offending q, UnknownSymbol if
  /// K uses anything but `variable`. `closed_inverse`, if given, is an
  /// expression in Q for the inverse of Q = q K(|q|).
  explicit NonlinearStructure(Expr k, std::string variable = "u",
                              std::optional<Expr> closed_inverse = std::nullopt, double range = 4.0);

  const Expr& K() const { return k_; }
  /// q K(|q|) as an expression in q.
  const Expr& forward_expr() const { return forward_; }
  /// d/dq of the forward map: K(|q|) + q K'(|q|) sign(q).
  const Expr& symplectic_factor() const { return factor_; }

  double forward(double q) const;
  PhasePoint forward(const PhasePoint& z) const;
  /// Solves q K(|q|) = target. Candidates whose image equals the target
  /// exactly are returned as is. Throws InversionFailure.
  double inverse(double target, const std::vector<double>& candidates = {}) const;

 private:
  Expr k_;
  Expr forward_;
  Expr factor_;
  std::optional<Expr> closed_inverse_;
};

PhasePoint nonlinear_add(const NonlinearStructure& s, const PhasePoint& z1, const PhasePoint& z2);
PhasePoint nonlinear_scale(const NonlinearStructure& s, double a, const PhasePoint& z);

struct TranslationReport {
  double beta = 0.0;
  double beta_prime = 0.0;
  std::vector<std::pair<double, double>> table;  // x, x +phi beta
  double group_law_residual = 0.0;
  bool passed = false;
};

/// Tabulates x -> x +phi beta and compares (x +phi beta) +phi beta' with
/// x +phi (beta +phi beta') pointwise.
TranslationReport nonlinear_translation_action(const NonlinearStructure& s, double beta,
                                               const std::vector<double>& grid,
                                               std::optional<double> beta_prime = std::nullopt,
                                               double tol = 1e-9);

/// n + 1 equally spaced points from lo to hi.
std::vector<double> uniform_grid(double lo, double hi, int n);

}  // namespace geomech::weyl
