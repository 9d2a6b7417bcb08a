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

#include "geomech/weylnum.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "geomech/errors.hpp"

namespace geomech::weyl {

DenseOp::DenseOp(Eigen::MatrixXcd m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw DimensionMismatch("operator matrix is not square");
  for (Eigen::Index i = 0; i < m_.size(); ++i) {
    const Complex& z = m_.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("non-finite operator entry");
  }
}

DenseOp DenseOp::identity(int dim) { return DenseOp(Eigen::MatrixXcd::Identity(dim, dim)); }

DenseOp DenseOp::adjoint() const { return DenseOp(m_.adjoint()); }

DenseOp DenseOp::pow(int n) const {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(m_.rows(), m_.cols());
  for (int i = 0; i < n; ++i) out = out * m_;
  return DenseOp(out);
}

bool DenseOp::is_unitary(double tol) const {
  return max_deviation(adjoint() * *this, identity(dim())) <= tol;
}

bool DenseOp::is_self_adjoint(double tol) const { return max_deviation(adjoint(), *this) <= tol; }

namespace {

void require_same_dim(const DenseOp& a, const DenseOp& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("operator dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
  }
}

}  // namespace

DenseOp operator*(const DenseOp& a, const DenseOp& b) {
  require_same_dim(a, b);
  return DenseOp(a.matrix() * b.matrix());
}

DenseOp operator+(const DenseOp& a, const DenseOp& b) {
  require_same_dim(a, b);
  return DenseOp(a.matrix() + b.matrix());
}

DenseOp operator-(const DenseOp& a, const DenseOp& b) {
  require_same_dim(a, b);
  return DenseOp(a.matrix() - b.matrix());
}

DenseOp operator*(Complex c, const DenseOp& a) { return DenseOp(c * a.matrix()); }

double max_deviation(const DenseOp& a, const DenseOp& b) {
  require_same_dim(a, b);
  if (a.dim() == 0) return 0.0;
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

Complex root_of_unity(int d, int k) {
  // Reduce first so large k keeps full accuracy.
  int r = ((k % d) + d) % d;
  return std::polar(1.0, 2.0 * std::numbers::pi * r / d);
}

ClockShift clock_shift(int d) {
  if (d < 2) throw DimensionMismatch("clock and shift need d >= 2");
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(d, d);
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    u(k, k) = root_of_unity(d, k);
    v((k + 1) % d, k) = 1.0;
  }
  return {DenseOp(u), DenseOp(v), root_of_unity(d)};
}

CheckResult weyl_commutation_check(const DenseOp& u, const DenseOp& v, Complex phase, double tol) {
  require_same_dim(u, v);
  double dev = max_deviation(u * v, phase * (v * u));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", dev);
  if (dev <= tol) return CheckResult::pass(std::string("max deviation ") + buf);
  return CheckResult::fail(std::string("UV != phase*VU, max deviation ") + buf, buf);
}

Fock truncated_fock(int n_max) {
  if (n_max < 2) throw DimensionMismatch("truncated Fock space needs n_max >= 2");
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n_max, n_max);
  for (int n = 1; n < n_max; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  DenseOp op(a);
  DenseOp dag = op.adjoint();
  return {op, dag, dag * op};
}

std::vector<MatrixEntry> ccr_defect(const Fock& f, double tol) {
  Eigen::MatrixXcd c = (f.a * f.a_dag - f.a_dag * f.a).matrix();
  c -= Eigen::MatrixXcd::Identity(c.rows(), c.cols());
  std::vector<MatrixEntry> out;
  for (int i = 0; i < c.rows(); ++i) {
    for (int j = 0; j < c.cols(); ++j) {
      if (std::abs(c(i, j)) > tol) out.push_back({i, j, c(i, j) + (i == j ? 1.0 : 0.0)});
    }
  }
  return out;
}

Eigen::VectorXcd vacuum(int n_max) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n_max);
  v(0) = 1.0;
  return v;
}

Eigen::VectorXcd fock_state(int n, const DenseOp& a_dag, const Eigen::VectorXcd& vac) {
  if (vac.size() != a_dag.dim()) throw DimensionMismatch("vacuum and operator dimensions differ");
  if (n < 0 || n >= a_dag.dim()) {
    throw TruncationOverflow("state |" + std::to_string(n) + "> needs n < " + std::to_string(a_dag.dim()));
  }
  Eigen::VectorXcd v = vac;
  for (int k = 0; k < n; ++k) v = a_dag.matrix() * v / std::sqrt(static_cast<double>(k + 1));
  return v;
}

namespace {

sym::EvalPoint at_q(double q) { return sym::EvalPoint{{{"q", q}}, {}}; }

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

NonlinearStructure::NonlinearStructure(Expr k, std::string variable, std::optional<Expr> closed_inverse,
                                       double range)
    : k_(std::move(k)), closed_inverse_(std::move(closed_inverse)) {
  for (const auto& s : sym::free_symbols(k_)) {
    if (s != variable) throw UnknownSymbol(s);
  }
  if (!sym::free_functions(k_).empty()) throw UnknownSymbol(*sym::free_functions(k_).begin());
  Expr q = Expr::symbol("q");
  forward_ = q * sym::substitute(k_, {{variable, sym::abs(q)}});
  factor_ = sym::differentiate(forward_, "q");
  if (closed_inverse_) {
    for (const auto& s : sym::free_symbols(*closed_inverse_)) {
      if (s != "Q") throw UnknownSymbol(s);
    }
  }
  const int steps = 2000;
  int last_sign = 0;
  for (int i = 0; i <= steps; ++i) {
    double x = -range + 2.0 * range * i / steps;
    double f = sym::eval(factor_, at_q(x));
    int sign = f > 1e-12 ? 1 : (f < -1e-12 ? -1 : 0);
    if (sign == 0 || (last_sign != 0 && sign != last_sign)) {
      throw SingularJacobian("K(|q|) + q K'(|q|) sign(q) vanishes near q = " + fmt(x), {{"q", x}});
    }
    last_sign = sign;
    if (closed_inverse_) {
      double y = sym::eval(*closed_inverse_, sym::EvalPoint{{{"Q", forward(x)}}, {}});
      if (std::abs(y - x) > 1e-9 * std::max(1.0, std::abs(x))) {
        throw NotInverse("closed-form inverse disagrees at q = " + fmt(x), {{"q", x}});
      }
    }
  }
}

double NonlinearStructure::forward(double q) const { return sym::eval(forward_, at_q(q)); }

PhasePoint NonlinearStructure::forward(const PhasePoint& z) const { return {forward(z.q), z.p}; }

double NonlinearStructure::inverse(double target, const std::vector<double>& candidates) const {
  auto fail = [&](const std::string& why) {
    return InversionFailure("cannot invert q K(|q|) = " + fmt(target) + ": " + why, {{"Q", target}});
  };
  if (!std::isfinite(target)) throw fail("target is not finite");
  for (double c : candidates) {
    if (forward(c) == target) return c;
  }
  if (target == 0.0) return 0.0;
  if (closed_inverse_) {
    try {
      return sym::eval(*closed_inverse_, sym::EvalPoint{{{"Q", target}}, {}});
    } catch (const DomainError& e) {
      throw fail(e.what());
    }
  }
  // The forward map is odd and strictly monotone: walk the half-line whose
  // image has the sign of the target.
  double dir = (target > 0) == (forward(1.0) > 0) ? 1.0 : -1.0;
  double mag = std::abs(target);
  auto residual = [&](double t) {
    try {
      return std::abs(forward(dir * t)) - mag;
    } catch (const DomainError& e) {
      throw fail(e.what());
    }
  };
  const int max_iter = 200;
  double lo = 0.0;
  double hi = 1.0;
  int grow = 0;
  while (residual(hi) < 0.0) {
    lo = hi;
    hi *= 2.0;
    if (++grow > max_iter || !std::isfinite(hi)) throw fail("no bracketing interval");
  }
  for (int i = 0; i < max_iter; ++i) {
    double mid = lo + (hi - lo) / 2.0;
    if (mid <= lo || mid >= hi) break;
    if (residual(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double q = dir * (std::abs(residual(lo)) < std::abs(residual(hi)) ? lo : hi);
  // A flat branch (the target at or beyond a horizontal asymptote) can match
  // in floating point at an absurd q; reject roots the data cannot pin down.
  double slope = std::abs(sym::eval(factor_, at_q(q)));
  double spread = std::numeric_limits<double>::epsilon() * mag / slope;
  if (!(spread <= 1e-9 * std::max(1.0, std::abs(q)))) throw fail("target outside the range of the map");
  return q;
}

PhasePoint nonlinear_add(const NonlinearStructure& s, const PhasePoint& z1, const PhasePoint& z2) {
  double target = s.forward(z1.q) + s.forward(z2.q);
  return {s.inverse(target, {z1.q, z2.q, 0.0}), z1.p + z2.p};
}

PhasePoint nonlinear_scale(const NonlinearStructure& s, double a, const PhasePoint& z) {
  double target = a * s.forward(z.q);
  return {s.inverse(target, {z.q, 0.0}), a * z.p};
}

TranslationReport nonlinear_translation_action(const NonlinearStructure& s, double beta,
                                               const std::vector<double>& grid,
                                               std::optional<double> beta_prime, double tol) {
  TranslationReport out;
  out.beta = beta;
  out.beta_prime = beta_prime.value_or(beta);
  double combined = nonlinear_add(s, {beta, 0.0}, {out.beta_prime, 0.0}).q;
  for (double x : grid) {
    double once = nonlinear_add(s, {x, 0.0}, {beta, 0.0}).q;
    out.table.emplace_back(x, once);
    double twice = nonlinear_add(s, {once, 0.0}, {out.beta_prime, 0.0}).q;
    double direct = nonlinear_add(s, {x, 0.0}, {combined, 0.0}).q;
    out.group_law_residual = std::max(out.group_law_residual, std::abs(twice - direct));
  }
  out.passed = out.group_law_residual <= tol;
  return out;
}

std::vector<double> uniform_grid(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 0; i <= n; ++i) out.push_back(lo + (hi - lo) * i / n);
  return out;
}

}  // namespace geomech::weyl
