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

// Hamiltonian and Poisson formalism: Hamiltonian vector fields through the
// symplectic form and through the Poisson bivector, Lie-Poisson structures,
// and alternative invariant structures (T_phi, w_f, recursion operators,
// compatibility of Poisson pairs).
//
// Convention: w = dq^i ^ dp_i, Lambda = d/dq^i ^ d/dp_i, so that
// i_{X_H} w = dH and X_H = Lambda#(dH) give qdot = dH/dp, pdot = -dH/dq.

#include "geomech/geomcalc.hpp"

namespace geomech::hamilton {

using calc::Bivector;
using calc::Chart;
using calc::DiffForm;
using calc::Tensor11;
using calc::VectorField;
using sym::CheckResult;
using sym::Expr;
using sym::Rational;
using sym::Sampling;

struct CanonicalCotangent {
  Chart chart;
  DiffForm theta;   // p_i dq^i
  DiffForm omega;   // dq^i ^ dp_i = -d theta
  Bivector Lambda;  // d/dq^i ^ d/dp_i
  VectorField delta;  // p_i d/dp_i
};

/// Chart (q, p) for m = 1, else (q1..qm, p1..pm).
CanonicalCotangent canonical_cotangent(int m);
/// Same objects on an even-dimensional chart (positions first).
CanonicalCotangent canonical_cotangent(const Chart& chart);

struct HamiltonianSystem {
  Chart chart;
  Expr H;
  DiffForm omega;
  Bivector Lambda;
};

HamiltonianSystem canonical_system(const Chart& chart, const Expr& h);
/// Lambda o w = identity.
CheckResult check_inverse_pair(const HamiltonianSystem& sys, const Sampling& s = {});

/// Solves i_X w = dH. Throws DegenerateOmega.
VectorField hamiltonian_vf(const HamiltonianSystem& sys, const Sampling& s = {});
/// Lambda#(dH).
VectorField poisson_vf(const HamiltonianSystem& sys);

/// {f, g} = Lambda^{ij} d_i f d_j g
Expr poisson_bracket(const Expr& f, const Expr& g, const Bivector& l);

/// Structure constants [e_i, e_j] = c^k_ij e_k.
class StructureConstants {
 public:
  explicit StructureConstants(int dim);
  int dim() const { return dim_; }
  const Rational& operator()(int k, int i, int j) const;
  /// Sets c^k_ij and c^k_ji = -c^k_ij.
  void set(int k, int i, int j, const Rational& value);
  /// Throws BadStructureConstants naming the offending indices.
  void validate() const;

 private:
  int dim_;
  std::vector<Rational> c_;
};

/// so(3): c^k_ij = epsilon_ijk.
StructureConstants so3_constants();

/// Lambda^{ij}(xi) = c^k_ij xi_k on the chart (xi1..xin).
Bivector lie_poisson(const StructureConstants& sc);

/// T = Lambda# o Omega-flat, T^i_j = Lambda^{ik} Omega_jk.
Tensor11 t_phi(const Bivector& l, const DiffForm& omega_phi);

/// d_T f = df o T
DiffForm d_T(const Expr& f, const Tensor11& t);
/// w_f = d d_T f
DiffForm omega_from_constant(const Expr& f, const Tensor11& t);

/// L_Gamma of the argument vanishes (Gamma(f) = 0 for scalars).
CheckResult invariance_check(const VectorField& gamma, const Expr& f, const Sampling& s = {});
CheckResult invariance_check(const VectorField& gamma, const DiffForm& w, const Sampling& s = {});
CheckResult invariance_check(const VectorField& gamma, const Tensor11& t, const Sampling& s = {});

/// N with w2(N X, Y) = w1(X, Y), i.e. matrix W2^{-1} W1. Throws
/// DegenerateOmega.
Tensor11 recursion_operator(const DiffForm& w1, const DiffForm& w2, const Sampling& s = {});

/// tr(N^k) for k = 1..k_max.
std::vector<Expr> trace_invariants(const Tensor11& n, int k_max);

/// jacobiator(Lambda1 + Lambda2) == 0. Throws NotPoisson when either input
/// is not Poisson.
CheckResult magri_compatible(const Bivector& l1, const Bivector& l2, const Sampling& s = {});

}  // namespace geomech::hamilton
