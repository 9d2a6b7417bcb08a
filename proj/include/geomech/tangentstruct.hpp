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

// Tangent-bundle structures (S, Delta) on an even-dimensional chart:
// axiom verification, the second-order condition S(Gamma) = Delta,
// transport along diffeomorphisms, d_S, and lifts of base curves.

#include <string>
#include <utility>
#include <vector>

#include "geomech/geomcalc.hpp"

namespace geomech::tangent {

using calc::Chart;
using calc::DiffForm;
using calc::Diffeo;
using calc::Tensor11;
using calc::VectorField;
using sym::CheckResult;
using sym::Expr;
using sym::Sampling;

struct TangentStructure {
  Chart chart;
  Tensor11 S;
  VectorField delta;
};

/// S = d/dv^i (x) dq^i, Delta = v^i d/dv^i on (q1..qm, v1..vm); for m = 1
/// the coordinates are (q, v).
TangentStructure canonical_structure(int m);
/// Canonical structure on an even-dimensional chart whose first half are
/// positions and second half velocities.
TangentStructure canonical_structure(const Chart& chart);

/// Per-axiom outcome, in the order S^2 = 0, ker S = im S, N_S = 0,
/// L_Delta S = -S, S(Delta) = 0.
struct AxiomReport {
  std::vector<std::pair<std::string, CheckResult>> axioms;
  bool all_passed() const;
  const CheckResult& at(const std::string& name) const;
  /// Names of failing axioms.
  std::vector<std::string> failures() const;
};

inline const char* const kSquareZero = "S^2 = 0";
inline const char* const kKernelImage = "ker S = im S";
inline const char* const kNijenhuis = "N_S = 0";
inline const char* const kHomogeneity = "L_Delta S = -S";
inline const char* const kVerticalDilation = "S(Delta) = 0";

/// Throws OddDimension.
AxiomReport verify_axioms(const TangentStructure& ts, const Sampling& s = {});

/// S(Gamma) == Delta.
CheckResult is_sode(const VectorField& gamma, const TangentStructure& ts, const Sampling& s = {});

/// Structure seen through phi: S' = (phi^{-1})^* S, Delta' = phi_* Delta.
TangentStructure transport_structure(const TangentStructure& ts, const Diffeo& phi,
                                     const Sampling& s = {});

/// (d_S f)(X) = df(S X).
DiffForm d_S(const Expr& f, const TangentStructure& ts);

/// A curve t -> gamma(t) in the base chart.
struct CurveSpec {
  Chart chart;
  std::string time;
  std::vector<Expr> components;
};

struct CurveLift {
  std::vector<Expr> first;   // (gamma, gamma')
  std::vector<Expr> second;  // (gamma, gamma', gamma', gamma'')
};

CurveLift lift_curve(const CurveSpec& curve);

/// d(t gamma)/dt - Gamma o t gamma == 0 as functions of t. Gamma lives on a
/// chart whose first n coordinates are positions and last n velocities.
/// Throws DimensionMismatch.
CheckResult check_integral_curve(const CurveSpec& curve, const VectorField& gamma, int t_samples,
                                 const Sampling& s = {});

}  // namespace geomech::tangent
