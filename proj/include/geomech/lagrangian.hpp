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

// Intrinsic Lagrangian formalism on a tangent structure: Cartan forms,
// energy, regularity, and the Euler-Lagrange equation i_Gamma w_L = dE_L.

#include <optional>

#include "geomech/tangentstruct.hpp"

namespace geomech::lagrange {

using calc::DiffForm;
using calc::Diffeo;
using calc::VectorField;
using sym::Expr;
using sym::Sampling;
using tangent::TangentStructure;

struct LagrangianSystem {
  TangentStructure ts;
  Expr L;
};

/// theta_L = d_S L
DiffForm cartan_one_form(const LagrangianSystem& sys);
/// w_L = -d theta_L
DiffForm lagrangian_two_form(const LagrangianSystem& sys);
/// E_L = Delta(L) - L
Expr energy(const LagrangianSystem& sys);

/// Velocity Hessian d^2 L / dv^j dv^k; velocities are the last m chart
/// coordinates.
calc::Matrix velocity_hessian(const LagrangianSystem& sys);

struct Regularity {
  enum class Kind {
    Regular,        // det nonzero at every probed point
    SingularLocus,  // det generically nonzero but vanishes at `witness`
    Degenerate,     // det vanishes identically
  };
  Kind kind = Kind::Regular;
  Expr det;
  std::optional<sym::EvalPoint> witness;
};

/// Symbolic Hessian determinant plus a pointwise report: sampled points
/// decide degeneracy, a {-1, 0, 1} grid probes for a singular locus.
Regularity regularity(const LagrangianSystem& sys, const Sampling& s = {});
const char* to_string(Regularity::Kind kind);

/// Unique Gamma with i_Gamma w_L = dE_L. Throws DegenerateLagrangian.
VectorField el_solve(const LagrangianSystem& sys, const Sampling& s = {});

/// L_Gamma theta_L - dL
DiffForm el_residual(const LagrangianSystem& sys, const VectorField& gamma);

/// The same dynamics described on phi.dst: L' = L o phi^{-1} with the
/// transported tangent structure.
LagrangianSystem transform_description(const LagrangianSystem& sys, const Diffeo& phi,
                                       const Sampling& s = {});

}  // namespace geomech::lagrange
