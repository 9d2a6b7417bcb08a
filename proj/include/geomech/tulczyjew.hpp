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

// The Tulczyjew isomorphism and implicit equations on TT*Q.
//
// Coordinate conventions:
//   TT*Q  (q, p, vq, vp)   symplectic form dq^dvp + dvq^dp
//   T*TQ  (q, v, pq, pv)   symplectic form dq^dpq + dv^dpv
//   tau   (q, p, vq, vp) -> (q, vq, vp, p)
// Velocity coordinates on TT*Q are "v" + base name; momenta on T*TQ are
// "p" + base name.

#include <optional>

#include "geomech/hamiltonian.hpp"
#include "geomech/lagrangian.hpp"

namespace geomech::tulczyjew {

using calc::Chart;
using calc::DiffForm;
using calc::Diffeo;
using calc::VectorField;
using sym::CheckResult;
using sym::Expr;
using sym::Sampling;

/// TT*Q chart over a cotangent chart (q.., p..).
Chart tt_star_chart(const Chart& cotangent);
Chart tt_star_chart(int m);
/// T*TQ chart over a tangent chart (q.., v..).
Chart t_star_t_chart(const Chart& tangent);
Chart t_star_t_chart(int m);

DiffForm tt_star_form(const Chart& tt_star);
DiffForm t_star_t_form(const Chart& t_star_t);

Diffeo tau(int m);

/// A submanifold of an ambient chart given as the image of an embedding.
class ImplicitEquation {
 public:
  /// Throws DimensionMismatch unless dim ambient = 2 dim parameters =
  /// embedding size, UnknownSymbol if a component uses an ambient
  /// coordinate that is not a parameter.
  ImplicitEquation(Chart ambient, Chart parameters, std::vector<Expr> embedding);

  const Chart& ambient() const { return ambient_; }
  const Chart& parameters() const { return parameters_; }
  const std::vector<Expr>& embedding() const { return embedding_; }

 private:
  Chart ambient_;
  Chart parameters_;
  std::vector<Expr> embedding_;
};

struct RankReport {
  int expected = 0;
  int embedding_rank = 0;  // minimum over sample points
  int base_rank = 0;       // rank of the projection to the first half
  std::optional<sym::EvalPoint> witness;

  bool full() const { return embedding_rank == expected; }
  /// True when the submanifold is locally a graph over the base.
  bool is_graph() const { return base_rank == expected; }
};

RankReport rank_report(const ImplicitEquation& ie, const Sampling& s = {});

/// Image of a one-form alpha on (q, v) in TT*Q: (q, alpha_v, v, alpha_q).
/// The ambient chart is tt_star_chart(m) whatever the tangent names are.
ImplicitEquation one_form_submanifold(const DiffForm& alpha);
/// Euler-Lagrange submanifold: (q, dL/dv, v, dL/dq).
ImplicitEquation el_submanifold(const Chart& tangent, const Expr& lagrangian);

/// Pullback of `omega` along the embedding vanishes. Throws
/// RankDeficientEmbedding, ChartMismatch, ZeroDegree (wrong degree).
CheckResult isotropy_check(const ImplicitEquation& ie, const DiffForm& omega,
                           const Sampling& s = {});

/// Along the flow of `gamma` on the parameter chart, the base part of the
/// embedding moves with the velocity part: gamma(e_i) = e_{n+i}.
CheckResult satisfied_by(const ImplicitEquation& ie, const VectorField& gamma,
                         const Sampling& s = {});

struct FiberDerivative {
  std::vector<Expr> map;  // (q, dL/dv)
  lagrange::Regularity invertibility;
};

FiberDerivative fiber_derivative(const Chart& tangent, const Expr& lagrangian,
                                 const Sampling& s = {});

struct PulledBackStructures {
  DiffForm theta_L;
  /// Pullback of dp^dq, so Omega_L = d theta_L.
  DiffForm Omega_L;
};

PulledBackStructures pullback_structures(const Chart& tangent, const Expr& lagrangian);

/// (q, p) -> (q, p, X_H) in TT*Q.
ImplicitEquation hamiltonian_graph(const hamilton::HamiltonianSystem& sys,
                                   const Sampling& s = {});

}  // namespace geomech::tulczyjew
