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

#include "geomech/tulczyjew.hpp"

#include <algorithm>

namespace geomech::tulczyjew {
namespace {

Chart prefixed(const std::string& name, const Chart& base, const std::string& prefix) {
  std::vector<std::string> coords = base.coords();
  for (const auto& c : base.coords()) coords.push_back(prefix + c);
  return Chart(name, coords);
}

void require_even(const Chart& c) {
  if (c.dim() % 2 != 0) throw OddDimension("chart '" + c.name() + "' is odd-dimensional");
}

std::vector<Expr> fiber_map(const Chart& tangent, const Expr& lagrangian) {
  require_even(tangent);
  std::size_t m = tangent.dim() / 2;
  std::vector<Expr> out;
  for (std::size_t i = 0; i < m; ++i) out.push_back(tangent.coord(i));
  for (std::size_t i = 0; i < m; ++i) out.push_back(sym::differentiate(lagrangian, tangent.coords()[m + i]));
  return out;
}

}  // namespace

Chart tt_star_chart(const Chart& cotangent) {
  require_even(cotangent);
  return prefixed("TT*Q", cotangent, "v");
}

Chart tt_star_chart(int m) { return tt_star_chart(hamilton::canonical_cotangent(m).chart); }

Chart t_star_t_chart(const Chart& tangent) {
  require_even(tangent);
  return prefixed("T*TQ", tangent, "p");
}

Chart t_star_t_chart(int m) { return t_star_t_chart(tangent::canonical_structure(m).chart); }

DiffForm tt_star_form(const Chart& c) {
  // dq^dvp + dvq^dp
  std::size_t m = c.dim() / 4;
  DiffForm w(c, 2);
  for (std::size_t i = 0; i < m; ++i) {
    w.add({static_cast<int>(i), static_cast<int>(3 * m + i)}, Expr(1));
    w.add({static_cast<int>(2 * m + i), static_cast<int>(m + i)}, Expr(1));
  }
  return w;
}

DiffForm t_star_t_form(const Chart& c) {
  // dq^dpq + dv^dpv
  std::size_t m = c.dim() / 4;
  DiffForm w(c, 2);
  for (std::size_t i = 0; i < m; ++i) {
    w.add({static_cast<int>(i), static_cast<int>(2 * m + i)}, Expr(1));
    w.add({static_cast<int>(m + i), static_cast<int>(3 * m + i)}, Expr(1));
  }
  return w;
}

Diffeo tau(int m) {
  Chart src = tt_star_chart(m);
  Chart dst = t_star_t_chart(m);
  std::size_t n = static_cast<std::size_t>(m);
  std::vector<Expr> fwd(4 * n);
  std::vector<Expr> inv(4 * n);
  for (std::size_t i = 0; i < n; ++i) {
    // (q, p, vq, vp) -> (q, v = vq, pq = vp, pv = p)
    fwd[i] = src.coord(i);
    fwd[n + i] = src.coord(2 * n + i);
    fwd[2 * n + i] = src.coord(3 * n + i);
    fwd[3 * n + i] = src.coord(n + i);
    inv[i] = dst.coord(i);
    inv[n + i] = dst.coord(3 * n + i);
    inv[2 * n + i] = dst.coord(n + i);
    inv[3 * n + i] = dst.coord(2 * n + i);
  }
  return Diffeo(src, dst, fwd, inv);
}

ImplicitEquation::ImplicitEquation(Chart ambient, Chart parameters, std::vector<Expr> embedding)
    : ambient_(std::move(ambient)), parameters_(std::move(parameters)), embedding_(std::move(embedding)) {
  if (ambient_.dim() != embedding_.size() || ambient_.dim() != 2 * parameters_.dim()) {
    throw DimensionMismatch("implicit equation: ambient dimension " + std::to_string(ambient_.dim()) +
                            ", parameters " + std::to_string(parameters_.dim()) + ", embedding " +
                            std::to_string(embedding_.size()));
  }
  const auto& params = parameters_.coords();
  for (const auto& e : embedding_) {
    for (const auto& name : sym::free_symbols(e)) {
      const auto& amb = ambient_.coords();
      bool ambient_only = std::find(amb.begin(), amb.end(), name) != amb.end() &&
                          std::find(params.begin(), params.end(), name) == params.end();
      if (ambient_only) throw UnknownSymbol(name);
    }
  }
}

RankReport rank_report(const ImplicitEquation& ie, const Sampling& s) {
  const auto& e = ie.embedding();
  calc::Matrix j = calc::jacobian(e, ie.parameters().coords());
  calc::Matrix base(j.begin(), j.begin() + static_cast<std::ptrdiff_t>(j.size() / 2));
  RankReport out;
  out.expected = static_cast<int>(ie.parameters().dim());
  out.embedding_rank = out.expected;
  out.base_rank = out.expected;
  std::vector<Expr> all = e;
  for (const auto& row : j) all.insert(all.end(), row.begin(), row.end());
  for (const auto& p : sym::sample_points(all, s.samples, s)) {
    int r = calc::numeric_rank(j, p);
    int b = calc::numeric_rank(base, p);
    if (r < out.embedding_rank || (b < out.base_rank && !out.witness)) out.witness = p;
    out.embedding_rank = std::min(out.embedding_rank, r);
    out.base_rank = std::min(out.base_rank, b);
  }
  return out;
}

ImplicitEquation one_form_submanifold(const DiffForm& alpha) {
  if (alpha.degree() != 1) throw ZeroDegree("one_form_submanifold expects a 1-form");
  const Chart& tq = alpha.chart();
  require_even(tq);
  std::size_t m = tq.dim() / 2;
  Chart ambient = tt_star_chart(static_cast<int>(m));
  std::vector<Expr> e(4 * m);
  for (std::size_t i = 0; i < m; ++i) {
    e[i] = tq.coord(i);
    e[m + i] = alpha.component({static_cast<int>(m + i)});
    e[2 * m + i] = tq.coord(m + i);
    e[3 * m + i] = alpha.component({static_cast<int>(i)});
  }
  return ImplicitEquation(ambient, tq, e);
}

ImplicitEquation el_submanifold(const Chart& tangent, const Expr& lagrangian) {
  return one_form_submanifold(DiffForm::exact(tangent, lagrangian));
}

CheckResult isotropy_check(const ImplicitEquation& ie, const DiffForm& omega, const Sampling& s) {
  calc::require_same_chart(ie.ambient(), omega.chart());
  if (omega.degree() != 2) throw ZeroDegree("isotropy check expects a 2-form");
  RankReport rank = rank_report(ie, s);
  if (!rank.full()) {
    throw RankDeficientEmbedding("embedding has rank " + std::to_string(rank.embedding_rank) + " < " +
                                     std::to_string(rank.expected),
                                 rank.witness ? rank.witness->values : PointValues{});
  }
  return calc::check_zero(calc::pullback_map(ie.parameters(), ie.embedding(), omega), s);
}

CheckResult satisfied_by(const ImplicitEquation& ie, const VectorField& gamma, const Sampling& s) {
  calc::require_same_chart(ie.parameters(), gamma.chart());
  const auto& e = ie.embedding();
  std::size_t n = e.size() / 2;
  std::vector<CheckResult> checks;
  for (std::size_t i = 0; i < n; ++i) {
    checks.push_back(sym::check_equal(gamma.apply(e[i]), e[n + i], s, ie.ambient().coords()[n + i]));
  }
  return sym::combine(checks);
}

FiberDerivative fiber_derivative(const Chart& tangent, const Expr& lagrangian, const Sampling& s) {
  FiberDerivative out;
  out.map = fiber_map(tangent, lagrangian);
  out.invertibility = lagrange::regularity({tangent::canonical_structure(tangent), lagrangian}, s);
  return out;
}

PulledBackStructures pullback_structures(const Chart& tangent, const Expr& lagrangian) {
  std::vector<Expr> fl = fiber_map(tangent, lagrangian);
  hamilton::CanonicalCotangent tq_star = hamilton::canonical_cotangent(static_cast<int>(tangent.dim() / 2));
  DiffForm big_omega = Expr(-1) * tq_star.omega;
  return {calc::pullback_map(tangent, fl, tq_star.theta), calc::pullback_map(tangent, fl, big_omega)};
}

ImplicitEquation hamiltonian_graph(const hamilton::HamiltonianSystem& sys, const Sampling& s) {
  VectorField x = hamilton::hamiltonian_vf(sys, s);
  std::vector<Expr> e;
  for (std::size_t i = 0; i < sys.chart.dim(); ++i) e.push_back(sys.chart.coord(i));
  e.insert(e.end(), x.components().begin(), x.components().end());
  return ImplicitEquation(tt_star_chart(sys.chart), sys.chart, e);
}

}  // namespace geomech::tulczyjew
