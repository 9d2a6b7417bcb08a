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

#include "geomech/geomcalc.hpp"

namespace geomech::calc {
namespace {

std::map<std::string, Expr> binding(const std::vector<std::string>& names,
                                    const std::vector<Expr>& values) {
  std::map<std::string, Expr> m;
  for (std::size_t i = 0; i < names.size(); ++i) m[names[i]] = values[i];
  return m;
}

/// Checks that `outer` undoes `inner`: outer_i(inner(x)) == x_i.
void require_inverse(const Chart& from, const Chart& mid, const std::vector<Expr>& inner,
                     const std::vector<Expr>& outer, const Sampling& s) {
  auto m = binding(mid.coords(), inner);
  for (std::size_t i = 0; i < from.dim(); ++i) {
    Expr composed = sym::substitute(outer[i], m);
    sym::EqualResult r = sym::equal(composed, from.coord(i), s);
    if (r.verdict == sym::Verdict::NotEqual) {
      throw NotInverse("maps between '" + from.name() + "' and '" + mid.name() +
                           "' are not mutually inverse in " + from.coords()[i],
                       r.witness->values);
    }
    if (r.verdict == sym::Verdict::Undecided) {
      throw NotInverse("no admissible sample points to compare maps between '" + from.name() +
                           "' and '" + mid.name() + "'",
                       {});
    }
  }
}

}  // namespace

Diffeo::Diffeo(Unchecked, Chart src, Chart dst, std::vector<Expr> forward,
               std::vector<Expr> inverse)
    : src_(std::move(src)), dst_(std::move(dst)), forward_(std::move(forward)),
      inverse_(std::move(inverse)) {}

Diffeo::Diffeo(Chart src, Chart dst, std::vector<Expr> forward, std::vector<Expr> inverse,
               const Sampling& s)
    : Diffeo(Unchecked{}, std::move(src), std::move(dst), std::move(forward), std::move(inverse)) {
  if (src_.dim() != dst_.dim() || forward_.size() != dst_.dim() || inverse_.size() != src_.dim()) {
    throw DimensionMismatch("diffeomorphism between charts of different dimension");
  }
  require_inverse(src_, dst_, forward_, inverse_, s);
  require_inverse(dst_, src_, inverse_, forward_, s);
  Expr det = determinant(jacobian());
  for (const auto& p : sym::sample_points({det}, s.samples, s)) {
    if (std::fabs(sym::eval(det, p)) < 1e-12) {
      throw SingularJacobian("Jacobian of the map from '" + src_.name() + "' is singular",
                             p.values);
    }
  }
}

Diffeo Diffeo::identity(const Chart& chart) {
  std::vector<Expr> id;
  for (std::size_t i = 0; i < chart.dim(); ++i) id.push_back(chart.coord(i));
  return Diffeo(Unchecked{}, chart, chart, id, id);
}

Diffeo Diffeo::inverse() const { return Diffeo(Unchecked{}, dst_, src_, inverse_, forward_); }

Expr Diffeo::pull(const Expr& f) const { return sym::substitute(f, binding(dst_.coords(), forward_)); }

Expr Diffeo::push(const Expr& g) const { return sym::substitute(g, binding(src_.coords(), inverse_)); }

Matrix Diffeo::jacobian() const { return calc::jacobian(forward_, src_.coords()); }

Diffeo compose(const Diffeo& phi, const Diffeo& psi, const Sampling& s) {
  require_same_chart(psi.dst(), phi.src());
  std::vector<Expr> fwd;
  for (const auto& f : phi.forward()) fwd.push_back(psi.pull(f));
  std::vector<Expr> inv;
  for (const auto& g : psi.inverse_map()) inv.push_back(phi.push(g));
  return Diffeo(psi.src(), phi.dst(), std::move(fwd), std::move(inv), s);
}

VectorField pushforward(const Diffeo& phi, const VectorField& x) {
  require_same_chart(phi.src(), x.chart());
  Matrix j = phi.jacobian();
  std::vector<Expr> out(x.dim());
  for (std::size_t a = 0; a < x.dim(); ++a) {
    std::vector<Expr> terms;
    for (std::size_t i = 0; i < x.dim(); ++i) terms.push_back(j[a][i] * x[i]);
    out[a] = phi.push(sym::add(std::move(terms)));
  }
  return VectorField(phi.dst(), std::move(out));
}

DiffForm pullback_map(const Chart& source, const std::vector<Expr>& map, const DiffForm& w) {
  const Chart& target = w.chart();
  if (map.size() != target.dim()) throw DimensionMismatch("map does not land in the form's chart");
  auto m = binding(target.coords(), map);
  std::vector<DiffForm> d;
  for (const auto& f : map) d.push_back(DiffForm::exact(source, f));
  DiffForm out(source, w.degree());
  for (const auto& [idx, c] : w.components()) {
    DiffForm piece = DiffForm::scalar(source, sym::substitute(c, m));
    for (int i : idx) piece = wedge(piece, d[i]);
    out = out + piece;
  }
  return out;
}

DiffForm pullback(const Diffeo& phi, const DiffForm& w) {
  require_same_chart(phi.dst(), w.chart());
  return pullback_map(phi.src(), phi.forward(), w);
}

Tensor11 pullback(const Diffeo& phi, const Tensor11& t, const Sampling& s) {
  require_same_chart(phi.dst(), t.chart());
  Matrix j = phi.jacobian();
  Expr det = determinant(j);
  sym::EqualResult zero = sym::equal(det, Expr(0), s);
  if (zero.verdict == sym::Verdict::Equal) {
    auto pts = sym::sample_points({det}, 1, s);
    throw SingularJacobian("Jacobian determinant vanishes identically",
                           pts.empty() ? PointValues{} : pts.front().values);
  }
  Matrix inv = adjugate(j);
  Expr inv_det = sym::pow(det, -1);
  for (auto& row : inv) {
    for (auto& e : row) e = inv_det * e;
  }
  Matrix tp = t.matrix();
  for (auto& row : tp) {
    for (auto& e : row) e = phi.pull(e);
  }
  return Tensor11(phi.src(), multiply(multiply(inv, tp), j));
}

}  // namespace geomech::calc
