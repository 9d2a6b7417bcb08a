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

#include "geomech/geomcalc.hpp"

namespace geomech::calc {

DiffForm exterior_derivative(const DiffForm& w) {
  const Chart& chart = w.chart();
  if (w.degree() >= static_cast<int>(chart.dim())) {
    throw DegreeOverflow("d of a top-degree form");
  }
  DiffForm out(chart, w.degree() + 1);
  for (const auto& [idx, c] : w.components()) {
    for (std::size_t j = 0; j < chart.dim(); ++j) {
      Expr dc = sym::differentiate(c, chart.coords()[j]);
      if (dc.is_zero()) continue;
      MultiIndex full{static_cast<int>(j)};
      full.insert(full.end(), idx.begin(), idx.end());
      out.add(full, dc);
    }
  }
  return out;
}

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
  require_same_chart(a.chart(), b.chart());
  if (a.degree() + b.degree() > static_cast<int>(a.chart().dim())) {
    throw DegreeOverflow("wedge product exceeds the chart dimension");
  }
  DiffForm out(a.chart(), a.degree() + b.degree());
  for (const auto& [i, ca] : a.components()) {
    for (const auto& [j, cb] : b.components()) {
      MultiIndex full = i;
      full.insert(full.end(), j.begin(), j.end());
      out.add(full, ca * cb);
    }
  }
  return out;
}

DiffForm interior_product(const VectorField& x, const DiffForm& w) {
  require_same_chart(x.chart(), w.chart());
  if (w.degree() == 0) throw ZeroDegree("interior product of a 0-form");
  DiffForm out(w.chart(), w.degree() - 1);
  for (const auto& [idx, c] : w.components()) {
    for (std::size_t a = 0; a < idx.size(); ++a) {
      const Expr& xa = x[idx[a]];
      if (xa.is_zero()) continue;
      MultiIndex rest;
      for (std::size_t b = 0; b < idx.size(); ++b) {
        if (b != a) rest.push_back(idx[b]);
      }
      out.add(rest, (a % 2 == 0 ? xa : -xa) * c);
    }
  }
  return out;
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  require_same_chart(x.chart(), y.chart());
  std::vector<Expr> out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out[i] = x.apply(y[i]) - y.apply(x[i]);
  return VectorField(x.chart(), std::move(out));
}

DiffForm lie_derivative(const VectorField& x, const DiffForm& w) {
  require_same_chart(x.chart(), w.chart());
  if (w.degree() == 0) return DiffForm::scalar(w.chart(), x.apply(w.value()));
  DiffForm d_inner = exterior_derivative(interior_product(x, w));
  if (w.degree() == static_cast<int>(w.chart().dim())) return d_inner;
  return interior_product(x, exterior_derivative(w)) + d_inner;
}

Tensor11 lie_derivative(const VectorField& x, const Tensor11& t) {
  require_same_chart(x.chart(), t.chart());
  const Chart& chart = t.chart();
  std::size_t n = chart.dim();
  Matrix m(n, std::vector<Expr>(n));
  for (std::size_t j = 0; j < n; ++j) {
    VectorField ej = VectorField::coordinate(chart, j);
    VectorField col = lie_bracket(x, t.apply(ej)) - t.apply(lie_bracket(x, ej));
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
  }
  return Tensor11(chart, std::move(m));
}

VectorField lie_derivative(const VectorField& x, const VectorField& y) { return lie_bracket(x, y); }

Components3 nijenhuis(const Tensor11& s) {
  const Chart& chart = s.chart();
  std::size_t n = chart.dim();
  Components3 out(chart);
  for (std::size_t j = 0; j < n; ++j) {
    VectorField ej = VectorField::coordinate(chart, j);
    VectorField sj = s.apply(ej);
    for (std::size_t k = j + 1; k < n; ++k) {
      VectorField ek = VectorField::coordinate(chart, k);
      VectorField sk = s.apply(ek);
      // [d_j, d_k] = 0, so the S^2 term drops out.
      VectorField v = lie_bracket(sj, sk) - s.apply(lie_bracket(sj, ek)) - s.apply(lie_bracket(ej, sk));
      for (std::size_t i = 0; i < n; ++i) {
        out(i, j, k) = v[i];
        out(i, k, j) = -v[i];
      }
    }
  }
  return out;
}

Components3 jacobiator(const Bivector& l) {
  const Chart& chart = l.chart();
  std::size_t n = chart.dim();
  auto term = [&](std::size_t i, std::size_t j, std::size_t k) {
    std::vector<Expr> terms;
    for (std::size_t m = 0; m < n; ++m) {
      if (l(i, m).is_zero()) continue;
      terms.push_back(l(i, m) * sym::differentiate(l(j, k), chart.coords()[m]));
    }
    return sym::add(std::move(terms));
  };
  Components3 out(chart);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Expr v = term(i, j, k) + term(j, k, i) + term(k, i, j);
        out(i, j, k) = v;
        out(j, k, i) = v;
        out(k, i, j) = v;
        out(j, i, k) = -v;
        out(i, k, j) = -v;
        out(k, j, i) = -v;
      }
    }
  }
  return out;
}

DiffForm flat(const DiffForm& w, const VectorField& x) {
  if (w.degree() != 2) throw DimensionMismatch("flat needs a 2-form");
  return interior_product(x, w);
}

}  // namespace geomech::calc
