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

#include <algorithm>
#include <set>
#include <sstream>

#include "geomech/geomcalc.hpp"

namespace geomech::calc {
namespace {

/// Sorts an index tuple in place; returns its permutation sign, 0 on repeats.
int sort_with_sign(MultiIndex& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  return sign;
}

Matrix zero_matrix(std::size_t n) { return Matrix(n, std::vector<Expr>(n, Expr(0))); }

std::string term(const Expr& c, const std::string& basis) {
  if (basis.empty()) return sym::to_string(c);
  if (c.is_one()) return basis;
  if ((-c).is_one()) return "-" + basis;
  if (c.kind() == sym::Kind::Sum) return "(" + sym::to_string(c) + ")*" + basis;
  return sym::to_string(c) + "*" + basis;
}

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i][0] == '-') {
      out += " - " + terms[i].substr(1);
    } else {
      out += " + " + terms[i];
    }
  }
  return out;
}

/// A failing component may not involve every coordinate; complete the
/// witness so that it names a point of the chart.
CheckResult on_chart(CheckResult r, const Chart& chart, const Sampling& s) {
  if (!r.witness) return r;
  std::set<std::string> missing;
  for (const auto& c : chart.coords()) {
    if (!r.witness->values.count(c)) missing.insert(c);
  }
  if (missing.empty()) return r;
  sym::EvalPoint extra = sym::PointSampler(missing, {}, s, 0x77).next();
  for (const auto& [name, value] : extra.values) r.witness->values[name] = value;
  return r;
}

}  // namespace

Chart::Chart(std::string name, std::vector<std::string> coords)
    : name_(std::move(name)), coords_(std::move(coords)) {
  if (coords_.empty()) throw DimensionMismatch("chart '" + name_ + "' has no coordinates");
  std::set<std::string> seen(coords_.begin(), coords_.end());
  if (seen.size() != coords_.size()) {
    throw Error("chart '" + name_ + "' repeats a coordinate name");
  }
}

std::size_t Chart::index(const std::string& coord) const {
  auto it = std::find(coords_.begin(), coords_.end(), coord);
  if (it == coords_.end()) throw UnknownSymbol(coord);
  return static_cast<std::size_t>(it - coords_.begin());
}

void require_same_chart(const Chart& a, const Chart& b) {
  if (a != b) throw ChartMismatch("chart '" + a.name() + "' vs '" + b.name() + "'");
}

VectorField::VectorField(Chart chart, std::vector<Expr> components)
    : chart_(std::move(chart)), components_(std::move(components)) {
  if (components_.size() != chart_.dim()) {
    throw DimensionMismatch("vector field needs " + std::to_string(chart_.dim()) + " components");
  }
}

VectorField VectorField::zero(const Chart& chart) {
  return VectorField(chart, std::vector<Expr>(chart.dim(), Expr(0)));
}

VectorField VectorField::coordinate(const Chart& chart, std::size_t i) {
  std::vector<Expr> c(chart.dim(), Expr(0));
  c.at(i) = Expr(1);
  return VectorField(chart, std::move(c));
}

Expr VectorField::apply(const Expr& f) const {
  std::vector<Expr> terms;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (components_[i].is_zero()) continue;
    terms.push_back(components_[i] * sym::differentiate(f, chart_.coords()[i]));
  }
  return sym::add(std::move(terms));
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  require_same_chart(a.chart(), b.chart());
  std::vector<Expr> c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) c[i] = a[i] + b[i];
  return VectorField(a.chart(), std::move(c));
}

VectorField operator-(const VectorField& a, const VectorField& b) {
  return a + Expr(-1) * b;
}

VectorField operator*(const Expr& f, const VectorField& x) {
  std::vector<Expr> c(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) c[i] = f * x[i];
  return VectorField(x.chart(), std::move(c));
}

DiffForm::DiffForm(Chart chart, int degree) : chart_(std::move(chart)), degree_(degree) {
  if (degree < 0 || degree > static_cast<int>(chart_.dim())) {
    throw DegreeOverflow("form degree " + std::to_string(degree) + " on a " +
                         std::to_string(chart_.dim()) + "-dimensional chart");
  }
}

DiffForm DiffForm::scalar(const Chart& chart, const Expr& f) {
  DiffForm w(chart, 0);
  w.add({}, f);
  return w;
}

DiffForm DiffForm::differential(const Chart& chart, std::size_t i) {
  DiffForm w(chart, 1);
  w.add({static_cast<int>(i)}, Expr(1));
  return w;
}

DiffForm DiffForm::exact(const Chart& chart, const Expr& f) {
  DiffForm w(chart, 1);
  for (std::size_t i = 0; i < chart.dim(); ++i) {
    w.add({static_cast<int>(i)}, sym::differentiate(f, chart.coords()[i]));
  }
  return w;
}

Expr DiffForm::component(const MultiIndex& index) const {
  MultiIndex idx = index;
  int sign = sort_with_sign(idx);
  if (sign == 0) return Expr(0);
  auto it = components_.find(idx);
  if (it == components_.end()) return Expr(0);
  return sign > 0 ? it->second : -it->second;
}

void DiffForm::add(const MultiIndex& index, const Expr& c) {
  if (static_cast<int>(index.size()) != degree_) {
    throw DimensionMismatch("index length does not match form degree");
  }
  for (int i : index) {
    if (i < 0 || i >= static_cast<int>(chart_.dim())) throw DimensionMismatch("form index out of range");
  }
  if (c.is_zero()) return;
  MultiIndex idx = index;
  int sign = sort_with_sign(idx);
  if (sign == 0) return;
  Expr updated = components_.count(idx) ? components_[idx] + Expr(sign) * c : Expr(sign) * c;
  if (updated.is_zero()) {
    components_.erase(idx);
  } else {
    components_[idx] = updated;
  }
}

DiffForm operator+(const DiffForm& a, const DiffForm& b) {
  require_same_chart(a.chart(), b.chart());
  if (a.degree() != b.degree()) throw DimensionMismatch("adding forms of different degree");
  DiffForm out = a;
  for (const auto& [idx, c] : b.components()) out.add(idx, c);
  return out;
}

DiffForm operator-(const DiffForm& a, const DiffForm& b) { return a + Expr(-1) * b; }

DiffForm operator*(const Expr& f, const DiffForm& w) {
  DiffForm out(w.chart(), w.degree());
  for (const auto& [idx, c] : w.components()) out.add(idx, f * c);
  return out;
}

Matrix form_matrix(const DiffForm& w) {
  if (w.degree() != 2) throw DimensionMismatch("expected a 2-form");
  std::size_t n = w.chart().dim();
  Matrix m = zero_matrix(n);
  for (const auto& [idx, c] : w.components()) {
    m[idx[0]][idx[1]] = c;
    m[idx[1]][idx[0]] = -c;
  }
  return m;
}

DiffForm form_from_matrix(const Chart& chart, const Matrix& m) {
  DiffForm w(chart, 2);
  for (std::size_t i = 0; i < chart.dim(); ++i) {
    for (std::size_t j = i + 1; j < chart.dim(); ++j) {
      w.add({static_cast<int>(i), static_cast<int>(j)}, m[i][j]);
    }
  }
  return w;
}

Tensor11::Tensor11(Chart chart, Matrix m) : chart_(std::move(chart)), m_(std::move(m)) {
  if (m_.size() != chart_.dim()) throw DimensionMismatch("tensor shape does not match chart");
  for (const auto& row : m_) {
    if (row.size() != chart_.dim()) throw DimensionMismatch("tensor shape does not match chart");
  }
}

Tensor11 Tensor11::zero(const Chart& chart) { return Tensor11(chart, zero_matrix(chart.dim())); }

Tensor11 Tensor11::identity(const Chart& chart) {
  Matrix m = zero_matrix(chart.dim());
  for (std::size_t i = 0; i < chart.dim(); ++i) m[i][i] = Expr(1);
  return Tensor11(chart, std::move(m));
}

VectorField Tensor11::apply(const VectorField& x) const {
  require_same_chart(chart_, x.chart());
  std::vector<Expr> out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    std::vector<Expr> terms;
    for (std::size_t j = 0; j < x.dim(); ++j) terms.push_back(m_[i][j] * x[j]);
    out[i] = sym::add(std::move(terms));
  }
  return VectorField(chart_, std::move(out));
}

DiffForm Tensor11::apply(const DiffForm& alpha) const {
  require_same_chart(chart_, alpha.chart());
  if (alpha.degree() != 1) throw DimensionMismatch("tensor acts on 1-forms");
  DiffForm out(chart_, 1);
  for (std::size_t j = 0; j < chart_.dim(); ++j) {
    std::vector<Expr> terms;
    for (const auto& [idx, c] : alpha.components()) terms.push_back(c * m_[idx[0]][j]);
    out.add({static_cast<int>(j)}, sym::add(std::move(terms)));
  }
  return out;
}

Tensor11 operator+(const Tensor11& a, const Tensor11& b) {
  require_same_chart(a.chart(), b.chart());
  Matrix m = a.matrix();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) m[i][j] = m[i][j] + b(i, j);
  }
  return Tensor11(a.chart(), std::move(m));
}

Tensor11 operator-(const Tensor11& a, const Tensor11& b) { return a + Expr(-1) * b; }

Tensor11 operator*(const Expr& f, const Tensor11& t) {
  Matrix m = t.matrix();
  for (auto& row : m) {
    for (auto& e : row) e = f * e;
  }
  return Tensor11(t.chart(), std::move(m));
}

Tensor11 compose(const Tensor11& a, const Tensor11& b) {
  require_same_chart(a.chart(), b.chart());
  return Tensor11(a.chart(), multiply(a.matrix(), b.matrix()));
}

Bivector::Bivector(Chart chart, const Matrix& m) : chart_(std::move(chart)) {
  std::size_t n = chart_.dim();
  if (m.size() != n) throw DimensionMismatch("bivector shape does not match chart");
  m_ = zero_matrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw DimensionMismatch("bivector shape does not match chart");
    for (std::size_t j = i + 1; j < n; ++j) {
      m_[i][j] = m[i][j];
      m_[j][i] = -m[i][j];
    }
  }
}

Bivector Bivector::zero(const Chart& chart) { return Bivector(chart, zero_matrix(chart.dim())); }

Bivector Bivector::wedge(const Chart& chart, std::size_t i, std::size_t j) {
  Matrix m = zero_matrix(chart.dim());
  if (i < j) m[i][j] = Expr(1);
  if (j < i) m[j][i] = Expr(-1);
  return Bivector(chart, m);
}

VectorField Bivector::sharp(const DiffForm& alpha) const {
  require_same_chart(chart_, alpha.chart());
  if (alpha.degree() != 1) throw DimensionMismatch("sharp acts on 1-forms");
  std::vector<Expr> out(chart_.dim());
  for (std::size_t j = 0; j < chart_.dim(); ++j) {
    std::vector<Expr> terms;
    for (const auto& [idx, c] : alpha.components()) terms.push_back(m_[j][idx[0]] * c);
    out[j] = sym::add(std::move(terms));
  }
  return VectorField(chart_, std::move(out));
}

Bivector operator+(const Bivector& a, const Bivector& b) {
  require_same_chart(a.chart(), b.chart());
  Matrix m = a.matrix();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) m[i][j] = m[i][j] + b(i, j);
  }
  return Bivector(a.chart(), m);
}

Bivector operator-(const Bivector& a, const Bivector& b) { return a + Expr(-1) * b; }

Bivector operator*(const Expr& f, const Bivector& l) {
  Matrix m = l.matrix();
  for (auto& row : m) {
    for (auto& e : row) e = f * e;
  }
  return Bivector(l.chart(), m);
}

Components3::Components3(Chart chart)
    : chart_(std::move(chart)), n_(chart_.dim()), data_(n_ * n_ * n_, Expr(0)) {}

const Expr& Components3::operator()(std::size_t i, std::size_t j, std::size_t k) const {
  return data_.at((i * n_ + j) * n_ + k);
}

Expr& Components3::operator()(std::size_t i, std::size_t j, std::size_t k) {
  return data_.at((i * n_ + j) * n_ + k);
}

CheckResult check_equal(const VectorField& a, const VectorField& b, const Sampling& s) {
  require_same_chart(a.chart(), b.chart());
  std::vector<CheckResult> parts;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    parts.push_back(sym::check_equal(a[i], b[i], s, "d/d" + a.chart().coords()[i] + " component"));
    if (!parts.back().passed()) break;
  }
  return on_chart(sym::combine(parts), a.chart(), s);
}

CheckResult check_equal(const DiffForm& a, const DiffForm& b, const Sampling& s) {
  return check_zero(a - b, s);
}

CheckResult check_equal(const Tensor11& a, const Tensor11& b, const Sampling& s) {
  return check_zero(a - b, s);
}

CheckResult check_equal(const Bivector& a, const Bivector& b, const Sampling& s) {
  require_same_chart(a.chart(), b.chart());
  const auto& c = a.chart().coords();
  std::vector<CheckResult> parts;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      parts.push_back(sym::check_equal(a(i, j), b(i, j), s, c[i] + "^" + c[j] + " component"));
      if (!parts.back().passed()) return on_chart(sym::combine(parts), a.chart(), s);
    }
  }
  return on_chart(sym::combine(parts), a.chart(), s);
}

CheckResult check_zero(const VectorField& x, const Sampling& s) {
  return check_equal(x, VectorField::zero(x.chart()), s);
}

CheckResult check_zero(const DiffForm& w, const Sampling& s) {
  const auto& c = w.chart().coords();
  std::vector<CheckResult> parts;
  for (const auto& [idx, e] : w.components()) {
    std::string label;
    for (int i : idx) label += (label.empty() ? "d" : "^d") + c[i];
    parts.push_back(sym::check_zero(e, s, (label.empty() ? "value" : label) + " component"));
    if (!parts.back().passed()) break;
  }
  return on_chart(sym::combine(parts), w.chart(), s);
}

CheckResult check_zero(const Tensor11& t, const Sampling& s) {
  const auto& c = t.chart().coords();
  std::vector<CheckResult> parts;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      parts.push_back(sym::check_zero(t(i, j), s, "d/d" + c[i] + "@d" + c[j] + " component"));
      if (!parts.back().passed()) return on_chart(sym::combine(parts), t.chart(), s);
    }
  }
  return on_chart(sym::combine(parts), t.chart(), s);
}

CheckResult check_zero(const Components3& t, const Sampling& s) {
  const auto& c = t.chart().coords();
  std::vector<CheckResult> parts;
  for (std::size_t i = 0; i < t.dim(); ++i) {
    for (std::size_t j = 0; j < t.dim(); ++j) {
      for (std::size_t k = 0; k < t.dim(); ++k) {
        if (t(i, j, k).is_zero()) continue;
        parts.push_back(sym::check_zero(t(i, j, k), s, "(" + c[i] + "," + c[j] + "," + c[k] + ") component"));
        if (!parts.back().passed()) return on_chart(sym::combine(parts), t.chart(), s);
      }
    }
  }
  return on_chart(sym::combine(parts), t.chart(), s);
}

std::string to_string(const VectorField& x) {
  std::vector<std::string> terms;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (!x[i].is_zero()) terms.push_back(term(x[i], "d/d" + x.chart().coords()[i]));
  }
  return join_terms(terms);
}

std::string to_string(const DiffForm& w) {
  if (w.degree() == 0) return sym::to_string(w.value());
  std::vector<std::string> terms;
  for (const auto& [idx, c] : w.components()) {
    std::string basis;
    for (int i : idx) basis += (basis.empty() ? "d" : "^d") + w.chart().coords()[i];
    terms.push_back(term(c, basis));
  }
  return join_terms(terms);
}

std::string to_string(const Tensor11& t) {
  const auto& c = t.chart().coords();
  std::vector<std::string> terms;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (!t(i, j).is_zero()) terms.push_back(term(t(i, j), "d/d" + c[i] + "@d" + c[j]));
    }
  }
  return join_terms(terms);
}

std::string to_string(const Bivector& l) {
  const auto& c = l.chart().coords();
  std::vector<std::string> terms;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (!l(i, j).is_zero()) terms.push_back(term(l(i, j), "d/d" + c[i] + "^d/d" + c[j]));
    }
  }
  return join_terms(terms);
}

}  // namespace geomech::calc
