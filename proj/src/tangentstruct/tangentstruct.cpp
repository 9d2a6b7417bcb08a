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
#include <cmath>
#include <sstream>

#include "geomech/tangentstruct.hpp"

namespace geomech::tangent {

TangentStructure canonical_structure(int m) {
  if (m < 1) throw DimensionMismatch("tangent structure needs m >= 1");
  std::vector<std::string> coords;
  for (const char* prefix : {"q", "v"}) {
    for (int i = 1; i <= m; ++i) coords.push_back(m == 1 ? prefix : prefix + std::to_string(i));
  }
  return canonical_structure(Chart("TQ", coords));
}

TangentStructure canonical_structure(const Chart& chart) {
  if (chart.dim() % 2 != 0) throw OddDimension("chart '" + chart.name() + "' is odd-dimensional");
  std::size_t m = chart.dim() / 2;
  Tensor11 s = Tensor11::zero(chart);
  calc::Matrix mat = s.matrix();
  std::vector<Expr> delta(chart.dim(), Expr(0));
  for (std::size_t i = 0; i < m; ++i) {
    mat[m + i][i] = Expr(1);
    delta[m + i] = chart.coord(m + i);
  }
  return {chart, Tensor11(chart, mat), VectorField(chart, delta)};
}

bool AxiomReport::all_passed() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const auto& a) { return a.second.passed(); });
}

const CheckResult& AxiomReport::at(const std::string& name) const {
  for (const auto& [n, r] : axioms) {
    if (n == name) return r;
  }
  throw Error("no axiom named '" + name + "'");
}

std::vector<std::string> AxiomReport::failures() const {
  std::vector<std::string> out;
  for (const auto& [n, r] : axioms) {
    if (!r.passed()) out.push_back(n);
  }
  return out;
}

namespace {

CheckResult rank_check(const TangentStructure& ts, const Sampling& s) {
  std::size_t m = ts.chart.dim() / 2;
  std::vector<Expr> entries;
  for (const auto& row : ts.S.matrix()) entries.insert(entries.end(), row.begin(), row.end());
  auto points = sym::sample_points(entries, s.samples, s);
  if (static_cast<int>(points.size()) < s.samples) {
    CheckResult r;
    r.status = CheckResult::Status::Undecided;
    r.detail = "too few admissible sample points for the rank of S";
    return r;
  }
  for (const auto& p : points) {
    int rank = calc::numeric_rank(ts.S.matrix(), p);
    if (rank != static_cast<int>(m)) {
      return CheckResult::fail("rank S = " + std::to_string(rank) + ", expected " + std::to_string(m), {}, p);
    }
  }
  return CheckResult::pass();
}

}  // namespace

AxiomReport verify_axioms(const TangentStructure& ts, const Sampling& s) {
  if (ts.chart.dim() % 2 != 0) throw OddDimension("chart '" + ts.chart.name() + "' is odd-dimensional");
  calc::require_same_chart(ts.chart, ts.S.chart());
  calc::require_same_chart(ts.chart, ts.delta.chart());
  AxiomReport report;
  report.axioms.emplace_back(kSquareZero, calc::check_zero(calc::compose(ts.S, ts.S), s));
  report.axioms.emplace_back(kKernelImage, rank_check(ts, s));
  report.axioms.emplace_back(kNijenhuis, calc::check_zero(calc::nijenhuis(ts.S), s));
  report.axioms.emplace_back(kHomogeneity,
                             calc::check_zero(calc::lie_derivative(ts.delta, ts.S) + ts.S, s));
  report.axioms.emplace_back(kVerticalDilation, calc::check_zero(ts.S.apply(ts.delta), s));
  return report;
}

CheckResult is_sode(const VectorField& gamma, const TangentStructure& ts, const Sampling& s) {
  calc::require_same_chart(gamma.chart(), ts.chart);
  return calc::check_equal(ts.S.apply(gamma), ts.delta, s);
}

TangentStructure transport_structure(const TangentStructure& ts, const Diffeo& phi,
                                     const Sampling& s) {
  calc::require_same_chart(phi.src(), ts.chart);
  return {phi.dst(), calc::pullback(phi.inverse(), ts.S, s), calc::pushforward(phi, ts.delta)};
}

DiffForm d_S(const Expr& f, const TangentStructure& ts) {
  return ts.S.apply(DiffForm::exact(ts.chart, f));
}

CurveLift lift_curve(const CurveSpec& curve) {
  for (const auto& c : curve.components) {
    for (const auto& name : sym::free_symbols(c)) {
      if (name != curve.time) throw Error("curve component depends on '" + name + "', not only on time");
    }
  }
  std::vector<Expr> vel;
  std::vector<Expr> acc;
  for (const auto& c : curve.components) {
    vel.push_back(sym::differentiate(c, curve.time));
    acc.push_back(sym::differentiate(vel.back(), curve.time));
  }
  CurveLift lift;
  lift.first = curve.components;
  lift.first.insert(lift.first.end(), vel.begin(), vel.end());
  lift.second = lift.first;
  lift.second.insert(lift.second.end(), vel.begin(), vel.end());
  lift.second.insert(lift.second.end(), acc.begin(), acc.end());
  return lift;
}

CheckResult check_integral_curve(const CurveSpec& curve, const VectorField& gamma, int t_samples,
                                 const Sampling& s) {
  std::size_t n = curve.components.size();
  if (gamma.dim() != 2 * n || curve.chart.dim() != n) {
    throw DimensionMismatch("curve of dimension " + std::to_string(n) + " against a field of dimension " +
                            std::to_string(gamma.dim()));
  }
  CurveLift lift = lift_curve(curve);
  std::map<std::string, Expr> on_curve;
  for (std::size_t i = 0; i < 2 * n; ++i) on_curve[gamma.chart().coords()[i]] = lift.first[i];

  Sampling st = s;
  st.samples = t_samples;
  std::vector<Expr> residual;
  std::vector<CheckResult> parts;
  for (std::size_t i = 0; i < 2 * n; ++i) {
    Expr r = sym::differentiate(lift.first[i], curve.time) - sym::substitute(gamma[i], on_curve);
    residual.push_back(r);
    parts.push_back(sym::check_zero(r, st, "d/d" + gamma.chart().coords()[i] + " residual"));
  }
  CheckResult out = sym::combine(parts);

  double max_residual = 0.0;
  for (const auto& p : sym::sample_points(residual, t_samples, st)) {
    for (const auto& r : residual) max_residual = std::max(max_residual, std::fabs(sym::eval(r, p)));
  }
  std::ostringstream os;
  os.precision(3);
  os << (out.detail.empty() ? "" : out.detail + "; ") << "max residual " << max_residual;
  out.detail = os.str();
  return out;
}

}  // namespace geomech::tangent
