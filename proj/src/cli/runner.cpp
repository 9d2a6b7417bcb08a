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
#include <chrono>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "geomech/tulczyjew.hpp"
#include "geomech/weylnum.hpp"
#include "internal.hpp"

namespace geomech::cli {

using detail::fail_at;
using detail::lookup;
using detail::Outcome;
using detail::parse_expr;
using detail::Prepared;

namespace {

using sym::CheckResult;

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(6);
  out << x;
  return out.str();
}

class Args {
 public:
  Args(const SystemSpec& spec, const CheckSpec& check, std::set<std::string> allowed)
      : spec_(spec), check_(check) {
    for (const auto& [key, e] : check.args) {
      if (!allowed.count(key)) fail_at(e, "check kind '" + check.kind + "' does not take '" + key + "'");
    }
  }

  const Entry* opt(const std::string& key) const {
    auto it = check_.args.find(key);
    return it == check_.args.end() ? nullptr : &it->second;
  }
  const Entry& req(const std::string& key) const {
    if (const Entry* e = opt(key)) return *e;
    throw ParseError("check \"" + check_.id + "\" needs '" + key + "'", check_.line, 1);
  }

  template <typename T>
  const T& ref(const std::map<std::string, T>& table, const std::string& key, const char* what) const {
    return lookup(table, req(key), what);
  }
  Expr expr(const std::string& key, const Chart& chart) const {
    return parse_expr(spec_, req(key), chart.coords());
  }
  int integer(const std::string& key, int lo, int hi) const {
    const Entry& e = req(key);
    int v = detail::parse_int(e);
    if (v < lo || v > hi) fail_at(e, "'" + key + "' must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return v;
  }
  const SystemSpec& spec() const { return spec_; }

 private:
  const SystemSpec& spec_;
  const CheckSpec& check_;
};

void require_chart(const Chart& want, const Chart& got, const Entry& e) {
  if (want != got) fail_at(e, "expected an object on chart '" + want.name() + "', got '" + got.name() + "'");
}

Outcome with_result(Outcome o, std::string result) {
  o.result = std::move(result);
  return o;
}

Outcome degenerate(const WitnessError& err) {
  Outcome o;
  o.status = Status::Degenerate;
  o.detail = err.what();
  if (!err.point().empty()) o.witness = err.point();
  return o;
}

Outcome numeric(bool ok, const std::string& detail, std::optional<PointValues> witness = std::nullopt) {
  Outcome o;
  o.status = ok ? Status::Pass : Status::Fail;
  o.detail = detail;
  if (!ok) o.witness = std::move(witness);
  return o;
}

Prepared equal_check(const Args& a) {
  const Chart& chart = a.ref(a.spec().charts, "chart", "chart");
  Expr lhs = a.expr("lhs", chart);
  Expr rhs = a.expr("rhs", chart);
  return [=](const Sampling& s) { return detail::from_check(sym::check_equal(lhs, rhs, s, "lhs - rhs")); };
}

Prepared pushforward_check(const Args& a) {
  const Diffeo& phi = a.ref(a.spec().diffeos, "diffeo", "diffeo");
  const VectorField& x = a.ref(a.spec().fields, "field", "field");
  const VectorField& want = a.ref(a.spec().fields, "expect", "field");
  require_chart(phi.src(), x.chart(), a.req("field"));
  require_chart(phi.dst(), want.chart(), a.req("expect"));
  return [=](const Sampling& s) {
    VectorField pushed = calc::pushforward(phi, x);
    return with_result(detail::from_check(calc::check_equal(pushed, want, s)), calc::to_string(pushed));
  };
}

Prepared sode_check(const Args& a) {
  VectorField x = a.ref(a.spec().fields, "field", "field");
  std::optional<Diffeo> phi;
  if (a.opt("diffeo")) {
    phi = a.ref(a.spec().diffeos, "diffeo", "diffeo");
    require_chart(phi->src(), x.chart(), a.req("field"));
  }
  const Chart& target = phi ? phi->dst() : x.chart();
  tangent::TangentStructure ts;
  if (a.opt("structure")) {
    ts = a.ref(a.spec().structures, "structure", "structure");
    require_chart(target, ts.chart, a.req("structure"));
  } else {
    try {
      ts = tangent::canonical_structure(target);
    } catch (const OddDimension& err) {
      fail_at(a.req("field"), err.what());
    }
  }
  std::optional<VectorField> want;
  if (a.opt("expect")) {
    want = a.ref(a.spec().fields, "expect", "field");
    require_chart(target, want->chart(), a.req("expect"));
  }
  return [=](const Sampling& s) {
    VectorField y = phi ? calc::pushforward(*phi, x) : x;
    std::vector<CheckResult> checks;
    if (want) checks.push_back(calc::check_equal(y, *want, s));
    checks.push_back(tangent::is_sode(y, ts, s));
    return with_result(detail::from_check(sym::combine(checks)), calc::to_string(y));
  };
}

Prepared axioms_check(const Args& a) {
  tangent::TangentStructure ts = a.ref(a.spec().structures, "structure", "structure");
  return [=](const Sampling& s) {
    tangent::AxiomReport r = tangent::verify_axioms(ts, s);
    std::vector<CheckResult> all;
    for (const auto& [name, res] : r.axioms) all.push_back(res);
    Outcome o = detail::from_check(sym::combine(all));
    std::string names;
    for (const auto& f : r.failures()) names += (names.empty() ? "" : ", ") + f;
    o.detail = names.empty() ? "all axioms hold" : "failed: " + names + "; " + o.detail;
    return o;
  };
}

Prepared el_solve_check(const Args& a) {
  lagrange::LagrangianSystem sys = a.ref(a.spec().lagrangians, "lagrangian", "lagrangian");
  std::optional<VectorField> want;
  if (a.opt("expect")) {
    want = a.ref(a.spec().fields, "expect", "field");
    require_chart(sys.ts.chart, want->chart(), a.req("expect"));
  }
  return [=](const Sampling& s) {
    try {
      VectorField gamma = lagrange::el_solve(sys, s);
      std::vector<CheckResult> checks;
      if (want) checks.push_back(calc::check_equal(gamma, *want, s));
      checks.push_back(calc::check_zero(lagrange::el_residual(sys, gamma), s));
      checks.push_back(tangent::is_sode(gamma, sys.ts, s));
      return with_result(detail::from_check(sym::combine(checks)), calc::to_string(gamma));
    } catch (const DegenerateLagrangian& err) {
      return degenerate(err);
    }
  };
}

Prepared regularity_check(const Args& a) {
  lagrange::LagrangianSystem sys = a.ref(a.spec().lagrangians, "lagrangian", "lagrangian");
  return [=](const Sampling& s) {
    lagrange::Regularity r = lagrange::regularity(sys, s);
    Outcome o;
    o.status = r.kind == lagrange::Regularity::Kind::Regular ? Status::Pass : Status::Degenerate;
    o.detail = std::string(lagrange::to_string(r.kind)) + ", Hessian det " + sym::to_string(r.det);
    if (o.status != Status::Pass && r.witness) o.witness = r.witness->values;
    o.result = lagrange::to_string(r.kind);
    return o;
  };
}

Prepared hamiltonian_vf_check(const Args& a) {
  hamilton::HamiltonianSystem sys = a.ref(a.spec().hamiltonians, "hamiltonian", "hamiltonian");
  std::optional<VectorField> want;
  if (a.opt("expect")) {
    want = a.ref(a.spec().fields, "expect", "field");
    require_chart(sys.chart, want->chart(), a.req("expect"));
  }
  return [=](const Sampling& s) {
    try {
      VectorField x = hamilton::hamiltonian_vf(sys, s);
      std::vector<CheckResult> checks;
      if (want) checks.push_back(calc::check_equal(x, *want, s));
      checks.push_back(calc::check_equal(x, hamilton::poisson_vf(sys), s));
      checks.push_back(hamilton::invariance_check(x, sys.omega, s));
      checks.push_back(hamilton::invariance_check(x, sys.H, s));
      return with_result(detail::from_check(sym::combine(checks)), calc::to_string(x));
    } catch (const DegenerateOmega& err) {
      return degenerate(err);
    }
  };
}

Prepared jacobi_check(const Args& a) {
  Bivector l = a.ref(a.spec().bivectors, "bivector", "bivector");
  return [=](const Sampling& s) { return detail::from_check(calc::check_zero(calc::jacobiator(l), s)); };
}

Prepared bracket_check(const Args& a) {
  Bivector l = a.ref(a.spec().bivectors, "bivector", "bivector");
  Expr f = a.expr("f", l.chart());
  Expr g = a.expr("g", l.chart());
  Expr want = a.expr("expect", l.chart());
  return [=](const Sampling& s) {
    Expr b = hamilton::poisson_bracket(f, g, l);
    return with_result(detail::from_check(sym::check_equal(b, want, s, "bracket")), sym::to_string(b));
  };
}

Prepared closed_check(const Args& a) {
  DiffForm w = a.ref(a.spec().forms, "form", "form");
  return [=](const Sampling& s) {
    if (w.degree() >= static_cast<int>(w.chart().dim())) return numeric(true, "top-degree form");
    return detail::from_check(calc::check_zero(calc::exterior_derivative(w), s));
  };
}

Prepared invariant_check(const Args& a) {
  VectorField x = a.ref(a.spec().fields, "field", "field");
  int given = (a.opt("expr") ? 1 : 0) + (a.opt("form") ? 1 : 0) + (a.opt("tensor") ? 1 : 0);
  if (given != 1) fail_at(a.req("field"), "invariant needs exactly one of expr, form, tensor");
  if (a.opt("expr")) {
    Expr f = a.expr("expr", x.chart());
    return [=](const Sampling& s) { return detail::from_check(hamilton::invariance_check(x, f, s)); };
  }
  if (a.opt("form")) {
    DiffForm w = a.ref(a.spec().forms, "form", "form");
    require_chart(x.chart(), w.chart(), a.req("form"));
    return [=](const Sampling& s) { return detail::from_check(hamilton::invariance_check(x, w, s)); };
  }
  Tensor11 t = a.ref(a.spec().tensors, "tensor", "tensor");
  require_chart(x.chart(), t.chart(), a.req("tensor"));
  return [=](const Sampling& s) { return detail::from_check(hamilton::invariance_check(x, t, s)); };
}

Prepared nijenhuis_check(const Args& a) {
  Tensor11 t = a.ref(a.spec().tensors, "tensor", "tensor");
  return [=](const Sampling& s) { return detail::from_check(calc::check_zero(calc::nijenhuis(t), s)); };
}

Prepared magri_check(const Args& a) {
  Bivector l1 = a.ref(a.spec().bivectors, "first", "bivector");
  Bivector l2 = a.ref(a.spec().bivectors, "second", "bivector");
  require_chart(l1.chart(), l2.chart(), a.req("second"));
  return [=](const Sampling& s) {
    try {
      return detail::from_check(hamilton::magri_compatible(l1, l2, s));
    } catch (const NotPoisson& err) {
      Outcome o = numeric(false, err.what());
      if (!err.point().empty()) o.witness = err.point();
      return o;
    }
  };
}

Prepared recursion_check(const Args& a) {
  DiffForm w1 = a.ref(a.spec().forms, "first", "form");
  DiffForm w2 = a.ref(a.spec().forms, "second", "form");
  require_chart(w1.chart(), w2.chart(), a.req("second"));
  std::vector<Expr> traces;
  if (const Entry* t = a.opt("traces")) {
    for (const auto& item : detail::split_list(t->value)) {
      Entry e = *t;
      e.value = item;
      traces.push_back(parse_expr(a.spec(), e, w1.chart().coords()));
    }
  }
  return [=](const Sampling& s) {
    try {
      Tensor11 n = hamilton::recursion_operator(w1, w2, s);
      int k = std::max<int>(1, static_cast<int>(traces.size()));
      std::vector<Expr> got = hamilton::trace_invariants(n, k);
      std::vector<CheckResult> checks;
      std::string printed = "N = " + calc::to_string(n) + "; traces";
      for (std::size_t i = 0; i < got.size(); ++i) {
        printed += " " + sym::to_string(got[i]);
        if (i < traces.size()) checks.push_back(sym::check_equal(got[i], traces[i], s, "tr N^" + std::to_string(i + 1)));
      }
      return with_result(detail::from_check(sym::combine(checks)), printed);
    } catch (const DegenerateOmega& err) {
      return degenerate(err);
    }
  };
}

Prepared isotropy_check(const Args& a) {
  if (a.opt("lagrangian") && a.opt("hamiltonian")) fail_at(a.req("hamiltonian"), "give a lagrangian or a hamiltonian");
  if (a.opt("lagrangian")) {
    lagrange::LagrangianSystem sys = a.ref(a.spec().lagrangians, "lagrangian", "lagrangian");
    return [=](const Sampling& s) {
      tulczyjew::ImplicitEquation ie = tulczyjew::el_submanifold(sys.ts.chart, sys.L);
      Outcome o = detail::from_check(tulczyjew::isotropy_check(ie, tulczyjew::tt_star_form(ie.ambient()), s));
      o.result = tulczyjew::rank_report(ie, s).is_graph() ? "graph over T*Q" : "not a graph over T*Q";
      return o;
    };
  }
  hamilton::HamiltonianSystem sys = a.ref(a.spec().hamiltonians, "hamiltonian", "hamiltonian");
  return [=](const Sampling& s) {
    try {
      tulczyjew::ImplicitEquation ie = tulczyjew::hamiltonian_graph(sys, s);
      return detail::from_check(tulczyjew::isotropy_check(ie, tulczyjew::tt_star_form(ie.ambient()), s));
    } catch (const DegenerateOmega& err) {
      return degenerate(err);
    }
  };
}

Prepared tau_check(const Args& a) {
  int m = a.integer("m", 1, 4);
  return [=](const Sampling& s) {
    Diffeo t = tulczyjew::tau(m);
    DiffForm pulled = calc::pullback(t, tulczyjew::t_star_t_form(t.dst()));
    return detail::from_check(calc::check_equal(pulled, tulczyjew::tt_star_form(t.src()), s));
  };
}

Prepared clock_shift_check(const Args& a) {
  int d = a.integer("d", 2, 512);
  return [=](const Sampling&) {
    weyl::ClockShift cs = weyl::clock_shift(d);
    if (!cs.U.is_unitary() || !cs.V.is_unitary()) return numeric(false, "clock or shift is not unitary");
    return detail::from_check(weyl::weyl_commutation_check(cs.U, cs.V, cs.zeta));
  };
}

Prepared phase_law_check(const Args& a) {
  int d = a.integer("d", 2, 16);
  return [=](const Sampling&) {
    weyl::ClockShift cs = weyl::clock_shift(d);
    std::vector<weyl::DenseOp> up;
    std::vector<weyl::DenseOp> vp;
    for (int k = 0; k < d; ++k) {
      up.push_back(cs.U.pow(k));
      vp.push_back(cs.V.pow(k));
    }
    double worst = 0.0;
    PointValues at;
    for (int i = 0; i < d * d * d * d; ++i) {
      int pa = i % d, pb = (i / d) % d, pc = (i / d / d) % d, pd = i / d / d / d;
      weyl::DenseOp x = up[pa] * vp[pb];
      weyl::DenseOp y = up[pc] * vp[pd];
      double dev = weyl::max_deviation(y * x, weyl::root_of_unity(d, pb * pc - pa * pd) * (x * y));
      if (dev > worst) {
        worst = dev;
        at = {{"a", pa}, {"b", pb}, {"c", pc}, {"d", pd}};
      }
    }
    return numeric(worst <= 1e-12, "max deviation " + fmt(worst), at);
  };
}

Prepared fock_check(const Args& a) {
  int n_max = a.integer("n_max", 2, 1024);
  return [=](const Sampling&) {
    weyl::Fock f = weyl::truncated_fock(n_max);
    auto defect = weyl::ccr_defect(f);
    bool ok = defect.size() == 1 && defect[0].row == n_max - 1 && defect[0].col == n_max - 1 &&
              std::abs(defect[0].value - weyl::Complex(1.0 - n_max)) <= 1e-12;
    std::string detail = std::to_string(defect.size()) + " entries of [a, a_dag] differ from the identity";
    if (!defect.empty()) detail += "; last " + fmt(defect.back().value.real());
    Outcome o = numeric(ok, detail);
    if (!ok && !defect.empty()) o.witness = PointValues{{"row", defect.front().row}, {"col", defect.front().col}};
    return o;
  };
}

Prepared nonlinear_check(const Args& a) {
  std::string var = a.opt("variable") ? a.req("variable").value : "u";
  const Entry& ke = a.req("K");
  Expr k;
  try {
    k = sym::parse(ke.value, {var});
  } catch (const SyntaxError& err) {
    throw ParseError(err.what(), ke.line, ke.value_col + static_cast<int>(err.position()));
  } catch (const Error& err) {
    fail_at(ke, err.what());
  }
  int triples = a.opt("triples") ? a.integer("triples", 1, 100000) : 100;
  std::optional<double> beta;
  if (a.opt("beta")) beta = detail::parse_real(a.req("beta"));
  return [=](const Sampling& s) {
    weyl::NonlinearStructure ns(k, var);
    std::mt19937_64 rng(s.seed);
    std::uniform_real_distribution<double> u(s.lo, s.hi);
    double assoc = 0.0;
    for (int t = 0; t < triples; ++t) {
      weyl::PhasePoint z1{u(rng), u(rng)}, z2{u(rng), u(rng)}, z3{u(rng), u(rng)};
      PointValues at{{"q1", z1.q}, {"p1", z1.p}, {"q2", z2.q}, {"p2", z2.p}};
      if (!(weyl::nonlinear_add(ns, z1, z2) == weyl::nonlinear_add(ns, z2, z1))) {
        return numeric(false, "addition is not commutative", at);
      }
      if (!(weyl::nonlinear_add(ns, z1, {0.0, 0.0}) == z1)) return numeric(false, "(0, 0) is not neutral", at);
      weyl::PhasePoint l = weyl::nonlinear_add(ns, weyl::nonlinear_add(ns, z1, z2), z3);
      weyl::PhasePoint r = weyl::nonlinear_add(ns, z1, weyl::nonlinear_add(ns, z2, z3));
      double dev = std::max(std::abs(l.q - r.q), std::abs(l.p - r.p));
      assoc = std::max(assoc, dev);
      if (dev > s.tol) {
        at["q3"] = z3.q;
        at["p3"] = z3.p;
        return numeric(false, "associativity deviation " + fmt(dev), at);
      }
    }
    std::string detail = "associativity deviation " + fmt(assoc);
    if (beta) {
      auto r = weyl::nonlinear_translation_action(ns, *beta, weyl::uniform_grid(-1.0, 1.0, 32), std::nullopt, s.tol);
      detail += "; translation group law residual " + fmt(r.group_law_residual);
      if (!r.passed) return numeric(false, detail, PointValues{{"beta", *beta}});
    }
    return numeric(true, detail);
  };
}

using Factory = Prepared (*)(const Args&);

struct Kind {
  const char* name;
  Factory make;
  std::set<std::string> keys;
};

const std::vector<Kind>& kinds() {
  static const std::vector<Kind> table = {
      {"equal", equal_check, {"chart", "lhs", "rhs"}},
      {"pushforward", pushforward_check, {"diffeo", "field", "expect"}},
      {"sode", sode_check, {"field", "diffeo", "structure", "expect"}},
      {"axioms", axioms_check, {"structure"}},
      {"el-solve", el_solve_check, {"lagrangian", "expect"}},
      {"regularity", regularity_check, {"lagrangian"}},
      {"hamiltonian-vf", hamiltonian_vf_check, {"hamiltonian", "expect"}},
      {"jacobi", jacobi_check, {"bivector"}},
      {"bracket", bracket_check, {"bivector", "f", "g", "expect"}},
      {"closed", closed_check, {"form"}},
      {"invariant", invariant_check, {"field", "expr", "form", "tensor"}},
      {"nijenhuis", nijenhuis_check, {"tensor"}},
      {"magri", magri_check, {"first", "second"}},
      {"recursion", recursion_check, {"first", "second", "traces"}},
      {"isotropy", isotropy_check, {"lagrangian", "hamiltonian"}},
      {"tau", tau_check, {"m"}},
      {"clock-shift", clock_shift_check, {"d"}},
      {"phase-law", phase_law_check, {"d"}},
      {"fock", fock_check, {"n_max"}},
      {"nonlinear", nonlinear_check, {"K", "variable", "triples", "beta"}},
  };
  return table;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

const std::vector<std::string>& check_kinds() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& k : kinds()) out.emplace_back(k.name);
    return out;
  }();
  return names;
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Degenerate:
      return "degenerate";
    case Status::Undecided:
      return "undecided";
  }
  return "";
}

bool Report::all_passed() const {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.status == Status::Pass; });
}

std::uint64_t check_seed(std::uint64_t root, const std::string& id) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : id) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return splitmix64(root ^ splitmix64(h));
}

namespace detail {

Outcome from_check(const sym::CheckResult& r) {
  Outcome o;
  switch (r.status) {
    case sym::CheckResult::Status::Pass:
      o.status = Status::Pass;
      break;
    case sym::CheckResult::Status::Fail:
      o.status = Status::Fail;
      break;
    case sym::CheckResult::Status::Undecided:
      o.status = Status::Undecided;
      break;
  }
  if (r.witness) o.witness = r.witness->values;
  o.residual = r.residual;
  o.detail = r.detail;
  return o;
}

Prepared prepare(const SystemSpec& spec, const CheckSpec& check) {
  for (const auto& k : kinds()) {
    if (check.kind == k.name) return k.make(Args(spec, check, k.keys));
  }
  throw UnknownCheck("unknown check kind '" + check.kind + "'");
}

}  // namespace detail

Report run(const SystemSpec& spec, const std::vector<std::string>& only, const RunOptions& options) {
  for (const auto& id : only) {
    bool found = std::any_of(spec.checks.begin(), spec.checks.end(), [&](const CheckSpec& c) { return c.id == id; });
    if (!found) throw UnknownCheck("no check named '" + id + "'");
  }
  Report report{spec.source, options, {}};
  for (const auto& check : spec.checks) {
    if (!only.empty() && std::find(only.begin(), only.end(), check.id) == only.end()) continue;
    CheckRecord rec;
    rec.id = check.id;
    rec.kind = check.kind;
    rec.seed = check_seed(options.seed, check.id);
    Sampling s = spec.sampling.with_seed(rec.seed);
    s.samples = options.samples;
    s.tol = options.tol;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = detail::prepare(spec, check)(s);
    } catch (const WitnessError& err) {
      o.status = Status::Fail;
      o.detail = err.what();
      if (!err.point().empty()) o.witness = err.point();
    } catch (const Error& err) {
      o.status = Status::Fail;
      o.detail = err.what();
    }
    rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rec.status = o.status;
    rec.witness = std::move(o.witness);
    rec.residual = std::move(o.residual);
    rec.detail = std::move(o.detail);
    rec.result = std::move(o.result);
    report.records.push_back(std::move(rec));
  }
  return report;
}

}  // namespace geomech::cli
