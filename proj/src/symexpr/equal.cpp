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

#include "node.hpp"

namespace geomech::sym {
namespace {

std::uint64_t splitmix(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

const std::string kVar = "u";

}  // namespace

PointSampler::PointSampler(const std::set<std::string>& symbols,
                           const std::set<std::string>& functions, const Sampling& s,
                           std::uint64_t stream)
    : symbols_(symbols.begin(), symbols.end()), sampling_(s), state_(s.seed) {
  std::set<std::string> fns = functions;
  // An inverse pair is always drawn together.
  for (const auto& [inv, fwd] : s.inverse_of) {
    if (fns.count(inv) || fns.count(fwd)) {
      fns.insert(inv);
      fns.insert(fwd);
    }
  }
  functions_.assign(fns.begin(), fns.end());
  std::uint64_t mix = stream * 0xd1b54a32d192ed03ULL;
  state_ ^= mix;
  splitmix(state_);
}

double PointSampler::uniform(double lo, double hi) {
  double u = static_cast<double>(splitmix(state_) >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

Rational PointSampler::uniform_rational(double lo, double hi) {
  long k = std::lround(uniform(lo, hi) * 1024.0);
  return Rational(k, 1024);
}

EvalPoint PointSampler::next() {
  EvalPoint p;
  for (const auto& name : symbols_) p.values[name] = uniform(sampling_.lo, sampling_.hi);
  Expr u = Expr::symbol(kVar);
  for (const auto& name : functions_) {
    if (p.functions.count(name)) continue;
    if (auto it = sampling_.bindings.find(name); it != sampling_.bindings.end()) {
      p.functions[name] = it->second;
      continue;
    }
    std::string inverse;
    std::string forward;
    for (const auto& [inv, fwd] : sampling_.inverse_of) {
      if (name == inv || name == fwd) {
        inverse = inv;
        forward = fwd;
        break;
      }
    }
    if (!forward.empty()) {
      // f(u) = a + b exp(c u), finv(x) = log((x - a)/b)/c
      Expr a(uniform_rational(-6.0, -5.0));
      Expr b(uniform_rational(0.5, 1.5));
      Expr c(uniform_rational(0.5, 1.0));
      p.functions[forward] = {kVar, a + b * exp(c * u)};
      p.functions[inverse] = {kVar, log((u - a) / b) / c};
      continue;
    }
    Expr a(uniform_rational(2.0, 3.0));
    Expr b(uniform_rational(0.25, 0.75));
    Expr c(uniform_rational(0.5, 1.5));
    Expr d(uniform_rational(-1.0, 1.0));
    Expr e(uniform_rational(0.1, 0.3));
    p.functions[name] = {kVar, a + b * sin(c * u + d) + e * pow(u, 2)};
  }
  return p;
}

std::vector<EvalPoint> sample_points(const std::vector<Expr>& exprs, int count,
                                     const Sampling& s) {
  std::set<std::string> symbols;
  std::set<std::string> functions;
  for (const auto& e : exprs) {
    for (const auto& n : free_symbols(e)) symbols.insert(n);
    for (const auto& n : free_functions(e)) functions.insert(n);
  }
  PointSampler sampler(symbols, functions, s);
  std::vector<EvalPoint> out;
  for (int tries = 0; tries < 50 * count && static_cast<int>(out.size()) < count; ++tries) {
    EvalPoint p = sampler.next();
    try {
      for (const auto& e : exprs) eval(e, p);
    } catch (const DomainError&) {
      continue;
    }
    out.push_back(std::move(p));
  }
  return out;
}

EqualResult equal(const Expr& a, const Expr& b, const Sampling& s) {
  EqualResult result;
  Expr diff = a - b;
  if (diff.is_zero()) {
    result.verdict = Verdict::Equal;
    return result;
  }
  std::set<std::string> symbols = free_symbols(a);
  for (const auto& n : free_symbols(b)) symbols.insert(n);
  std::set<std::string> functions = free_functions(a);
  for (const auto& n : free_functions(b)) functions.insert(n);

  PointSampler sampler(symbols, functions, s);
  int admitted = 0;
  for (int tries = 0; tries < 50 * s.samples && admitted < s.samples; ++tries) {
    EvalPoint p = sampler.next();
    Evaluated va;
    Evaluated vb;
    try {
      va = eval_with_magnitude(a, p);
      vb = eval_with_magnitude(b, p);
    } catch (const DomainError&) {
      continue;
    }
    ++admitted;
    double scale = std::max({1.0, std::fabs(va.value), std::fabs(vb.value), va.magnitude,
                             vb.magnitude});
    if (std::fabs(va.value - vb.value) > s.tol * scale) {
      result.verdict = Verdict::NotEqual;
      result.witness = std::move(p);
      result.lhs = va.value;
      result.rhs = vb.value;
      return result;
    }
  }
  result.verdict = admitted >= s.samples ? Verdict::Equal : Verdict::Undecided;
  return result;
}

EqualResult equal(const Expr& a, const Expr& b, int n_samples, double tol) {
  Sampling s;
  s.samples = n_samples;
  s.tol = tol;
  return equal(a, b, s);
}

CheckResult CheckResult::pass(std::string detail) {
  CheckResult r;
  r.detail = std::move(detail);
  return r;
}

CheckResult CheckResult::fail(std::string detail, std::string residual,
                              std::optional<EvalPoint> witness) {
  CheckResult r;
  r.status = Status::Fail;
  r.detail = std::move(detail);
  r.residual = std::move(residual);
  r.witness = std::move(witness);
  return r;
}

CheckResult check_equal(const Expr& a, const Expr& b, const Sampling& s,
                        const std::string& label) {
  EqualResult eq = equal(a, b, s);
  if (eq.verdict == Verdict::Equal) return CheckResult::pass();
  CheckResult r;
  std::ostringstream os;
  os.precision(17);
  if (!label.empty()) os << label << ": ";
  if (eq.verdict == Verdict::Undecided) {
    r.status = CheckResult::Status::Undecided;
    os << "too few admissible sample points";
  } else {
    r.status = CheckResult::Status::Fail;
    os << "lhs " << eq.lhs << " != rhs " << eq.rhs;
    r.witness = eq.witness;
  }
  r.detail = os.str();
  r.residual = to_string(a - b);
  return r;
}

CheckResult check_zero(const Expr& e, const Sampling& s, const std::string& label) {
  return check_equal(e, Expr(0), s, label);
}

CheckResult combine(const std::vector<CheckResult>& results) {
  const CheckResult* undecided = nullptr;
  for (const auto& r : results) {
    if (r.status == CheckResult::Status::Fail) return r;
    if (r.status == CheckResult::Status::Undecided && !undecided) undecided = &r;
  }
  if (undecided) return *undecided;
  return CheckResult::pass();
}

}  // namespace geomech::sym
