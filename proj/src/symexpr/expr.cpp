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
#include <array>
#include <functional>

#include "node.hpp"

namespace geomech::sym {
namespace {

constexpr std::array<std::string_view, 8> kBuiltins = {
    "sin", "cos", "tan", "exp", "log", "sqrt", "abs", "sign"};

constexpr int kMaxExpandedPower = 8;

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

int kind_rank(Kind k) { return static_cast<int>(k); }

int sgn(int v) { return (v > 0) - (v < 0); }

Expr make_nary(Kind kind, std::vector<Expr> operands) {
  Node n;
  n.kind = kind;
  n.operands = std::move(operands);
  return Builder::make(std::move(n));
}

Expr make_power(const Expr& base, const Rational& e) {
  Node n;
  n.kind = Kind::Power;
  n.value = e;
  n.operands = {base};
  return Builder::make(std::move(n));
}

Expr make_call(const std::string& name, const Expr& arg, int order) {
  Node n;
  n.kind = Kind::Call;
  n.name = name;
  n.order = order;
  n.operands = {arg};
  return Builder::make(std::move(n));
}

// Factor of a product: compare bases, then exponents.
int compare_factor(const Expr& a, const Expr& b) {
  const Expr& ba = a.kind() == Kind::Power ? a.base() : a;
  const Expr& bb = b.kind() == Kind::Power ? b.base() : b;
  if (int c = compare(ba, bb)) return c;
  Rational ea = a.kind() == Kind::Power ? a.exponent() : Rational(1);
  Rational eb = b.kind() == Kind::Power ? b.exponent() : Rational(1);
  return sgn(cmp(ea, eb));
}

int compare_term(const Expr& a, const Expr& b) {
  auto [ca, ra] = split_coefficient(a);
  auto [cb, rb] = split_coefficient(b);
  if (int c = compare(ra, rb)) return c;
  return sgn(cmp(ca, cb));
}

Expr scale(const Rational& c, const Expr& rest) {
  if (c == 1) return rest;
  std::vector<Expr> ops{Expr(c)};
  if (rest.kind() == Kind::Product) {
    ops.insert(ops.end(), rest.operands().begin(), rest.operands().end());
  } else {
    ops.push_back(rest);
  }
  return make_nary(Kind::Product, std::move(ops));
}

bool is_even_integer(const Rational& r) {
  return is_integer(r) && mpz_even_p(r.get_num().get_mpz_t());
}

// c1 sin(x)^2 R + c2 cos(x)^2 R  ->  c1 R + (c2 - c1) cos(x)^2 R
bool apply_pythagoras(std::map<Expr, Rational, ExprLess>& coeffs) {
  for (auto it = coeffs.begin(); it != coeffs.end(); ++it) {
    if (it->second == 0) continue;
    const Expr& rest = it->first;
    std::vector<Expr> fs;
    if (rest.kind() == Kind::Product) {
      fs = rest.operands();
    } else {
      fs = {rest};
    }
    for (std::size_t k = 0; k < fs.size(); ++k) {
      const Expr& f = fs[k];
      if (f.kind() != Kind::Power || f.exponent() != 2) continue;
      const Expr& s = f.base();
      if (s.kind() != Kind::Call || s.name() != "sin") continue;
      std::vector<Expr> others;
      for (std::size_t j = 0; j < fs.size(); ++j) {
        if (j != k) others.push_back(fs[j]);
      }
      Expr r = mul(others);
      Expr cos_key = mul({r, pow(cos(s.arg()), 2)});
      auto jt = coeffs.find(cos_key);
      if (jt == coeffs.end() || jt->second == 0) continue;
      Rational c1 = it->second;
      jt->second -= c1;
      coeffs.erase(it);
      coeffs[r] += c1;
      return true;
    }
  }
  return false;
}

}  // namespace

Expr Builder::make(Node node) {
  std::size_t h = std::hash<int>{}(static_cast<int>(node.kind));
  switch (node.kind) {
    case Kind::Constant:
      h = mix(h, std::hash<std::string>{}(node.value.get_str()));
      break;
    case Kind::Symbol:
      h = mix(h, std::hash<std::string>{}(node.name));
      break;
    case Kind::Call:
      h = mix(h, std::hash<std::string>{}(node.name));
      h = mix(h, static_cast<std::size_t>(node.order));
      break;
    case Kind::Power:
      h = mix(h, std::hash<std::string>{}(node.value.get_str()));
      break;
    default:
      break;
  }
  for (const auto& op : node.operands) h = mix(h, op.hash());
  node.hash = h;
  return Expr(std::make_shared<const Node>(std::move(node)));
}

std::pair<Rational, Expr> split_coefficient(const Expr& term) {
  if (term.is_constant()) return {term.value(), Expr(1)};
  if (term.kind() == Kind::Product && term.operands().front().is_constant()) {
    const auto& ops = term.operands();
    if (ops.size() == 2) return {ops[0].value(), ops[1]};
    return {ops[0].value(),
            make_nary(Kind::Product, std::vector<Expr>(ops.begin() + 1, ops.end()))};
  }
  return {Rational(1), term};
}

Expr::Expr() {
  static const Expr zero{Rational(0)};
  node_ = zero.node_;
}

Expr::Expr(int value) : Expr(Rational(value)) {}
Expr::Expr(long value) : Expr(Rational(value)) {}

Expr::Expr(const Rational& value) {
  Node n;
  n.kind = Kind::Constant;
  n.value = value;
  n.value.canonicalize();
  node_ = Builder::make(std::move(n)).node_;
}

Expr Expr::symbol(std::string name) {
  Node n;
  n.kind = Kind::Symbol;
  n.name = std::move(name);
  return Builder::make(std::move(n));
}

Kind Expr::kind() const { return node_->kind; }
bool Expr::is_zero() const {
  return node_->kind == Kind::Constant && node_->value == 0;
}
bool Expr::is_one() const {
  return node_->kind == Kind::Constant && node_->value == 1;
}
const Rational& Expr::value() const { return node_->value; }
const std::string& Expr::name() const { return node_->name; }
int Expr::derivative_order() const { return node_->order; }
const std::vector<Expr>& Expr::operands() const { return node_->operands; }
const Expr& Expr::base() const { return node_->operands.front(); }
const Rational& Expr::exponent() const { return node_->value; }
const Expr& Expr::arg() const { return node_->operands.front(); }
std::size_t Expr::hash() const { return node_->hash; }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash()) return false;
  return compare(a, b) == 0;
}

int compare(const Expr& a, const Expr& b) {
  if (&Builder::node(a) == &Builder::node(b)) return 0;
  if (a.kind() != b.kind()) return sgn(kind_rank(a.kind()) - kind_rank(b.kind()));
  switch (a.kind()) {
    case Kind::Constant:
      return sgn(cmp(a.value(), b.value()));
    case Kind::Symbol:
      return sgn(a.name().compare(b.name()));
    case Kind::Call:
      if (int c = sgn(a.name().compare(b.name()))) return c;
      if (a.derivative_order() != b.derivative_order())
        return sgn(a.derivative_order() - b.derivative_order());
      return compare(a.arg(), b.arg());
    case Kind::Power:
      if (int c = compare(a.base(), b.base())) return c;
      return sgn(cmp(a.exponent(), b.exponent()));
    case Kind::Product:
    case Kind::Sum: {
      const auto& x = a.operands();
      const auto& y = b.operands();
      std::size_t n = std::min(x.size(), y.size());
      for (std::size_t i = 0; i < n; ++i) {
        if (int c = compare(x[i], y[i])) return c;
      }
      return sgn(static_cast<int>(x.size()) - static_cast<int>(y.size()));
    }
  }
  return 0;
}

bool is_builtin_function(std::string_view name) {
  return std::find(kBuiltins.begin(), kBuiltins.end(), name) != kBuiltins.end();
}

Expr add(std::vector<Expr> terms) {
  Rational constant = 0;
  std::map<Expr, Rational, ExprLess> coeffs;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    Expr t = terms[i];
    if (t.kind() == Kind::Sum) {
      for (const auto& s : t.operands()) terms.push_back(s);
    } else if (t.is_constant()) {
      constant += t.value();
    } else {
      auto [c, r] = split_coefficient(t);
      coeffs[r] += c;
    }
  }
  while (apply_pythagoras(coeffs)) {
  }
  std::vector<Expr> out;
  for (const auto& [rest, c] : coeffs) {
    if (c == 0) continue;
    if (rest.is_constant()) {
      constant += c * rest.value();
      continue;
    }
    out.push_back(scale(c, rest));
  }
  std::sort(out.begin(), out.end(),
            [](const Expr& a, const Expr& b) { return compare_term(a, b) < 0; });
  if (constant != 0) out.insert(out.begin(), Expr(constant));
  if (out.empty()) return Expr(0);
  if (out.size() == 1) return out.front();
  return make_nary(Kind::Sum, std::move(out));
}

Expr mul(std::vector<Expr> factors) {
  Rational coeff = 1;
  std::map<Expr, Rational, ExprLess> powers;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    Expr f = factors[i];
    switch (f.kind()) {
      case Kind::Constant:
        coeff *= f.value();
        break;
      case Kind::Product:
        for (const auto& g : f.operands()) factors.push_back(g);
        break;
      case Kind::Power:
        powers[f.base()] += f.exponent();
        break;
      default:
        powers[f] += 1;
        break;
    }
  }
  if (coeff == 0) return Expr(0);

  std::vector<Expr> rest;
  std::vector<Expr> sums;
  bool reflatten = false;
  for (const auto& [b, e] : powers) {
    if (e == 0) continue;
    if (b.kind() == Kind::Sum && is_integer(e) && e > 0 && e <= kMaxExpandedPower) {
      for (unsigned long k = 0; k < e.get_num().get_ui(); ++k) sums.push_back(b);
      continue;
    }
    Expr p = pow(b, e);
    if (p.is_constant()) {
      coeff *= p.value();
      continue;
    }
    bool same = (p.kind() == Kind::Power && p.base() == b) ||
                (p.kind() != Kind::Power && p == b);
    if (!same || p.kind() == Kind::Product) reflatten = true;
    rest.push_back(std::move(p));
  }
  if (coeff == 0) return Expr(0);
  if (reflatten) {
    rest.push_back(Expr(coeff));
    rest.insert(rest.end(), sums.begin(), sums.end());
    return mul(std::move(rest));
  }

  std::vector<Expr> plain;
  for (auto& r : rest) (r.kind() == Kind::Sum ? sums : plain).push_back(r);

  std::sort(plain.begin(), plain.end(),
            [](const Expr& a, const Expr& b) { return compare_factor(a, b) < 0; });
  Expr head;
  if (plain.empty()) {
    head = Expr(coeff);
  } else if (plain.size() == 1 && coeff == 1) {
    head = plain.front();
  } else {
    std::vector<Expr> ops;
    if (coeff != 1) ops.push_back(Expr(coeff));
    ops.insert(ops.end(), plain.begin(), plain.end());
    head = make_nary(Kind::Product, std::move(ops));
  }
  if (sums.empty()) return head;

  // distribute over sum factors
  std::vector<Expr> acc{head};
  for (const auto& s : sums) {
    std::vector<Expr> next;
    next.reserve(acc.size() * s.operands().size());
    for (const auto& a : acc) {
      for (const auto& t : s.operands()) next.push_back(mul({a, t}));
    }
    acc = std::move(next);
  }
  return add(std::move(acc));
}

Expr pow(const Expr& base, int exponent) { return pow(base, Rational(exponent)); }

Expr pow(const Expr& b, const Rational& e) {
  if (e == 0) return Expr(1);
  if (e == 1) return b;
  switch (b.kind()) {
    case Kind::Constant: {
      const Rational& v = b.value();
      if (v == 0) {
        if (e < 0) throw DomainError("division by zero");
        return Expr(0);
      }
      if (v == 1) return Expr(1);
      if (is_integer(e)) {
        long n = e.get_num().get_si();
        unsigned long k = static_cast<unsigned long>(n < 0 ? -n : n);
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), v.get_num().get_mpz_t(), k);
        mpz_pow_ui(den.get_mpz_t(), v.get_den().get_mpz_t(), k);
        Rational r = n < 0 ? Rational(den, num) : Rational(num, den);
        r.canonicalize();
        return Expr(r);
      }
      if (v > 0 && e.get_den().fits_ulong_p()) {
        unsigned long q = e.get_den().get_ui();
        mpz_class rn, rd;
        bool exact_num = mpz_root(rn.get_mpz_t(), v.get_num().get_mpz_t(), q) != 0;
        bool exact_den = mpz_root(rd.get_mpz_t(), v.get_den().get_mpz_t(), q) != 0;
        if (exact_num && exact_den) {
          Rational root(rn, rd);
          root.canonicalize();
          return pow(Expr(root), Rational(e.get_num()));
        }
      }
      return make_power(b, e);
    }
    case Kind::Power: {
      const Rational& f = b.exponent();
      if (is_integer(e) || !is_even_integer(f)) {
        Rational fe = f * e;
        fe.canonicalize();
        return pow(b.base(), fe);
      }
      return make_power(b, e);
    }
    case Kind::Product: {
      if (!is_integer(e)) return make_power(b, e);
      std::vector<Expr> fs;
      for (const auto& f : b.operands()) fs.push_back(pow(f, e));
      return mul(std::move(fs));
    }
    case Kind::Sum: {
      if (is_integer(e) && e > 0 && e <= kMaxExpandedPower) return mul(std::vector<Expr>(e.get_num().get_ui(), b));
      return make_power(b, e);
    }
    case Kind::Call:
      if (b.name() == "abs" && is_even_integer(e)) return pow(b.arg(), e);
      return make_power(b, e);
    default:
      return make_power(b, e);
  }
}

Expr call(const std::string& function, const Expr& arg, int derivative_order) {
  if (!is_builtin_function(function)) return make_call(function, arg, derivative_order);
  if (derivative_order != 0) {
    throw Error("builtin function '" + function + "' cannot carry derivative marks");
  }
  if (function == "sqrt") return pow(arg, Rational(1, 2));
  if (arg.is_constant()) {
    const Rational& v = arg.value();
    if (function == "abs") return Expr(Rational(abs(v)));
    if (function == "sign") return Expr(sgn(cmp(v, 0)));
    if (v == 0 && (function == "sin" || function == "tan")) return Expr(0);
    if (v == 0 && (function == "cos" || function == "exp")) return Expr(1);
    if (function == "log") {
      if (v <= 0) throw DomainError("log of non-positive constant");
      if (v == 1) return Expr(0);
    }
  }
  if (function == "abs" || function == "sign") {
    if (arg.kind() == Kind::Call && arg.name() == "abs") {
      return function == "abs" ? arg : call("sign", arg);
    }
    auto [c, rest] = split_coefficient(arg);
    if (c != 1 && arg.kind() == Kind::Product) {
      if (function == "abs") return Expr(Rational(abs(c))) * make_call("abs", rest, 0);
      return Expr(sgn(cmp(c, 0))) * make_call("sign", rest, 0);
    }
  }
  if (function == "log" && arg.kind() == Kind::Call && arg.name() == "exp") {
    return arg.arg();
  }
  return make_call(function, arg, 0);
}

Expr operator+(const Expr& a, const Expr& b) { return add({a, b}); }
Expr operator-(const Expr& a, const Expr& b) { return add({a, mul({Expr(-1), b})}); }
Expr operator*(const Expr& a, const Expr& b) { return mul({a, b}); }
Expr operator/(const Expr& a, const Expr& b) { return mul({a, pow(b, -1)}); }
Expr operator-(const Expr& a) { return mul({Expr(-1), a}); }
Expr& operator+=(Expr& a, const Expr& b) { return a = a + b; }
Expr& operator-=(Expr& a, const Expr& b) { return a = a - b; }
Expr& operator*=(Expr& a, const Expr& b) { return a = a * b; }

Expr sin(const Expr& x) { return call("sin", x); }
Expr cos(const Expr& x) { return call("cos", x); }
Expr exp(const Expr& x) { return call("exp", x); }
Expr log(const Expr& x) { return call("log", x); }
Expr sqrt(const Expr& x) { return call("sqrt", x); }
Expr abs(const Expr& x) { return call("abs", x); }
Expr sign(const Expr& x) { return call("sign", x); }

Expr canonicalize(const Expr& e) {
  switch (e.kind()) {
    case Kind::Constant:
    case Kind::Symbol:
      return e;
    case Kind::Call:
      return call(e.name(), canonicalize(e.arg()), e.derivative_order());
    case Kind::Power:
      return pow(canonicalize(e.base()), e.exponent());
    case Kind::Product: {
      std::vector<Expr> ops;
      for (const auto& o : e.operands()) ops.push_back(canonicalize(o));
      return mul(std::move(ops));
    }
    case Kind::Sum: {
      std::vector<Expr> ops;
      for (const auto& o : e.operands()) ops.push_back(canonicalize(o));
      return add(std::move(ops));
    }
  }
  return e;
}

}  // namespace geomech::sym
