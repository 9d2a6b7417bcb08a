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

#include <sstream>

#include "node.hpp"

namespace geomech::sym {
namespace {

enum Context { kTop = 0, kFactor = 1, kBase = 2 };

void print(std::ostream& os, const Expr& e, int ctx);

void print_rational(std::ostream& os, const Rational& r, int ctx) {
  bool plain = r >= 0 && is_integer(r);
  if (ctx >= kBase && !plain) {
    os << '(' << r.get_str() << ')';
  } else {
    os << r.get_str();
  }
}

void print_product(std::ostream& os, const Expr& e, int ctx) {
  const auto& ops = e.operands();
  std::size_t first = 0;
  bool parens = ctx >= kBase;
  if (parens) os << '(';
  if (ops.front().is_constant()) {
    const Rational& c = ops.front().value();
    if (c == -1) {
      os << '-';
    } else {
      os << c.get_str() << '*';
    }
    first = 1;
  }
  for (std::size_t i = first; i < ops.size(); ++i) {
    if (i > first) os << '*';
    print(os, ops[i], kFactor);
  }
  if (parens) os << ')';
}

void print_sum(std::ostream& os, const Expr& e, int ctx) {
  bool parens = ctx >= kFactor;
  if (parens) os << '(';
  bool first = true;
  for (const auto& t : e.operands()) {
    if (first) {
      print(os, t, kTop);
      first = false;
      continue;
    }
    auto [c, rest] = split_coefficient(t);
    if (c < 0) {
      os << " - ";
      print(os, rest.is_one() ? Expr(Rational(-c)) : mul({Expr(Rational(-c)), rest}), kTop);
    } else {
      os << " + ";
      print(os, t, kTop);
    }
  }
  if (parens) os << ')';
}

void print(std::ostream& os, const Expr& e, int ctx) {
  switch (e.kind()) {
    case Kind::Constant:
      print_rational(os, e.value(), ctx);
      return;
    case Kind::Symbol:
      os << e.name();
      return;
    case Kind::Call:
      os << e.name() << std::string(static_cast<std::size_t>(e.derivative_order()), '\'')
         << '(';
      print(os, e.arg(), kTop);
      os << ')';
      return;
    case Kind::Power: {
      if (ctx >= kBase) os << '(';
      print(os, e.base(), kBase);
      os << '^';
      const Rational& x = e.exponent();
      if (x > 0 && is_integer(x)) {
        os << x.get_str();
      } else {
        os << '(' << x.get_str() << ')';
      }
      if (ctx >= kBase) os << ')';
      return;
    }
    case Kind::Product:
      print_product(os, e, ctx);
      return;
    case Kind::Sum:
      print_sum(os, e, ctx);
      return;
  }
}

}  // namespace

std::string to_string(const Expr& e) {
  std::ostringstream os;
  print(os, e, kTop);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Expr& e) {
  print(os, e, kTop);
  return os;
}

}  // namespace geomech::sym
