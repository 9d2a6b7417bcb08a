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

#include "node.hpp"

namespace geomech::sym {

bool depends_on(const Expr& e, const std::string& symbol) {
  switch (e.kind()) {
    case Kind::Constant:
      return false;
    case Kind::Symbol:
      return e.name() == symbol;
    default:
      for (const auto& o : e.operands()) {
        if (depends_on(o, symbol)) return true;
      }
      return false;
  }
}

namespace {

void collect(const Expr& e, std::set<std::string>& symbols, std::set<std::string>* functions) {
  switch (e.kind()) {
    case Kind::Constant:
      return;
    case Kind::Symbol:
      symbols.insert(e.name());
      return;
    case Kind::Call:
      if (functions && !is_builtin_function(e.name())) functions->insert(e.name());
      [[fallthrough]];
    default:
      for (const auto& o : e.operands()) collect(o, symbols, functions);
  }
}

}  // namespace

std::set<std::string> free_symbols(const Expr& e) {
  std::set<std::string> out;
  collect(e, out, nullptr);
  return out;
}

std::set<std::string> free_functions(const Expr& e) {
  std::set<std::string> symbols;
  std::set<std::string> out;
  collect(e, symbols, &out);
  return out;
}

Expr differentiate(const Expr& e, const std::string& x) {
  if (!depends_on(e, x)) return Expr(0);
  switch (e.kind()) {
    case Kind::Constant:
      return Expr(0);
    case Kind::Symbol:
      return Expr(e.name() == x ? 1 : 0);
    case Kind::Sum: {
      std::vector<Expr> terms;
      for (const auto& t : e.operands()) terms.push_back(differentiate(t, x));
      return add(std::move(terms));
    }
    case Kind::Product: {
      const auto& fs = e.operands();
      std::vector<Expr> terms;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        Expr di = differentiate(fs[i], x);
        if (di.is_zero()) continue;
        std::vector<Expr> prod;
        for (std::size_t j = 0; j < fs.size(); ++j) prod.push_back(j == i ? di : fs[j]);
        terms.push_back(mul(std::move(prod)));
      }
      return add(std::move(terms));
    }
    case Kind::Power: {
      const Rational& n = e.exponent();
      Rational m = n - 1;
      return mul({Expr(n), pow(e.base(), m), differentiate(e.base(), x)});
    }
    case Kind::Call: {
      const Expr& u = e.arg();
      Expr du = differentiate(u, x);
      const std::string& f = e.name();
      Expr outer;
      if (f == "sin") {
        outer = cos(u);
      } else if (f == "cos") {
        outer = -sin(u);
      } else if (f == "tan") {
        outer = 1 + pow(call("tan", u), 2);
      } else if (f == "exp") {
        outer = e;
      } else if (f == "log") {
        outer = pow(u, -1);
      } else if (f == "abs") {
        outer = sign(u);
      } else if (f == "sign") {
        // zero away from the puncture at 0
        return Expr(0);
      } else {
        outer = call(f, u, e.derivative_order() + 1);
      }
      return outer * du;
    }
  }
  return Expr(0);
}

Expr substitute(const Expr& e, const std::map<std::string, Expr>& map) {
  switch (e.kind()) {
    case Kind::Constant:
      return e;
    case Kind::Symbol: {
      auto it = map.find(e.name());
      return it == map.end() ? e : it->second;
    }
    case Kind::Call:
      return call(e.name(), substitute(e.arg(), map), e.derivative_order());
    case Kind::Power:
      return pow(substitute(e.base(), map), e.exponent());
    case Kind::Product: {
      std::vector<Expr> ops;
      for (const auto& o : e.operands()) ops.push_back(substitute(o, map));
      return mul(std::move(ops));
    }
    case Kind::Sum: {
      std::vector<Expr> ops;
      for (const auto& o : e.operands()) ops.push_back(substitute(o, map));
      return add(std::move(ops));
    }
  }
  return e;
}

}  // namespace geomech::sym
