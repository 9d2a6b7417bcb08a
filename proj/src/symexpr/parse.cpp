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
#include <cctype>

#include "node.hpp"

namespace geomech::sym {
namespace {

// expr   := term (('+' | '-') term)*
// term   := unary (('*' | '/') unary)*
// unary  := '-' unary | power
// power  := atom ('^' unary)?          right associative via unary
// atom   := number | ident | ident '\''* '(' expr ')' | '(' expr ')'
class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& symbols,
         const std::vector<std::string>& functions)
      : text_(text), symbols_(symbols), functions_(functions) {}

  Expr run() {
    Expr e = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  std::string_view text_;
  const std::vector<std::string>& symbols_;
  const std::vector<std::string>& functions_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr expression() {
    std::vector<Expr> terms{term()};
    for (;;) {
      if (accept('+')) {
        terms.push_back(term());
      } else if (accept('-')) {
        terms.push_back(-term());
      } else {
        return add(std::move(terms));
      }
    }
  }

  Expr term() {
    std::vector<Expr> factors{unary()};
    for (;;) {
      if (accept('*')) {
        factors.push_back(unary());
      } else if (accept('/')) {
        std::size_t at = pos_;
        Expr d = unary();
        if (d.is_zero()) throw SyntaxError("division by zero", at);
        factors.push_back(pow(d, -1));
      } else {
        return mul(std::move(factors));
      }
    }
  }

  Expr unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (!accept('^')) return base;
    std::size_t at = pos_;
    Expr e = unary();
    if (!e.is_constant()) throw SyntaxError("exponent must be a rational constant", at);
    return pow(base, e.value());
  }

  Expr number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    mpz_class num(std::string(text_.substr(start, pos_ - start)));
    mpz_class den = 1;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      std::size_t frac = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        num = num * 10 + (text_[pos_] - '0');
        den *= 10;
        ++pos_;
      }
      if (pos_ == frac) fail("digits expected after '.'");
    }
    Rational r(num, den);
    r.canonicalize();
    return Expr(r);
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  bool is_function(const std::string& name) const {
    return is_builtin_function(name) ||
           std::find(functions_.begin(), functions_.end(), name) != functions_.end();
  }

  Expr atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      if (c == '.') fail("digits expected before '.'");
      return number();
    }
    if (c == '(') {
      ++pos_;
      Expr e = expression();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      std::string name = identifier();
      int primes = 0;
      while (pos_ < text_.size() && text_[pos_] == '\'') {
        ++primes;
        ++pos_;
      }
      skip_space();
      bool applied = pos_ < text_.size() && text_[pos_] == '(';
      if (applied || primes > 0) {
        if (!is_function(name)) throw UnknownSymbol(name);
        if (!applied) fail("expected '(' after derivative marks");
        if (primes > 0 && is_builtin_function(name)) {
          throw SyntaxError("derivative marks are only allowed on opaque functions", start);
        }
        ++pos_;
        Expr arg = expression();
        if (!accept(')')) fail("expected ')'");
        return call(name, arg, primes);
      }
      if (std::find(symbols_.begin(), symbols_.end(), name) == symbols_.end()) {
        throw UnknownSymbol(name);
      }
      return Expr::symbol(name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

Expr parse(std::string_view text, const std::vector<std::string>& symbols,
           const std::vector<std::string>& functions) {
  try {
    return Parser(text, symbols, functions).run();
  } catch (const DomainError& e) {
    throw SyntaxError(e.what(), 0);
  }
}

}  // namespace geomech::sym
