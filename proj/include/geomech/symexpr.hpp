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

#pragma once

// Symbolic scalar engine: immutable canonical expression trees over chart
// coordinates, with parsing, differentiation, substitution, numeric
// evaluation, and a probabilistic zero test.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "geomech/errors.hpp"

namespace geomech::sym {

using Rational = mpq_class;

enum class Kind { Constant, Symbol, Call, Power, Product, Sum };

struct Node;

/// Immutable, canonical expression. Every value is built through the
/// canonicalizing constructors below, so two mathematically identical
/// polynomial expressions compare structurally equal.
class Expr {
 public:
  Expr();  // 0
  Expr(int value);  // NOLINT(google-explicit-constructor)
  Expr(long value);  // NOLINT(google-explicit-constructor)
  explicit Expr(const Rational& value);

  static Expr symbol(std::string name);

  Kind kind() const;
  bool is_constant() const { return kind() == Kind::Constant; }
  bool is_zero() const;
  bool is_one() const;

  const Rational& value() const;
  /// Symbol name or function name of a call.
  const std::string& name() const;
  /// Derivative order of an opaque function call (0 for the function itself).
  int derivative_order() const;
  /// Terms of a sum, factors of a product, {base} of a power, {arg} of a call.
  const std::vector<Expr>& operands() const;
  const Expr& base() const;
  const Rational& exponent() const;
  const Expr& arg() const;

  std::size_t hash() const;

  friend bool operator==(const Expr& a, const Expr& b);
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  friend struct Builder;
  std::shared_ptr<const Node> node_;
};

/// Deterministic structural total order (-1, 0, 1).
int compare(const Expr& a, const Expr& b);

struct ExprLess {
  bool operator()(const Expr& a, const Expr& b) const {
    return compare(a, b) < 0;
  }
};

Expr add(std::vector<Expr> terms);
Expr mul(std::vector<Expr> factors);
Expr pow(const Expr& base, const Rational& exponent);
Expr pow(const Expr& base, int exponent);
/// Builtin (sin, cos, tan, exp, log, sqrt, abs, sign) or opaque unary call.
Expr call(const std::string& function, const Expr& arg, int derivative_order = 0);

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr& operator+=(Expr& a, const Expr& b);
Expr& operator-=(Expr& a, const Expr& b);
Expr& operator*=(Expr& a, const Expr& b);

Expr sin(const Expr& x);
Expr cos(const Expr& x);
Expr exp(const Expr& x);
Expr log(const Expr& x);
Expr sqrt(const Expr& x);
Expr abs(const Expr& x);
Expr sign(const Expr& x);

bool is_builtin_function(std::string_view name);

/// Rebuilds e through the canonical constructors. Idempotent.
Expr canonicalize(const Expr& e);

std::string to_string(const Expr& e);
std::ostream& operator<<(std::ostream& os, const Expr& e);

/// Parses the infix grammar. Identifiers must be in `symbols`; identifiers
/// followed by `(` must be builtins or in `functions` (opaque unary
/// functions, which may carry trailing primes for derivatives: f'(x)).
Expr parse(std::string_view text, const std::vector<std::string>& symbols,
           const std::vector<std::string>& functions = {});

Expr differentiate(const Expr& e, const std::string& x);

/// Simultaneous substitution of symbols.
Expr substitute(const Expr& e, const std::map<std::string, Expr>& map);

std::set<std::string> free_symbols(const Expr& e);
/// Names of opaque functions appearing in e.
std::set<std::string> free_functions(const Expr& e);
bool depends_on(const Expr& e, const std::string& symbol);

/// Concrete meaning of an opaque unary function: body in `variable`.
/// Derivatives of the opaque function evaluate derivatives of the body.
struct FunctionBinding {
  std::string variable;
  Expr body;
};

struct EvalPoint {
  std::map<std::string, double> values;
  std::map<std::string, FunctionBinding> functions;
};

std::string format_point(const EvalPoint& p);

/// IEEE evaluation. Throws DomainError (log of non-positive, division by 0,
/// even root of a negative, non-finite result) or UnboundSymbol.
double eval(const Expr& e, const EvalPoint& p);

/// Value together with a magnitude bound (the value computed with every
/// sum replaced by the sum of absolute values). Used to scale tolerances.
struct Evaluated {
  double value;
  double magnitude;
};
Evaluated eval_with_magnitude(const Expr& e, const EvalPoint& p);

/// Settings for every sampling-based decision.
struct Sampling {
  int samples = 16;
  double tol = 1e-9;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  double lo = -2.0;
  double hi = 2.0;
  /// Explicit bindings for opaque functions; others get random smooth ones.
  std::map<std::string, FunctionBinding> bindings;
  /// inverse name -> function name, e.g. {"finv", "f"}.
  std::map<std::string, std::string> inverse_of;

  Sampling with_seed(std::uint64_t s) const {
    Sampling copy = *this;
    copy.seed = s;
    return copy;
  }
};

/// Draws admissible sample points: uniform coordinates on [lo, hi] and
/// freshly drawn bindings for unbound opaque functions.
class PointSampler {
 public:
  PointSampler(const std::set<std::string>& symbols,
               const std::set<std::string>& functions, const Sampling& s,
               std::uint64_t stream = 0);
  EvalPoint next();

 private:
  std::vector<std::string> symbols_;
  std::vector<std::string> functions_;
  Sampling sampling_;
  std::uint64_t state_;
  double uniform(double lo, double hi);
  Rational uniform_rational(double lo, double hi);
};

/// Up to `count` points at which every expression in `exprs` evaluates.
std::vector<EvalPoint> sample_points(const std::vector<Expr>& exprs, int count,
                                     const Sampling& s);

enum class Verdict { Equal, NotEqual, Undecided };

struct EqualResult {
  Verdict verdict = Verdict::Undecided;
  std::optional<EvalPoint> witness;
  double lhs = 0.0;
  double rhs = 0.0;
  bool is_equal() const { return verdict == Verdict::Equal; }
};

/// Probabilistic equality: exact when the canonical difference is 0,
/// otherwise agreement within relative tol at n admissible random points.
/// NotEqual is definitive and carries a witness.
EqualResult equal(const Expr& a, const Expr& b, const Sampling& s = {});
EqualResult equal(const Expr& a, const Expr& b, int n_samples, double tol);

/// Outcome of a verification: pass/fail with a witness and residual.
struct CheckResult {
  enum class Status { Pass, Fail, Undecided };
  Status status = Status::Pass;
  std::optional<EvalPoint> witness;
  std::string residual;
  std::string detail;

  bool passed() const { return status == Status::Pass; }
  explicit operator bool() const { return passed(); }

  static CheckResult pass(std::string detail = {});
  static CheckResult fail(std::string detail, std::string residual = {},
                          std::optional<EvalPoint> witness = std::nullopt);
};

/// Checks a == b; on failure the residual is a − b and `label` names the
/// component.
CheckResult check_equal(const Expr& a, const Expr& b, const Sampling& s,
                        const std::string& label = {});
CheckResult check_zero(const Expr& e, const Sampling& s,
                       const std::string& label = {});
/// First failing check wins; undecided only if nothing fails.
CheckResult combine(const std::vector<CheckResult>& results);

}  // namespace geomech::sym
