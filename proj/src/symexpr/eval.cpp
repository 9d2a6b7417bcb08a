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

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "node.hpp"

namespace geomech {

std::string format_point(const PointValues& point) {
  std::ostringstream os;
  os << std::setprecision(17) << '{';
  bool first = true;
  for (const auto& [k, v] : point) {
    if (!first) os << ", ";
    os << k << '=' << v;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace geomech

namespace geomech::sym {
namespace {

class Evaluator {
 public:
  explicit Evaluator(const EvalPoint& p) : p_(p) {}
  Evaluator(const EvalPoint& p, const std::string* local, double local_value)
      : p_(p), local_(local), local_value_(local_value) {}

  Evaluated run(const Expr& e) const {
    Evaluated r = visit(e);
    if (!std::isfinite(r.value)) throw DomainError("non-finite value");
    return r;
  }

 private:
  const EvalPoint& p_;
  const std::string* local_ = nullptr;
  double local_value_ = 0.0;

  static double finite(double v) {
    if (!std::isfinite(v)) throw DomainError("non-finite value");
    return v;
  }

  double opaque_derivative(const Expr& e, double a, int extra) const {
    auto it = p_.functions.find(e.name());
    if (it == p_.functions.end()) throw UnboundSymbol(e.name());
    const FunctionBinding& b = it->second;
    Expr body = b.body;
    for (int k = 0; k < e.derivative_order() + extra; ++k) body = differentiate(body, b.variable);
    return Evaluator(p_, &b.variable, a).run(body).value;
  }

  Evaluated visit(const Expr& e) const {
    switch (e.kind()) {
      case Kind::Constant: {
        double v = e.value().get_d();
        return {v, std::fabs(v)};
      }
      case Kind::Symbol: {
        if (local_ && e.name() == *local_) return {local_value_, std::fabs(local_value_)};
        auto it = p_.values.find(e.name());
        if (it == p_.values.end()) throw UnboundSymbol(e.name());
        double v = it->second;
        if (!std::isfinite(v)) throw DomainError("non-finite binding for " + e.name());
        return {v, std::fabs(v)};
      }
      case Kind::Sum: {
        double v = 0.0;
        double m = 0.0;
        for (const auto& t : e.operands()) {
          Evaluated r = visit(t);
          v += r.value;
          m += r.magnitude;
        }
        return {finite(v), m};
      }
      case Kind::Product: {
        double v = 1.0;
        double m = 1.0;
        for (const auto& f : e.operands()) {
          Evaluated r = visit(f);
          v *= r.value;
          m *= r.magnitude;
        }
        return {finite(v), m};
      }
      case Kind::Power: {
        Evaluated b = visit(e.base());
        const Rational& n = e.exponent();
        double nd = n.get_d();
        if (b.value == 0.0 && n < 0) throw DomainError("division by zero");
        double v;
        if (is_integer(n)) {
          v = std::pow(b.value, static_cast<int>(n.get_num().get_si()));
        } else {
          if (b.value < 0.0) throw DomainError("fractional power of a negative number");
          v = std::pow(b.value, nd);
        }
        v = finite(v);
        double slope = b.value == 0.0 ? 0.0 : std::fabs(nd * v / b.value);
        return {v, std::fabs(v) + slope * b.magnitude};
      }
      case Kind::Call: {
        Evaluated a = visit(e.arg());
        const std::string& f = e.name();
        double x = a.value;
        double v;
        double slope;
        if (f == "sin") {
          v = std::sin(x);
          slope = std::fabs(std::cos(x));
        } else if (f == "cos") {
          v = std::cos(x);
          slope = std::fabs(std::sin(x));
        } else if (f == "tan") {
          v = std::tan(x);
          slope = 1.0 + v * v;
        } else if (f == "exp") {
          v = std::exp(x);
          slope = v;
        } else if (f == "log") {
          if (x <= 0.0) throw DomainError("log of non-positive value");
          v = std::log(x);
          slope = 1.0 / x;
        } else if (f == "abs") {
          v = std::fabs(x);
          slope = 1.0;
        } else if (f == "sign") {
          v = static_cast<double>((x > 0.0) - (x < 0.0));
          slope = 0.0;
        } else {
          v = opaque_derivative(e, x, 0);
          slope = std::fabs(opaque_derivative(e, x, 1));
        }
        v = finite(v);
        return {v, std::fabs(v) + slope * a.magnitude};
      }
    }
    return {0.0, 0.0};
  }
};

}  // namespace

Evaluated eval_with_magnitude(const Expr& e, const EvalPoint& p) { return Evaluator(p).run(e); }

double eval(const Expr& e, const EvalPoint& p) { return Evaluator(p).run(e).value; }

std::string format_point(const EvalPoint& p) {
  std::string out = geomech::format_point(p.values);
  for (const auto& [name, b] : p.functions) {
    out += " " + name + "(" + b.variable + ")=" + to_string(b.body);
  }
  return out;
}

}  // namespace geomech::sym
