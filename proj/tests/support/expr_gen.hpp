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

// Deterministic random expression generators shared by the test suites.

#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "geomech/symexpr.hpp"

namespace geomech::testing {

class ExprGen {
 public:
  explicit ExprGen(std::uint64_t seed) : rng_(seed) {}

  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  sym::Rational small_rational() {
    int num = uniform_int(-5, 5);
    int den = uniform_int(1, 3);
    return sym::Rational(num, den);
  }

  /// Random polynomial in `vars` with total degree <= max_degree.
  sym::Expr polynomial(const std::vector<std::string>& vars, int max_degree, int terms) {
    std::vector<sym::Expr> out;
    for (int t = 0; t < terms; ++t) {
      sym::Expr term(small_rational());
      int degree = uniform_int(0, max_degree);
      for (int k = 0; k < degree; ++k) {
        term = term * sym::Expr::symbol(vars[uniform_int(0, static_cast<int>(vars.size()) - 1)]);
      }
      out.push_back(term);
    }
    return sym::add(out);
  }

  /// Random smooth expression: polynomials wrapped in sin, cos, exp and
  /// strictly positive denominators.
  sym::Expr smooth(const std::vector<std::string>& vars, int depth) {
    if (depth == 0) return polynomial(vars, 2, 2);
    switch (uniform_int(0, 5)) {
      case 0:
        return smooth(vars, depth - 1) + smooth(vars, depth - 1);
      case 1:
        return smooth(vars, depth - 1) * smooth(vars, depth - 1);
      case 2:
        return sym::sin(smooth(vars, depth - 1));
      case 3:
        return sym::cos(smooth(vars, depth - 1));
      case 4:
        return sym::exp(polynomial(vars, 1, 2));
      default: {
        sym::Expr d = smooth(vars, depth - 1);
        return smooth(vars, depth - 1) / (sym::Expr(2) + d * d);
      }
    }
  }

 private:
  std::mt19937_64 rng_;
};

inline std::vector<std::string> read_corpus(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

}  // namespace geomech::testing
