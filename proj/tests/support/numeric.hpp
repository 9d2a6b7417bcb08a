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

// Finite-difference oracles, independent of the symbolic differentiator.

#include <cmath>
#include <string>

#include "geomech/symexpr.hpp"

namespace geomech::testing {

/// Central difference of e in `x` at p with step h.
inline double central_difference(const sym::Expr& e, const sym::EvalPoint& p,
                                 const std::string& x, double h = 1e-5) {
  sym::EvalPoint plus = p;
  sym::EvalPoint minus = p;
  plus.values[x] += h;
  minus.values[x] -= h;
  return (sym::eval(e, plus) - sym::eval(e, minus)) / (2.0 * h);
}

inline double relative_error(double approx, double exact) {
  return std::fabs(approx - exact) / std::max(1.0, std::fabs(exact));
}

}  // namespace geomech::testing
