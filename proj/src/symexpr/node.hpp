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

// Internal node layout shared by the symexpr translation units.

#include <functional>

#include "geomech/symexpr.hpp"

namespace geomech::sym {

struct Node {
  Kind kind;
  Rational value;     // Constant value or Power exponent
  std::string name;   // Symbol or Call
  int order = 0;      // Call derivative order
  std::vector<Expr> operands;
  std::size_t hash = 0;
};

struct Builder {
  static Expr make(Node node);
  static const Node& node(const Expr& e) { return *e.node_; }
};

/// Splits a term into (rational coefficient, coefficient-free rest).
std::pair<Rational, Expr> split_coefficient(const Expr& term);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace geomech::sym
