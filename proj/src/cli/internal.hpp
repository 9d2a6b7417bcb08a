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

// Helpers shared by the spec loader and the check runner.

#include <functional>

#include "geomech/cli.hpp"

namespace geomech::cli::detail {

struct Outcome {
  Status status = Status::Pass;
  std::optional<PointValues> witness;
  std::string residual;
  std::string detail;
  std::string result;
};

Outcome from_check(const sym::CheckResult& r);

/// A resolved check waiting for its sampling parameters.
using Prepared = std::function<Outcome(const Sampling&)>;

/// Resolves every reference and expression of a check. Throws ParseError,
/// UnresolvedReference.
Prepared prepare(const SystemSpec& spec, const CheckSpec& check);

[[noreturn]] void fail_at(const Entry& e, const std::string& what);

/// Parses an expression over `symbols`, the spec parameters and functions.
Expr parse_expr(const SystemSpec& spec, const Entry& e, const std::vector<std::string>& symbols);
int parse_int(const Entry& e);
double parse_real(const Entry& e);
std::vector<std::string> split_list(const std::string& text);

template <typename T>
const T& lookup(const std::map<std::string, T>& table, const Entry& e, const char* what) {
  auto it = table.find(e.value);
  if (it == table.end()) {
    throw UnresolvedReference("unresolved " + std::string(what) + " '" + e.value + "' (line " + std::to_string(e.line) + ")");
  }
  return it->second;
}

}  // namespace geomech::cli::detail
