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

// Batch front end: system specification files, check dispatch and JSONL
// reports.
//
// A spec file is a list of sections
//
//   [kind "name"]
//   key = "value"
//
// with `#` comment lines. Section kinds: chart, parameter, function, field,
// form, tensor, bivector, structure, diffeo, lagrangian, hamiltonian, check.
// Expression values use the symexpr grammar over the chart coordinates, the
// declared parameters and the declared functions.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geomech/hamiltonian.hpp"
#include "geomech/lagrangian.hpp"

namespace geomech::cli {

using calc::Bivector;
using calc::Chart;
using calc::DiffForm;
using calc::Diffeo;
using calc::Tensor11;
using calc::VectorField;
using sym::Expr;
using sym::Sampling;

struct Entry {
  std::string key;
  std::string value;
  int line = 0;
  int value_col = 0;  // column of the first character inside the quotes
};

struct Section {
  std::string kind;
  std::string name;
  int line = 0;
  std::vector<Entry> entries;

  const Entry* find(const std::string& key) const;
};

/// Splits the text into sections. Throws ParseError.
std::vector<Section> parse_sections(std::string_view text);

struct CheckSpec {
  std::string id;
  std::string kind;
  std::map<std::string, Entry> args;
  int line = 0;
};

struct SystemSpec {
  std::string source;  // file name shown in reports
  std::map<std::string, Chart> charts;
  std::vector<std::string> parameters;
  std::vector<std::string> functions;
  Sampling sampling;  // function bindings and inverse pairs
  std::map<std::string, VectorField> fields;
  std::map<std::string, DiffForm> forms;
  std::map<std::string, Tensor11> tensors;
  std::map<std::string, Bivector> bivectors;
  std::map<std::string, tangent::TangentStructure> structures;
  std::map<std::string, Diffeo> diffeos;
  std::map<std::string, lagrange::LagrangianSystem> lagrangians;
  std::map<std::string, hamilton::HamiltonianSystem> hamiltonians;
  std::vector<CheckSpec> checks;  // declaration order
};

/// Throws ParseError, UnresolvedReference, or the engine error raised while
/// building an object (e.g. NotInverse for a diffeo).
SystemSpec parse_spec(std::string_view text, std::string source = "<memory>");
SystemSpec load_spec(const std::string& path);

/// Check kinds understood by `run`.
const std::vector<std::string>& check_kinds();

struct RunOptions {
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  int samples = 16;
  double tol = 1e-9;
};

enum class Status { Pass, Fail, Degenerate, Undecided };
const char* to_string(Status s);

struct CheckRecord {
  std::string id;
  std::string kind;
  Status status = Status::Pass;
  std::optional<PointValues> witness;
  std::string residual;
  std::string detail;
  std::string result;  // printed object the check computed, if any
  std::uint64_t seed = 0;
  double wall_ms = 0.0;
};

struct Report {
  std::string source;
  RunOptions options;
  std::vector<CheckRecord> records;

  bool all_passed() const;
};

/// Seed of one check, a function of the root seed and the check id only.
std::uint64_t check_seed(std::uint64_t root, const std::string& id);

/// Runs the checks named in `only` (all when empty) in declaration order.
/// Throws UnknownCheck.
Report run(const SystemSpec& spec, const std::vector<std::string>& only = {},
           const RunOptions& options = {});

/// Header line followed by one line per check. Wall time is written only
/// when `timing` is set so that reports are reproducible byte for byte.
std::string to_jsonl(const Report& report, bool timing = false);

}  // namespace geomech::cli
