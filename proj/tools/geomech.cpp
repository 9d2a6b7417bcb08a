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

// geomech check <spec-file> [--only id,...] [--seed N] [--samples N]
//               [--tol X] [--report out.jsonl] [--timing]
//
// Exit codes: 0 all checks pass, 1 a check did not pass, 2 usage or spec
// error. GEOMECH_SEED overrides --seed.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "geomech/cli.hpp"

namespace {

constexpr int kUsageError = 2;

bool parse_seed(const char* text, std::uint64_t& out) {
  try {
    std::size_t used = 0;
    std::string s(text);
    unsigned long long v = std::stoull(s, &used, 0);
    if (used != s.size()) return false;
    out = v;
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic verification of geometric mechanics specifications", "geomech"};
  app.require_subcommand(1);
  CLI::App* check = app.add_subcommand("check", "Run the checks of a spec file");

  std::string spec_path;
  std::vector<std::string> only;
  std::uint64_t seed = geomech::cli::RunOptions{}.seed;
  int samples = 16;
  double tol = 1e-9;
  std::string report_path;
  bool timing = false;
  check->add_option("spec", spec_path, "System specification file")->required();
  check->add_option("--only", only, "Comma-separated check ids")->delimiter(',');
  check->add_option("--seed", seed, "Root sampling seed");
  check->add_option("--samples", samples, "Sample points per equality test")->check(CLI::Range(1, 100000));
  check->add_option("--tol", tol, "Relative tolerance")->check(CLI::PositiveNumber);
  check->add_option("--report", report_path, "Write the JSONL report here instead of stdout");
  check->add_flag("--timing", timing, "Include wall time per check in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  if (const char* env = std::getenv("GEOMECH_SEED")) {
    if (!parse_seed(env, seed)) {
      std::cerr << "geomech: GEOMECH_SEED is not an unsigned integer: " << env << "\n";
      return kUsageError;
    }
  }

  geomech::cli::Report report;
  try {
    geomech::cli::SystemSpec spec = geomech::cli::load_spec(spec_path);
    report = geomech::cli::run(spec, only, {seed, samples, tol});
  } catch (const geomech::ParseError& e) {
    std::cerr << spec_path << ": " << e.what() << "\n";
    return kUsageError;
  } catch (const geomech::Error& e) {
    std::cerr << "geomech: " << e.what() << "\n";
    return kUsageError;
  }

  std::string text = geomech::cli::to_jsonl(report, timing);
  if (report_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(report_path, std::ios::binary);
    if (!out || !(out << text)) {
      std::cerr << "geomech: cannot write report '" << report_path << "'\n";
      return kUsageError;
    }
  }
  for (const auto& r : report.records) {
    if (r.status != geomech::cli::Status::Pass) {
      std::cerr << r.id << ": " << geomech::cli::to_string(r.status) << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
    }
  }
  return report.all_passed() ? 0 : 1;
}
