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

#include <json.hpp>

#include "geomech/cli.hpp"

namespace geomech::cli {

std::string to_jsonl(const Report& report, bool timing) {
  using json = nlohmann::ordered_json;
  std::string out;
  json header;
  header["record"] = "header";
  header["tool"] = "geomech";
  header["spec"] = report.source;
  header["seed"] = report.options.seed;
  header["samples"] = report.options.samples;
  header["tol"] = report.options.tol;
  json ids = json::array();
  for (const auto& r : report.records) ids.push_back(r.id);
  header["checks"] = ids;
  out += header.dump() + "\n";
  for (const auto& r : report.records) {
    json j;
    j["record"] = "check";
    j["id"] = r.id;
    j["kind"] = r.kind;
    j["status"] = to_string(r.status);
    j["seed"] = r.seed;
    if (r.witness) {
      json w = json::object();
      for (const auto& [name, value] : *r.witness) w[name] = value;
      j["witness"] = w;
    } else {
      j["witness"] = nullptr;
    }
    j["residual"] = r.residual;
    j["detail"] = r.detail;
    if (!r.result.empty()) j["result"] = r.result;
    if (timing) j["wall_ms"] = r.wall_ms;
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace geomech::cli
