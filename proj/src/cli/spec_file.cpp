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
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "internal.hpp"

namespace geomech::cli {

using detail::fail_at;
using detail::lookup;
using detail::parse_expr;

const Entry* Section::find(const std::string& key) const {
  for (const auto& e : entries) {
    if (e.key == key) return &e;
  }
  return nullptr;
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-'; }

struct Cursor {
  std::string_view s;
  std::size_t i = 0;
  int line = 0;

  int col() const { return static_cast<int>(i) + 1; }
  bool done() const { return i >= s.size(); }
  void skip_ws() {
    while (!done() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
  }
  [[noreturn]] void error(const std::string& what) const { throw ParseError(what, line, col()); }
  void expect(char c, const char* what) {
    if (done() || s[i] != c) error(std::string("expected ") + what);
    ++i;
  }
  /// Only blanks or a comment may follow.
  void finish() {
    skip_ws();
    if (!done() && s[i] != '#') error("unexpected trailing text");
  }
  std::string quoted(int& value_col) {
    expect('"', "'\"'");
    value_col = col();
    std::size_t end = s.find('"', i);
    if (end == std::string_view::npos) error("unterminated string");
    std::string out(s.substr(i, end - i));
    i = end + 1;
    return out;
  }
};

}  // namespace

std::vector<Section> parse_sections(std::string_view text) {
  std::vector<Section> out;
  std::set<std::pair<std::string, std::string>> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    Cursor c{line, 0, ++line_no};
    c.skip_ws();
    if (c.done() || line[c.i] == '#') continue;
    if (line[c.i] == '[') {
      ++c.i;
      c.skip_ws();
      if (c.done() || !is_ident_start(line[c.i])) c.error("expected section kind");
      std::size_t start = c.i;
      while (!c.done() && is_ident(line[c.i])) ++c.i;
      Section sec;
      sec.kind = std::string(line.substr(start, c.i - start));
      sec.line = line_no;
      c.skip_ws();
      int name_col = 0;
      sec.name = c.quoted(name_col);
      if (sec.name.empty()) throw ParseError("empty section name", line_no, name_col);
      c.skip_ws();
      c.expect(']', "']'");
      c.finish();
      if (!seen.insert({sec.kind, sec.name}).second) {
        throw ParseError("duplicate section " + sec.kind + " \"" + sec.name + "\"", line_no, 1);
      }
      out.push_back(std::move(sec));
      continue;
    }
    if (out.empty()) c.error("entry outside a section");
    int key_col = c.col();
    std::size_t start = c.i;
    while (!c.done() && line[c.i] != '=' && line[c.i] != ' ' && line[c.i] != '\t') ++c.i;
    Entry e;
    e.key = std::string(line.substr(start, c.i - start));
    e.line = line_no;
    c.skip_ws();
    c.expect('=', "'='");
    c.skip_ws();
    e.value = c.quoted(e.value_col);
    c.finish();
    Section& sec = out.back();
    if (sec.find(e.key)) throw ParseError("duplicate key '" + e.key + "'", line_no, key_col);
    sec.entries.push_back(std::move(e));
  }
  return out;
}

namespace detail {

void fail_at(const Entry& e, const std::string& what) { throw ParseError(what, e.line, e.value_col); }

Expr parse_expr(const SystemSpec& spec, const Entry& e, const std::vector<std::string>& symbols) {
  std::vector<std::string> names = symbols;
  names.insert(names.end(), spec.parameters.begin(), spec.parameters.end());
  try {
    return sym::parse(e.value, names, spec.functions);
  } catch (const SyntaxError& err) {
    throw ParseError(err.what(), e.line, e.value_col + static_cast<int>(err.position()));
  } catch (const UnknownSymbol& err) {
    auto at = e.value.find(err.name());
    throw ParseError(err.what(), e.line, e.value_col + static_cast<int>(at == std::string::npos ? 0 : at));
  }
}

int parse_int(const Entry& e) {
  std::istringstream in(e.value);
  int v = 0;
  if (!(in >> v) || !(in >> std::ws).eof()) fail_at(e, "expected an integer");
  return v;
}

double parse_real(const Entry& e) {
  std::istringstream in(e.value);
  double v = 0;
  if (!(in >> v) || !(in >> std::ws).eof()) fail_at(e, "expected a number");
  return v;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

}  // namespace detail

namespace {

const std::vector<std::string> kKinds = {"parameter", "function", "chart", "field", "form", "tensor", "bivector",
                                         "structure", "diffeo", "lagrangian", "hamiltonian", "check"};

const Entry& require(const Section& sec, const std::string& key) {
  const Entry* e = sec.find(key);
  if (!e) throw ParseError(sec.kind + " \"" + sec.name + "\" needs '" + key + "'", sec.line, 1);
  return *e;
}

void reject_unknown_keys(const Section& sec, const std::set<std::string>& allowed) {
  for (const auto& e : sec.entries) {
    if (!allowed.count(e.key)) fail_at(e, "unknown key '" + e.key + "' in " + sec.kind);
  }
}

bool valid_identifier(const std::string& s) {
  if (s.empty() || !is_ident_start(s[0])) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

void require_identifier(const Section& sec) {
  if (!valid_identifier(sec.name)) {
    throw ParseError("'" + sec.name + "' is not a valid identifier", sec.line, 1);
  }
}

std::size_t coord_index(const Chart& chart, const Entry& e, const std::string& name) {
  const auto& c = chart.coords();
  auto it = std::find(c.begin(), c.end(), name);
  if (it == c.end()) fail_at(e, "'" + name + "' is not a coordinate of chart '" + chart.name() + "'");
  return static_cast<std::size_t>(it - c.begin());
}

/// "d/dx" -> index of x
std::size_t vector_basis(const Chart& chart, const Entry& e, const std::string& text) {
  if (text.rfind("d/d", 0) != 0) fail_at(e, "expected d/d<coordinate> in key '" + e.key + "'");
  return coord_index(chart, e, text.substr(3));
}

/// "dx" -> index of x
std::size_t form_basis(const Chart& chart, const Entry& e, const std::string& text) {
  if (text.size() < 2 || text[0] != 'd') fail_at(e, "expected d<coordinate> in key '" + e.key + "'");
  return coord_index(chart, e, text.substr(1));
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

void load_chart(SystemSpec& spec, const Section& sec) {
  reject_unknown_keys(sec, {"coords"});
  const Entry& coords = require(sec, "coords");
  std::vector<std::string> names = detail::split_list(coords.value);
  for (const auto& n : names) {
    if (!valid_identifier(n)) fail_at(coords, "'" + n + "' is not a valid coordinate name");
    if (std::count(spec.parameters.begin(), spec.parameters.end(), n)) {
      fail_at(coords, "'" + n + "' is already a parameter");
    }
  }
  try {
    spec.charts.emplace(sec.name, Chart(sec.name, names));
  } catch (const Error& err) {
    fail_at(coords, err.what());
  }
}

void load_function(SystemSpec& spec, const Section& sec) {
  reject_unknown_keys(sec, {"variable", "body", "inverse_of"});
  if (const Entry* body = sec.find("body")) {
    std::string var = sec.find("variable") ? sec.find("variable")->value : "u";
    if (!valid_identifier(var)) fail_at(*sec.find("variable"), "'" + var + "' is not a valid variable name");
    try {
      spec.sampling.bindings[sec.name] = sym::FunctionBinding{var, sym::parse(body->value, {var})};
    } catch (const SyntaxError& err) {
      throw ParseError(err.what(), body->line, body->value_col + static_cast<int>(err.position()));
    } catch (const Error& err) {
      fail_at(*body, err.what());
    }
  }
  if (const Entry* inv = sec.find("inverse_of")) {
    if (!std::count(spec.functions.begin(), spec.functions.end(), inv->value)) {
      throw UnresolvedReference("unresolved function '" + inv->value + "' (line " + std::to_string(inv->line) + ")");
    }
    spec.sampling.inverse_of[sec.name] = inv->value;
  }
}

void load_field(SystemSpec& spec, const Section& sec) {
  const Chart& chart = lookup(spec.charts, require(sec, "chart"), "chart");
  std::vector<Expr> comps(chart.dim(), Expr(0));
  for (const auto& e : sec.entries) {
    if (e.key == "chart") continue;
    comps[coord_index(chart, e, e.key)] = parse_expr(spec, e, chart.coords());
  }
  spec.fields.emplace(sec.name, VectorField(chart, comps));
}

void load_form(SystemSpec& spec, const Section& sec) {
  const Chart& chart = lookup(spec.charts, require(sec, "chart"), "chart");
  int degree = -1;
  if (const Entry* d = sec.find("degree")) degree = detail::parse_int(*d);
  std::vector<std::pair<calc::MultiIndex, Expr>> terms;
  for (const auto& e : sec.entries) {
    if (e.key == "chart" || e.key == "degree") continue;
    calc::MultiIndex idx;
    for (const auto& part : split_on(e.key, '^')) idx.push_back(static_cast<int>(form_basis(chart, e, part)));
    if (degree < 0) degree = static_cast<int>(idx.size());
    if (static_cast<int>(idx.size()) != degree) fail_at(e, "component '" + e.key + "' has the wrong degree");
    terms.emplace_back(idx, parse_expr(spec, e, chart.coords()));
  }
  if (degree < 0) throw ParseError("form \"" + sec.name + "\" needs a degree or a component", sec.line, 1);
  DiffForm w(chart, degree);
  for (const auto& [idx, c] : terms) w.add(idx, c);
  spec.forms.emplace(sec.name, w);
}

void load_tensor(SystemSpec& spec, const Section& sec) {
  const Chart& chart = lookup(spec.charts, require(sec, "chart"), "chart");
  calc::Matrix m(chart.dim(), std::vector<Expr>(chart.dim(), Expr(0)));
  for (const auto& e : sec.entries) {
    if (e.key == "chart") continue;
    auto parts = split_on(e.key, '@');
    if (parts.size() != 2) fail_at(e, "tensor keys look like d/dx@dy");
    std::size_t i = vector_basis(chart, e, parts[0]);
    std::size_t j = form_basis(chart, e, parts[1]);
    m[i][j] = m[i][j] + parse_expr(spec, e, chart.coords());
  }
  spec.tensors.emplace(sec.name, Tensor11(chart, m));
}

void load_bivector(SystemSpec& spec, const Section& sec) {
  const Chart& chart = lookup(spec.charts, require(sec, "chart"), "chart");
  Bivector l = Bivector::zero(chart);
  for (const auto& e : sec.entries) {
    if (e.key == "chart") continue;
    auto parts = split_on(e.key, '^');
    if (parts.size() != 2) fail_at(e, "bivector keys look like d/dx^d/dy");
    std::size_t i = vector_basis(chart, e, parts[0]);
    std::size_t j = vector_basis(chart, e, parts[1]);
    if (i == j) fail_at(e, "repeated index in '" + e.key + "'");
    l = l + parse_expr(spec, e, chart.coords()) * Bivector::wedge(chart, i, j);
  }
  spec.bivectors.emplace(sec.name, l);
}

void load_structure(SystemSpec& spec, const Section& sec) {
  reject_unknown_keys(sec, {"chart", "S", "delta"});
  const Entry* s = sec.find("S");
  const Entry* d = sec.find("delta");
  if (!s && !d) {
    const Chart& chart = lookup(spec.charts, require(sec, "chart"), "chart");
    try {
      spec.structures.emplace(sec.name, tangent::canonical_structure(chart));
    } catch (const Error& err) {
      fail_at(require(sec, "chart"), err.what());
    }
    return;
  }
  const Tensor11& t = lookup(spec.tensors, require(sec, "S"), "tensor");
  const VectorField& delta = lookup(spec.fields, require(sec, "delta"), "field");
  if (t.chart() != delta.chart()) fail_at(*d, "S and delta live on different charts");
  spec.structures.emplace(sec.name, tangent::TangentStructure{t.chart(), t, delta});
}

void load_diffeo(SystemSpec& spec, const Section& sec) {
  const Chart& src = lookup(spec.charts, require(sec, "from"), "chart");
  const Chart& dst = lookup(spec.charts, require(sec, "to"), "chart");
  std::vector<std::optional<Expr>> fwd(dst.dim());
  std::vector<std::optional<Expr>> inv(src.dim());
  for (const auto& e : sec.entries) {
    if (e.key == "from" || e.key == "to") continue;
    if (e.key.rfind("inverse.", 0) == 0) {
      inv[coord_index(src, e, e.key.substr(8))] = parse_expr(spec, e, dst.coords());
    } else {
      fwd[coord_index(dst, e, e.key)] = parse_expr(spec, e, src.coords());
    }
  }
  std::vector<Expr> f;
  std::vector<Expr> g;
  for (std::size_t i = 0; i < dst.dim(); ++i) {
    if (!fwd[i]) throw ParseError("diffeo \"" + sec.name + "\" needs '" + dst.coords()[i] + "'", sec.line, 1);
    f.push_back(*fwd[i]);
  }
  for (std::size_t i = 0; i < src.dim(); ++i) {
    if (!inv[i]) {
      throw ParseError("diffeo \"" + sec.name + "\" needs 'inverse." + src.coords()[i] + "'", sec.line, 1);
    }
    g.push_back(*inv[i]);
  }
  spec.diffeos.emplace(sec.name, Diffeo(src, dst, f, g, spec.sampling));
}

void load_lagrangian(SystemSpec& spec, const Section& sec) {
  reject_unknown_keys(sec, {"chart", "structure", "L"});
  tangent::TangentStructure ts;
  if (const Entry* s = sec.find("structure")) {
    ts = lookup(spec.structures, *s, "structure");
  } else {
    const Entry& c = require(sec, "chart");
    try {
      ts = tangent::canonical_structure(lookup(spec.charts, c, "chart"));
    } catch (const OddDimension& err) {
      fail_at(c, err.what());
    }
  }
  spec.lagrangians.emplace(sec.name, lagrange::LagrangianSystem{ts, parse_expr(spec, require(sec, "L"), ts.chart.coords())});
}

void load_hamiltonian(SystemSpec& spec, const Section& sec) {
  reject_unknown_keys(sec, {"chart", "H", "omega", "Lambda"});
  const Entry& c = require(sec, "chart");
  const Chart& chart = lookup(spec.charts, c, "chart");
  Expr h = parse_expr(spec, require(sec, "H"), chart.coords());
  hamilton::HamiltonianSystem sys;
  const Entry* w = sec.find("omega");
  const Entry* l = sec.find("Lambda");
  if (!w && !l) {
    try {
      sys = hamilton::canonical_system(chart, h);
    } catch (const OddDimension& err) {
      fail_at(c, err.what());
    }
  } else {
    const DiffForm& omega = lookup(spec.forms, require(sec, "omega"), "form");
    const Bivector& lambda = lookup(spec.bivectors, require(sec, "Lambda"), "bivector");
    if (omega.chart() != chart || lambda.chart() != chart) fail_at(c, "omega and Lambda must live on the chart");
    if (omega.degree() != 2) fail_at(*w, "omega must be a 2-form");
    sys = hamilton::HamiltonianSystem{chart, h, omega, lambda};
  }
  spec.hamiltonians.emplace(sec.name, sys);
}

void load_check(SystemSpec& spec, const Section& sec) {
  const Entry& kind = require(sec, "kind");
  const auto& kinds = check_kinds();
  if (std::find(kinds.begin(), kinds.end(), kind.value) == kinds.end()) {
    fail_at(kind, "unknown check kind '" + kind.value + "'");
  }
  CheckSpec check{sec.name, kind.value, {}, sec.line};
  for (const auto& e : sec.entries) {
    if (e.key != "kind") check.args.emplace(e.key, e);
  }
  detail::prepare(spec, check);  // resolve now so errors surface at load time
  spec.checks.push_back(std::move(check));
}

}  // namespace

SystemSpec parse_spec(std::string_view text, std::string source) {
  std::vector<Section> sections = parse_sections(text);
  for (const auto& sec : sections) {
    if (std::find(kKinds.begin(), kKinds.end(), sec.kind) == kKinds.end()) {
      throw ParseError("unknown section kind '" + sec.kind + "'", sec.line, 2);
    }
  }
  SystemSpec spec;
  spec.source = std::move(source);
  // Names first so expressions can use any parameter or function.
  for (const auto& sec : sections) {
    if (sec.kind == "parameter") {
      require_identifier(sec);
      reject_unknown_keys(sec, {});
      spec.parameters.push_back(sec.name);
    } else if (sec.kind == "function") {
      require_identifier(sec);
      spec.functions.push_back(sec.name);
    }
  }
  using Loader = void (*)(SystemSpec&, const Section&);
  const std::vector<std::pair<std::string, Loader>> order = {
      {"function", load_function}, {"chart", load_chart},         {"field", load_field},
      {"form", load_form},         {"tensor", load_tensor},       {"bivector", load_bivector},
      {"structure", load_structure}, {"diffeo", load_diffeo},     {"lagrangian", load_lagrangian},
      {"hamiltonian", load_hamiltonian}, {"check", load_check}};
  for (const auto& [kind, loader] : order) {
    for (const auto& sec : sections) {
      if (sec.kind == kind) loader(spec, sec);
    }
  }
  return spec;
}

SystemSpec load_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str(), std::filesystem::path(path).filename().string());
}

}  // namespace geomech::cli
