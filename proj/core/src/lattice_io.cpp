// Copyright 2026 The qworlds Authors
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

#include "qworlds/lattice_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qworlds/error.hpp"
#include "qworlds/fixtures.hpp"

namespace qworlds {

using nlohmann::json;

RawLattice parse_lattice(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kSyntaxError, std::string("lattice file: ") + e.what());
  }
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kSyntaxError, "lattice file: " + what);
  };
  if (!doc.is_object()) fail("top level must be an object");
  RawLattice raw;
  try {
    if (!doc.contains("elements") || !doc["elements"].is_array()) {
      fail("missing \"elements\" array");
    }
    for (const auto& e : doc["elements"]) raw.elements.push_back(e.get<std::string>());
    const bool has_covers = doc.contains("covers");
    const bool has_leq = doc.contains("leq");
    if (has_covers == has_leq) fail("exactly one of \"covers\" or \"leq\" is required");
    for (const auto& pair : doc[has_covers ? "covers" : "leq"]) {
      if (!pair.is_array() || pair.size() != 2) fail("order entries must be pairs");
      raw.order.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
    if (!doc.contains("ortho") || !doc["ortho"].is_object()) fail("missing \"ortho\" object");
    for (const auto& [key, value] : doc["ortho"].items()) {
      raw.ortho.emplace_back(key, value.get<std::string>());
    }
  } catch (const json::exception& e) {
    fail(e.what());
  }
  return raw;
}

std::string serialize_lattice(const Oml& lattice) {
  const RawLattice raw = to_raw(lattice);
  nlohmann::ordered_json doc;
  doc["elements"] = raw.elements;
  doc["covers"] = json::array();
  for (const auto& [x, y] : raw.order) doc["covers"].push_back({x, y});
  doc["ortho"] = nlohmann::ordered_json::object();
  for (const auto& [x, y] : raw.ortho) doc["ortho"][x] = y;
  return doc.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kSyntaxError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Oml load_lattice(const std::string& fixture_or_path) {
  if (auto fixture = builtin_fixture(fixture_or_path)) return *std::move(fixture);
  return Oml::verify(parse_lattice(read_text_file(fixture_or_path)));
}

std::string dot_quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string hasse_dot(const Oml& lattice) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n";
  for (Elem e : lattice.elements()) out << "  " << dot_quote(lattice.name(e)) << ";\n";
  for (const auto& [lo, hi] : lattice.covers()) {
    out << "  " << dot_quote(lattice.name(lo)) << " -> " << dot_quote(lattice.name(hi))
        << ";\n";
  }
  for (Elem e : lattice.elements()) {
    const Elem c = lattice.ortho(e);
    if (e.index < c.index) {
      out << "  " << dot_quote(lattice.name(e)) << " -> " << dot_quote(lattice.name(c))
          << " [style=dashed, dir=none, constraint=false];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace qworlds
