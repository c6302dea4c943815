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

#include "qworlds/fixtures.hpp"

#include <charconv>

#include "qworlds/error.hpp"

namespace qworlds {
namespace {

constexpr unsigned kMaxBooleanAtoms = 8;
constexpr unsigned kMaxMoBlocks = 26;

std::optional<unsigned> parse_suffix(std::string_view name, std::string_view prefix) {
  if (name.substr(0, prefix.size()) != prefix || name.size() == prefix.size()) {
    return std::nullopt;
  }
  unsigned value = 0;
  const char* first = name.data() + prefix.size();
  const char* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

}  // namespace

RawLattice raw_boolean(unsigned n) {
  if (n > kMaxBooleanAtoms) {
    throw Error(ErrorCode::kSizeLimitExceeded,
                "boolean fixtures are limited to " + std::to_string(kMaxBooleanAtoms) + " atoms");
  }
  const unsigned full = (1u << n) - 1;
  auto name = [&](unsigned mask) -> std::string {
    if (mask == 0) return "0";
    if (mask == full) return "1";
    std::string s;
    for (unsigned i = 0; i < n; ++i) {
      if (mask >> i & 1) s += static_cast<char>('a' + i);
    }
    return s;
  };
  RawLattice raw;
  for (unsigned mask = 0; mask <= full; ++mask) raw.elements.push_back(name(mask));
  for (unsigned mask = 0; mask <= full; ++mask) {
    raw.ortho.emplace_back(name(mask), name(full & ~mask));
    for (unsigned i = 0; i < n; ++i) {
      if (!(mask >> i & 1)) raw.order.emplace_back(name(mask), name(mask | 1u << i));
    }
  }
  return raw;
}

Oml boolean(unsigned n) { return Oml::verify(raw_boolean(n)); }

RawLattice raw_mo(unsigned n) {
  if (n > kMaxMoBlocks) {
    throw Error(ErrorCode::kSizeLimitExceeded,
                "mo fixtures are limited to " + std::to_string(kMaxMoBlocks) + " blocks");
  }
  RawLattice raw;
  raw.elements = {"0", "1"};
  raw.ortho = {{"0", "1"}, {"1", "0"}};
  if (n == 0) raw.order.emplace_back("0", "1");
  for (unsigned i = 0; i < n; ++i) {
    const std::string x(1, static_cast<char>('a' + i));
    const std::string y = x + "'";
    raw.elements.push_back(x);
    raw.elements.push_back(y);
    for (const auto& e : {x, y}) {
      raw.order.emplace_back("0", e);
      raw.order.emplace_back(e, "1");
    }
    raw.ortho.emplace_back(x, y);
    raw.ortho.emplace_back(y, x);
  }
  return raw;
}

Oml mo(unsigned n) { return Oml::verify(raw_mo(n)); }

Oml product(const Oml& left, const Oml& right) {
  RawLattice raw;
  auto name = [&](Elem x, Elem y) { return left.name(x) + "." + right.name(y); };
  for (Elem x : left.elements()) {
    for (Elem y : right.elements()) {
      raw.elements.push_back(name(x, y));
      raw.ortho.emplace_back(name(x, y), name(left.ortho(x), right.ortho(y)));
    }
  }
  for (const auto& [lo, hi] : left.covers()) {
    for (Elem y : right.elements()) raw.order.emplace_back(name(lo, y), name(hi, y));
  }
  for (const auto& [lo, hi] : right.covers()) {
    for (Elem x : left.elements()) raw.order.emplace_back(name(x, lo), name(x, hi));
  }
  return Oml::verify(raw);
}

RawLattice raw_pentagon() {
  RawLattice raw;
  raw.elements = {"0", "a", "b", "c", "1"};
  raw.order = {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}};
  raw.ortho = {{"0", "1"}, {"1", "0"}, {"a", "c"}, {"c", "a"}, {"b", "b"}};
  return raw;
}

RawLattice raw_hexagon() {
  RawLattice raw;
  raw.elements = {"0", "a", "b", "b'", "a'", "1"};
  raw.order = {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "b'"}, {"b'", "a'"}, {"a'", "1"}};
  raw.ortho = {{"0", "1"}, {"1", "0"}, {"a", "a'"}, {"a'", "a"}, {"b", "b'"}, {"b'", "b"}};
  return raw;
}

std::optional<Oml> builtin_fixture(std::string_view name) {
  if (name == "mo2xbool2") return product(mo(2), boolean(2));
  if (auto n = parse_suffix(name, "boolean")) return boolean(*n);
  if (auto n = parse_suffix(name, "mo")) return mo(*n);
  return std::nullopt;
}

const std::vector<std::string>& standard_fixture_names() {
  static const std::vector<std::string> names = {"boolean2", "boolean3", "mo2", "mo3",
                                                 "mo2xbool2"};
  return names;
}

RawLattice to_raw(const Oml& lattice) {
  RawLattice raw;
  for (Elem e : lattice.elements()) {
    raw.elements.push_back(lattice.name(e));
    raw.ortho.emplace_back(lattice.name(e), lattice.name(lattice.ortho(e)));
  }
  for (const auto& [lo, hi] : lattice.covers()) {
    raw.order.emplace_back(lattice.name(lo), lattice.name(hi));
  }
  return raw;
}

}  // namespace qworlds
