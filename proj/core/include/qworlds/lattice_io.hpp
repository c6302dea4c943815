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

#pragma once

#include <string>
#include <string_view>

#include "qworlds/oml.hpp"

namespace qworlds {

// Parses `{"elements": [...], "covers" | "leq": [[x, y], ...], "ortho": {x: y}}`.
// Throws kSyntaxError on malformed input.
RawLattice parse_lattice(std::string_view text);
std::string serialize_lattice(const Oml& lattice);

// Reads the whole file; throws kSyntaxError if it cannot be opened.
std::string read_text_file(const std::string& path);

// A built-in fixture name or the path of a lattice file.
Oml load_lattice(const std::string& fixture_or_path);

// Hasse diagram with the orthocomplement drawn as dashed undirected edges.
std::string hasse_dot(const Oml& lattice);

// Escapes a string for use inside a double-quoted DOT identifier.
std::string dot_quote(std::string_view text);

}  // namespace qworlds
