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
#include <vector>

#include "qworlds/oml.hpp"

namespace qworlds {

// Power set of n atoms. Elements are "0", "1" and the concatenated letters
// of their atoms ("a", "ab", ...).
RawLattice raw_boolean(unsigned n);
Oml boolean(unsigned n);

// Horizontal sum of n four-element blocks: "0", "1", "a", "a'", "b", "b'", ...
RawLattice raw_mo(unsigned n);
Oml mo(unsigned n);

// Cartesian product with componentwise order and complement. Element names
// are "x.y".
Oml product(const Oml& left, const Oml& right);

// The pentagon with the only possible involution; not orthocomplemented.
RawLattice raw_pentagon();
// The six-element benzene ring: orthocomplemented but not orthomodular.
RawLattice raw_hexagon();

// Resolves "boolean<n>", "mo<n>" and "mo2xbool2" (MO2 times the four-element
// Boolean algebra). Returns nullopt for anything else.
std::optional<Oml> builtin_fixture(std::string_view name);

// Names accepted by builtin_fixture that the battery runs by default.
const std::vector<std::string>& standard_fixture_names();

// Turns a validated lattice back into a raw description using cover pairs.
RawLattice to_raw(const Oml& lattice);

}  // namespace qworlds
