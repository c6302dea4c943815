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

#include <map>
#include <string>
#include <string_view>

#include "qworlds/lset.hpp"

namespace qworlds {

// Model files are JSON objects mapping set names to either a `"hat:<lit>"`
// string or an object `{member: value}` whose keys are other set names or
// `"hat:<lit>"` literals and whose values are parsed by the algebra
// (element names; subobject literals in the subobject universe).
// Throws kSyntaxError for malformed files, unknown names and cycles.
template <typename A>
std::map<std::string, LSetId> load_model(std::string_view text, Universe<A>& universe);

extern template std::map<std::string, LSetId> load_model(std::string_view,
                                                         Universe<LatticeAlgebra>&);
extern template std::map<std::string, LSetId> load_model(std::string_view,
                                                         Universe<SubclAlgebra>&);

}  // namespace qworlds
