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

#include "qworlds/model_io.hpp"

#include <set>

#include "json.hpp"
#include "qworlds/error.hpp"

namespace qworlds {
namespace {

constexpr std::string_view kHatPrefix = "hat:";

bool is_hat(std::string_view s) { return s.substr(0, kHatPrefix.size()) == kHatPrefix; }

}  // namespace

template <typename A>
std::map<std::string, LSetId> load_model(std::string_view text, Universe<A>& universe) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kSyntaxError, std::string("model file: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::kSyntaxError, "model file: expected an object");

  std::map<std::string, LSetId> built;
  std::set<std::string> in_progress;
  auto resolve = [&](auto& self, const std::string& name) -> LSetId {
    if (is_hat(name)) return universe.hat(parse_hf(std::string_view(name).substr(kHatPrefix.size())));
    if (auto it = built.find(name); it != built.end()) return it->second;
    if (!doc.contains(name)) {
      throw Error(ErrorCode::kSyntaxError, "model file: unknown set '" + name + "'");
    }
    if (!in_progress.insert(name).second) {
      throw Error(ErrorCode::kSyntaxError, "model file: '" + name + "' contains itself");
    }
    const auto& def = doc[name];
    LSetId id;
    if (def.is_string()) {
      const std::string s = def.template get<std::string>();
      if (!is_hat(s)) {
        throw Error(ErrorCode::kSyntaxError,
                    "model file: '" + name + "' must be an object or a hat: literal");
      }
      id = self(self, s);
    } else if (def.is_object()) {
      std::vector<typename Universe<A>::Entry> entries;
      for (const auto& [child, value] : def.items()) {
        if (!value.is_string()) {
          throw Error(ErrorCode::kSyntaxError,
                      "model file: value of '" + child + "' in '" + name + "' must be a string");
        }
        const LSetId member = self(self, child);
        for (const auto& e : entries) {
          if (e.first == member) {
            throw Error(ErrorCode::kSyntaxError,
                        "model file: '" + name + "' lists the same member twice");
          }
        }
        entries.emplace_back(member, universe.algebra().parse_value(value.template get<std::string>()));
      }
      id = universe.make(std::move(entries));
    } else {
      throw Error(ErrorCode::kSyntaxError, "model file: bad definition of '" + name + "'");
    }
    in_progress.erase(name);
    built.emplace(name, id);
    return id;
  };
  for (const auto& [name, def] : doc.items()) {
    if (is_hat(name)) {
      throw Error(ErrorCode::kSyntaxError, "model file: set names may not start with 'hat:'");
    }
    resolve(resolve, name);
  }
  return built;
}

template std::map<std::string, LSetId> load_model(std::string_view, Universe<LatticeAlgebra>&);
template std::map<std::string, LSetId> load_model(std::string_view, Universe<SubclAlgebra>&);

}  // namespace qworlds
