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

#include "qworlds/lset.hpp"

#include <algorithm>

#include "qworlds/error.hpp"

namespace qworlds {

template <typename A>
std::size_t Universe<A>::EntriesHash::operator()(const std::vector<Entry>& es) const noexcept {
  std::size_t h = 0x84222325cbf29ce4ULL;
  for (const auto& [id, value] : es) {
    h = (h ^ id.index) * 0x100000001b3ULL;
    h = (h ^ std::hash<Value>{}(value)) * 0x100000001b3ULL;
  }
  return h;
}

template <typename A>
Universe<A>::Universe(A algebra) : algebra_(std::move(algebra)) {}

template <typename A>
LSetId Universe<A>::make(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  std::size_t rank = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& [id, value] = entries[i];
    if (!valid(id)) throw Error(ErrorCode::kInvalidArgument, "unknown member set");
    if (i > 0 && entries[i - 1].first == id) {
      throw Error(ErrorCode::kInvalidArgument, "member listed twice");
    }
    if (!algebra_.owns(value)) {
      throw Error(ErrorCode::kAlgebraMismatch, "value does not belong to this universe's algebra");
    }
    rank = std::max(rank, nodes_[id.index].rank + 1);
  }
  auto it = index_.find(entries);
  if (it != index_.end()) return it->second;
  const LSetId id(static_cast<std::uint32_t>(nodes_.size()));
  nodes_.push_back({entries, rank});
  index_.emplace(std::move(entries), id);
  return id;
}

template <typename A>
LSetId Universe<A>::hat(const HfSet& x) {
  std::vector<Entry> entries;
  for (const auto& m : x.members()) entries.emplace_back(hat(m), algebra_.top());
  return make(std::move(entries));
}

template <typename A>
std::string Universe<A>::describe(LSetId u) const {
  std::string out = "{";
  bool first = true;
  for (const auto& [id, value] : entries(u)) {
    if (!first) out += ", ";
    out += describe(id) + ": " + algebra_.format(value);
    first = false;
  }
  return out + "}";
}

template class Universe<LatticeAlgebra>;
template class Universe<SubclAlgebra>;

}  // namespace qworlds
