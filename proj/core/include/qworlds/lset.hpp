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

#include <compare>
#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qworlds/algebra.hpp"
#include "qworlds/hf.hpp"

namespace qworlds {

// Handle of a set inside one Universe.
struct LSetId {
  std::uint32_t index = 0;

  constexpr LSetId() = default;
  constexpr explicit LSetId(std::uint32_t i) : index(i) {}

  friend constexpr auto operator<=>(LSetId, LSetId) = default;
};

// Finite-rank sets valued in an algebra A: each set is a finite map from
// previously built sets to values of A. Sets are hash-consed, so two
// structurally equal sets always share one id.
template <typename A>
class Universe {
 public:
  using Value = typename A::Value;
  using Entry = std::pair<LSetId, Value>;

  explicit Universe(A algebra);

  const A& algebra() const { return algebra_; }

  // Entries are sorted by member id. Throws kInvalidArgument on unknown or
  // repeated members and kAlgebraMismatch on values from another algebra.
  LSetId make(std::vector<Entry> entries);
  LSetId empty() { return make({}); }
  // Embedding of a hereditarily finite set: every member gets value top.
  LSetId hat(const HfSet& x);

  const std::vector<Entry>& entries(LSetId u) const { return nodes_[u.index].entries; }
  std::size_t rank(LSetId u) const { return nodes_[u.index].rank; }
  std::size_t size() const { return nodes_.size(); }
  bool valid(LSetId u) const { return u.index < nodes_.size(); }

  // `{<member>: value, ...}` written recursively.
  std::string describe(LSetId u) const;

 private:
  struct Node {
    std::vector<Entry> entries;
    std::size_t rank = 0;
  };
  struct EntriesHash {
    std::size_t operator()(const std::vector<Entry>& es) const noexcept;
  };

  A algebra_;
  std::deque<Node> nodes_;
  std::unordered_map<std::vector<Entry>, LSetId, EntriesHash> index_;
};

extern template class Universe<LatticeAlgebra>;
extern template class Universe<SubclAlgebra>;

using LatticeUniverse = Universe<LatticeAlgebra>;
using SubclUniverse = Universe<SubclAlgebra>;

}  // namespace qworlds

template <>
struct std::hash<qworlds::LSetId> {
  std::size_t operator()(qworlds::LSetId u) const noexcept { return u.index; }
};
