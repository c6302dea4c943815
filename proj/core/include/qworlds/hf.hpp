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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qworlds {

// A hereditarily finite pure set, kept in canonical form (members sorted
// and distinct) so that equality is structural.
class HfSet {
 public:
  HfSet() = default;
  explicit HfSet(std::vector<HfSet> members);

  // von Neumann ordinal n = {0, ..., n-1}.
  static HfSet ordinal(unsigned n);

  const std::vector<HfSet>& members() const { return members_; }
  bool empty() const { return members_.empty(); }
  bool contains(const HfSet& x) const;
  // rank(empty) = 0, otherwise one more than the largest member rank.
  std::size_t rank() const;

  friend bool operator==(const HfSet& a, const HfSet& b) { return a.members_ == b.members_; }
  friend bool operator<(const HfSet& a, const HfSet& b);

 private:
  std::vector<HfSet> members_;
};

// Literals are `{}`, `{x, y, ...}` with nested literals, or a decimal
// numeral for a von Neumann ordinal. Throws kLiteralParseError.
HfSet parse_hf(std::string_view text);
std::string to_string(const HfSet& x);

// Every set of rank at most `max_rank`, in canonical order.
std::vector<HfSet> hf_sets_up_to_rank(unsigned max_rank);

}  // namespace qworlds
