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

#include "qworlds/hf.hpp"

#include <algorithm>
#include <cctype>

#include "qworlds/error.hpp"

namespace qworlds {
namespace {

constexpr unsigned kMaxOrdinal = 64;
constexpr unsigned kMaxEnumeratedRank = 4;

class HfParser {
 public:
  explicit HfParser(std::string_view text) : text_(text) {}

  HfSet parse() {
    HfSet x = value();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kLiteralParseError,
                what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  HfSet value() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      unsigned n = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        n = n * 10 + static_cast<unsigned>(text_[pos_] - '0');
        if (n > kMaxOrdinal) fail("numeral too large");
        ++pos_;
      }
      return HfSet::ordinal(n);
    }
    if (text_[pos_] != '{') fail("expected '{' or a numeral");
    ++pos_;
    std::vector<HfSet> members;
    skip();
    if (pos_ < text_.size() && text_[pos_] == '}') {
      ++pos_;
      return HfSet();
    }
    while (true) {
      members.push_back(value());
      skip();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (pos_ < text_.size() && text_[pos_] == '}') {
        ++pos_;
        return HfSet(std::move(members));
      }
      fail("expected ',' or '}'");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

HfSet::HfSet(std::vector<HfSet> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

HfSet HfSet::ordinal(unsigned n) {
  std::vector<HfSet> members;
  for (unsigned i = 0; i < n; ++i) members.push_back(ordinal(i));
  return HfSet(std::move(members));
}

bool HfSet::contains(const HfSet& x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

std::size_t HfSet::rank() const {
  std::size_t r = 0;
  for (const auto& m : members_) r = std::max(r, m.rank() + 1);
  return r;
}

bool operator<(const HfSet& a, const HfSet& b) {
  return std::lexicographical_compare(a.members_.begin(), a.members_.end(), b.members_.begin(),
                                      b.members_.end());
}

HfSet parse_hf(std::string_view text) { return HfParser(text).parse(); }

std::string to_string(const HfSet& x) {
  std::string out = "{";
  for (std::size_t i = 0; i < x.members().size(); ++i) {
    if (i) out += ", ";
    out += to_string(x.members()[i]);
  }
  return out + "}";
}

std::vector<HfSet> hf_sets_up_to_rank(unsigned max_rank) {
  if (max_rank > kMaxEnumeratedRank) {
    throw Error(ErrorCode::kSizeLimitExceeded,
                "rank " + std::to_string(max_rank) + " is too large to enumerate");
  }
  // Sets of rank <= r are exactly the subsets of the sets of rank < r.
  std::vector<HfSet> level = {HfSet()};
  for (unsigned r = 1; r <= max_rank; ++r) {
    std::vector<HfSet> next;
    const std::size_t n = level.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<HfSet> members;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1) members.push_back(level[i]);
      }
      next.emplace_back(std::move(members));
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }
  return level;
}

}  // namespace qworlds
