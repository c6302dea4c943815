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
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qworlds/contexts.hpp"
#include "qworlds/oml.hpp"
#include "qworlds/random.hpp"

namespace qworlds {

class SpectralPresheaf;

namespace detail {
struct PresheafData;
}  // namespace detail

// A subpresheaf of the spectral presheaf: one set of Stone points per
// context, closed under restriction. In the finite case every such family
// is clopen. Only meaningful together with the presheaf that made it.
class ClopenSubobject {
 public:
  ClopenSubobject() = default;

  const std::vector<AtomMask>& masks() const { return masks_; }
  AtomMask component(std::size_t context) const { return masks_[context]; }

  friend bool operator==(const ClopenSubobject& a, const ClopenSubobject& b) {
    return a.owner_ == b.owner_ && a.masks_ == b.masks_;
  }
  friend bool operator<(const ClopenSubobject& a, const ClopenSubobject& b) {
    return a.masks_ < b.masks_;
  }

 private:
  friend class SpectralPresheaf;

  ClopenSubobject(const detail::PresheafData* owner, std::vector<AtomMask> masks)
      : owner_(owner), masks_(std::move(masks)) {}

  const detail::PresheafData* owner_ = nullptr;
  std::vector<AtomMask> masks_;
};

// A downward-closed set of contexts.
struct TruthValue {
  std::vector<bool> contexts;

  bool contains(std::size_t id) const { return contexts[id]; }
  std::vector<std::size_t> members() const;
  friend bool operator==(const TruthValue&, const TruthValue&) = default;
};

// One Stone point per context, compatible with every restriction map.
struct GlobalSection {
  std::vector<std::size_t> atoms;  // atom index per context

  friend bool operator==(const GlobalSection&, const GlobalSection&) = default;
};

// Subobjects grouped by the element they approximate. Class k corresponds
// to lattice element k; its canonical member is the daseinisation of that
// element, which is the least member of the class.
struct EQuotient {
  std::vector<ClopenSubobject> canonical;
  // Members of each class, filled only when the subobjects were enumerable.
  std::vector<std::vector<ClopenSubobject>> members;
  bool materialized = false;

  std::size_t class_count() const { return canonical.size(); }
};

struct SubclOptions {
  // Full enumeration is attempted only when the number of Stone points
  // over all contexts is at most this many bits of candidates.
  std::size_t enumeration_bits = 20;
};

// The spectral presheaf over the context poset of a finite OML together with
// the complete lattice of its clopen subobjects. Copies are cheap handles to
// shared immutable data; subobjects stay valid as long as some handle lives.
class SpectralPresheaf {
 public:
  explicit SpectralPresheaf(ContextPoset poset);
  static SpectralPresheaf build(const Oml& lattice, const ContextOptions& options = {});

  const ContextPoset& poset() const;
  const Oml& lattice() const;
  std::size_t context_count() const;

  // Validates compatibility; throws kNotASubobject with the offending
  // inclusion, or kInvalidArgument on a size mismatch.
  ClopenSubobject make(std::vector<AtomMask> masks) const;
  bool is_compatible(const std::vector<AtomMask>& masks) const;

  ClopenSubobject top() const;
  ClopenSubobject bottom() const;
  ClopenSubobject meet(const ClopenSubobject& s, const ClopenSubobject& t) const;
  ClopenSubobject join(const ClopenSubobject& s, const ClopenSubobject& t) const;
  bool leq(const ClopenSubobject& s, const ClopenSubobject& t) const;
  ClopenSubobject meet_all(const std::vector<ClopenSubobject>& xs) const;
  ClopenSubobject join_all(const std::vector<ClopenSubobject>& xs) const;

  // Componentwise the smallest context element above a.
  ClopenSubobject daseinise(Elem a) const;
  AtomMask dasein_mask(Elem a, std::size_t context) const;
  // Meet over contexts of the element named by each component; the right
  // adjoint of daseinise.
  Elem to_element(const ClopenSubobject& s) const;

  // daseinise(ortho(to_element(s))).
  ClopenSubobject star(const ClopenSubobject& s) const;
  ClopenSubobject double_star(const ClopenSubobject& s) const;
  bool is_regular(const ClopenSubobject& s) const;

  ClopenSubobject implies_s(const ClopenSubobject& s, const ClopenSubobject& t) const;
  ClopenSubobject implies_c(const ClopenSubobject& s, const ClopenSubobject& t) const;
  ClopenSubobject implies_r(const ClopenSubobject& s, const ClopenSubobject& t) const;
  ClopenSubobject implies(Arrow arrow, const ClopenSubobject& s, const ClopenSubobject& t) const;
  ClopenSubobject iff(Arrow arrow, const ClopenSubobject& s, const ClopenSubobject& t) const;

  // The approximated elements commute in the lattice.
  bool sub_commutes(const ClopenSubobject& s, const ClopenSubobject& t) const;
  // s** = (s* | (t* & t**))*, evaluated literally.
  bool cp_identity_holds(const ClopenSubobject& s, const ClopenSubobject& t) const;

  bool enumerable(const SubclOptions& options = {}) const;
  // Every clopen subobject, sorted. Throws kSizeLimitExceeded when the
  // candidate space exceeds the configured bits.
  std::vector<ClopenSubobject> enumerate(const SubclOptions& options = {}) const;
  // Random compatible family; mixes daseinised elements, their stars and
  // combinations, and free families chosen top-down.
  ClopenSubobject sample(Rng& rng) const;
  // Either every subobject or `samples` random ones plus top and bottom.
  std::vector<ClopenSubobject> population(Rng& rng, std::size_t samples,
                                          const SubclOptions& options = {}) const;

  EQuotient quotient(const SubclOptions& options = {}) const;

  // Stops after `limit` sections.
  std::vector<GlobalSection> global_sections(std::size_t limit = 1u << 16) const;

  // Contexts where w's component is contained in s's. Throws kNotALowerSet
  // if the result is not downward closed.
  TruthValue truth_value(const ClopenSubobject& s, const ClopenSubobject& w) const;

  // `[id: atom atom ; id: atom]`, listing non-empty components.
  std::string format(const ClopenSubobject& s) const;
  ClopenSubobject parse(std::string_view text) const;
  std::string format_truth_value(const TruthValue& v) const;
  std::string dot(const ClopenSubobject& s) const;

  // The subobject was produced by this presheaf or a copy of it.
  bool owns(const ClopenSubobject& s) const { return s.owner_ == data_.get(); }

  friend bool operator==(const SpectralPresheaf& a, const SpectralPresheaf& b) {
    return a.data_ == b.data_;
  }

 private:
  void check_owner(const ClopenSubobject& s) const;

  std::shared_ptr<const detail::PresheafData> data_;
};

}  // namespace qworlds

template <>
struct std::hash<qworlds::ClopenSubobject> {
  std::size_t operator()(const qworlds::ClopenSubobject& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto m : s.masks()) h = (h ^ std::hash<std::uint64_t>{}(m)) * 0x100000001b3ULL;
    return h;
  }
};
