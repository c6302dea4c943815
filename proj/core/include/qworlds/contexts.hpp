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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qworlds/oml.hpp"

namespace qworlds {

// Set of atoms of one context, bit i standing for the i-th atom.
using AtomMask = std::uint64_t;

inline constexpr std::size_t kMaxContextAtoms = 64;

// A Boolean subalgebra of the lattice, stored with its atoms. Every carrier
// element is the join of a unique set of atoms.
class BooleanContext {
 public:
  std::size_t id() const { return id_; }
  const ElementSubset& carrier() const { return carrier_; }
  // Carrier elements ordered by lattice index.
  const std::vector<Elem>& elements() const { return elements_; }
  // Atoms ordered by lattice index.
  const std::vector<Elem>& atoms() const { return atoms_; }
  std::size_t atom_count() const { return atoms_.size(); }
  AtomMask full_mask() const {
    return atoms_.size() == 64 ? ~AtomMask{0} : (AtomMask{1} << atoms_.size()) - 1;
  }

  bool contains(Elem a) const { return carrier_.contains(a); }
  // Atoms below a carrier element; throws kElementNotInContext otherwise.
  AtomMask mask_of(Elem a) const;
  // Join of the named atoms.
  Elem element_of(AtomMask mask) const { return by_mask_[mask & full_mask()]; }
  bool is_trivial() const { return atoms_.size() == 1; }

 private:
  friend class ContextPoset;

  std::size_t id_ = 0;
  ElementSubset carrier_;
  std::vector<Elem> elements_;
  std::vector<Elem> atoms_;
  std::vector<AtomMask> mask_by_elem_;  // indexed by lattice element
  std::vector<Elem> by_mask_;
};

// A point of the Stone space of a context: the two-valued homomorphism that
// sends b to 1 exactly when the chosen atom lies below b.
struct StonePoint {
  std::size_t context = 0;
  std::size_t atom = 0;

  friend bool operator==(const StonePoint&, const StonePoint&) = default;
};

struct ContextOptions {
  std::size_t cap = 4096;
  bool include_trivial = true;
};

// All Boolean subalgebras of a lattice ordered by inclusion. Contexts are
// sorted by carrier size, then by carrier contents, and ids follow that
// order, so subcontexts always precede their supercontexts.
class ContextPoset {
 public:
  // Throws kSizeLimitExceeded when more than options.cap contexts exist.
  static ContextPoset enumerate(const Oml& lattice, const ContextOptions& options = {});

  const Oml& lattice() const { return lattice_; }
  std::size_t size() const { return contexts_.size(); }
  const BooleanContext& operator[](std::size_t id) const { return contexts_[id]; }
  const std::vector<BooleanContext>& contexts() const { return contexts_; }
  bool includes_trivial() const { return includes_trivial_; }

  // Carrier of `sub` is a subset of the carrier of `super`.
  bool leq(std::size_t sub, std::size_t super) const { return leq_[sub * size() + super]; }
  // Immediate subcontexts and supercontexts.
  const std::vector<std::size_t>& lower_covers(std::size_t id) const { return lower_[id]; }
  const std::vector<std::size_t>& upper_covers(std::size_t id) const { return upper_[id]; }

  // For sub <= super, maps each atom index of `super` to the index of the
  // unique atom of `sub` above it. Throws kInvalidArgument otherwise.
  std::vector<std::size_t> restriction(std::size_t sub, std::size_t super) const;
  AtomMask restrict_mask(std::size_t sub, std::size_t super, AtomMask mask) const;

  // Index of the context whose carrier is exactly `carrier`, if any.
  std::optional<std::size_t> find(const ElementSubset& carrier) const;

  std::size_t total_points() const;

 private:
  explicit ContextPoset(Oml lattice) : lattice_(std::move(lattice)) {}

  Oml lattice_;
  std::vector<BooleanContext> contexts_;
  std::vector<bool> leq_;
  std::vector<std::vector<std::size_t>> lower_;
  std::vector<std::vector<std::size_t>> upper_;
  bool includes_trivial_ = true;
};

std::vector<StonePoint> stone_points(const BooleanContext& context);
bool evaluate_point(const ContextPoset& poset, const StonePoint& point, Elem b);
// Atoms of the context below b. Throws kElementNotInContext.
AtomMask stone_rep(const BooleanContext& context, Elem b);

// `context <id>: {elements}` lines.
std::string format_contexts(const ContextPoset& poset);
std::string format_context(const ContextPoset& poset, std::size_t id);
std::string contexts_dot(const ContextPoset& poset);

}  // namespace qworlds
