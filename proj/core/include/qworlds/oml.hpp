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
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qworlds {

// Dense index of an element inside one Oml. Only meaningful together with
// the lattice that produced it.
struct Elem {
  std::uint32_t index = 0;

  constexpr Elem() = default;
  constexpr explicit Elem(std::uint32_t i) : index(i) {}

  friend constexpr auto operator<=>(Elem, Elem) = default;
};

// Unvalidated lattice description as read from a file or built by a
// generator. `order` holds either cover pairs or arbitrary `x <= y` pairs;
// both are reflexively and transitively closed at load.
struct RawLattice {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> order;
  std::vector<std::pair<std::string, std::string>> ortho;
};

// A finite orthomodular lattice with precomputed meet and join tables.
// Instances are immutable once built; every accessor is safe to call
// concurrently.
class Oml {
 public:
  // Validates `raw` and derives the lattice tables. Throws Error with
  // kNotALattice, kNotOrtho or kNotOrthomodular, naming a witness.
  static Oml verify(const RawLattice& raw);

  std::size_t size() const { return names_.size(); }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  bool leq(Elem a, Elem b) const { return leq_[a.index * size() + b.index]; }
  Elem meet(Elem a, Elem b) const { return Elem(meet_[a.index * size() + b.index]); }
  Elem join(Elem a, Elem b) const { return Elem(join_[a.index * size() + b.index]); }
  Elem ortho(Elem a) const { return Elem(ortho_[a.index]); }

  Elem meet_all(const std::vector<Elem>& xs) const;
  Elem join_all(const std::vector<Elem>& xs) const;

  // a and b are orthogonal: a <= ortho(b).
  bool orthogonal(Elem a, Elem b) const { return leq(a, ortho(b)); }

  const std::string& name(Elem a) const { return names_[a.index]; }
  std::optional<Elem> find(std::string_view name) const;
  // Like find() but throws kInvalidArgument for unknown names.
  Elem at(std::string_view name) const;

  std::vector<Elem> elements() const;
  const std::vector<Elem>& atoms() const { return atoms_; }
  // Cover pairs (x, y) with x strictly below y and nothing in between.
  const std::vector<std::pair<Elem, Elem>>& covers() const { return covers_; }

  friend bool operator==(const Oml& a, const Oml& b) {
    return a.names_ == b.names_ && a.leq_ == b.leq_ && a.ortho_ == b.ortho_;
  }

 private:
  Oml() = default;

  std::vector<std::string> names_;
  std::vector<bool> leq_;
  std::vector<std::uint32_t> meet_;
  std::vector<std::uint32_t> join_;
  std::vector<std::uint32_t> ortho_;
  Elem bottom_;
  Elem top_;
  std::vector<Elem> atoms_;
  std::vector<std::pair<Elem, Elem>> covers_;
};

inline Oml verify_oml(const RawLattice& raw) { return Oml::verify(raw); }

// A subset of the elements of one lattice.
class ElementSubset {
 public:
  ElementSubset() = default;
  explicit ElementSubset(const Oml& lattice);
  ElementSubset(const Oml& lattice, const std::vector<Elem>& members);

  static ElementSubset all(const Oml& lattice);

  bool contains(Elem a) const { return a.index < bits_.size() && bits_[a.index]; }
  void insert(Elem a);
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  std::vector<Elem> members() const;

  friend bool operator==(const ElementSubset&, const ElementSubset&) = default;

 private:
  std::vector<bool> bits_;
};

std::string format_subset(const Oml& lattice, const ElementSubset& subset);

// The three quantum material conditionals.
enum class Arrow { kSasaki, kContrapositive, kRelevance };

inline constexpr Arrow kAllArrows[] = {Arrow::kSasaki, Arrow::kContrapositive,
                                       Arrow::kRelevance};

// "S", "C" or "R" (case-insensitive); throws kInvalidArgument otherwise.
Arrow parse_arrow(std::string_view text);
std::string_view arrow_name(Arrow arrow);

Elem sasaki(const Oml& l, Elem a, Elem b);
Elem contrapositive(const Oml& l, Elem a, Elem b);
Elem relevance(const Oml& l, Elem a, Elem b);
Elem implies(const Oml& l, Arrow arrow, Elem a, Elem b);

using BinaryOp = std::function<Elem(const Oml&, Elem, Elem)>;

struct CriteriaReport {
  bool order_reflection = true;
  bool modus_ponens = true;
  bool modus_tollens = true;
  std::vector<std::string> witnesses;

  bool pass() const { return order_reflection && modus_ponens && modus_tollens; }
};

// Checks, for every pair, that a <= b iff op(a,b) = top, a & op(a,b) <= b,
// and ortho(b) & op(a,b) <= ortho(a).
CriteriaReport implication_criteria_check(const Oml& l, const BinaryOp& op);
CriteriaReport implication_criteria_check(const Oml& l, Arrow arrow);

// a = (a & b) | (a & ortho(b)).
bool commutes(const Oml& l, Elem a, Elem b);
ElementSubset commutant(const Oml& l, const ElementSubset& subset);
// Join of the commutant members c for which (b1 & c) commutes with (b2 & c)
// for all b1, b2 in the subset.
Elem amalgam(const Oml& l, const ElementSubset& subset);
ElementSubset center(const Oml& l);
bool is_irreducible(const Oml& l);
// Maximal Boolean subalgebras, each given by its carrier.
std::vector<ElementSubset> blocks(const Oml& l);

}  // namespace qworlds

template <>
struct std::hash<qworlds::Elem> {
  std::size_t operator()(qworlds::Elem e) const noexcept { return e.index; }
};
