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

#include "qworlds/oml.hpp"
#include "qworlds/presheaf.hpp"

namespace qworlds {

// Truth-value algebra backed by the lattice itself: negation is the
// orthocomplement and implication one of the three conditionals.
class LatticeAlgebra {
 public:
  using Value = Elem;
  static constexpr std::string_view kName = "lattice";

  explicit LatticeAlgebra(Oml lattice) : lattice_(std::move(lattice)) {}

  const Oml& lattice() const { return lattice_; }

  Value top() const { return lattice_.top(); }
  Value bottom() const { return lattice_.bottom(); }
  Value meet(Value a, Value b) const { return lattice_.meet(a, b); }
  Value join(Value a, Value b) const { return lattice_.join(a, b); }
  bool leq(Value a, Value b) const { return lattice_.leq(a, b); }
  Value negate(Value a) const { return lattice_.ortho(a); }
  Value implies(Arrow arrow, Value a, Value b) const {
    return qworlds::implies(lattice_, arrow, a, b);
  }
  bool owns(Value a) const { return a.index < lattice_.size(); }

  std::string format(Value a) const { return lattice_.name(a); }
  // An element name; throws kInvalidArgument for unknown names.
  Value parse_value(std::string_view text) const { return lattice_.at(text); }

 private:
  Oml lattice_;
};

// Truth-value algebra of clopen subobjects of the spectral presheaf, with
// the paraconsistent star as negation.
class SubclAlgebra {
 public:
  using Value = ClopenSubobject;
  static constexpr std::string_view kName = "subcl";

  explicit SubclAlgebra(SpectralPresheaf presheaf) : presheaf_(std::move(presheaf)) {}

  const SpectralPresheaf& presheaf() const { return presheaf_; }
  const Oml& lattice() const { return presheaf_.lattice(); }

  Value top() const { return presheaf_.top(); }
  Value bottom() const { return presheaf_.bottom(); }
  Value meet(const Value& a, const Value& b) const { return presheaf_.meet(a, b); }
  Value join(const Value& a, const Value& b) const { return presheaf_.join(a, b); }
  bool leq(const Value& a, const Value& b) const { return presheaf_.leq(a, b); }
  Value negate(const Value& a) const { return presheaf_.star(a); }
  Value implies(Arrow arrow, const Value& a, const Value& b) const {
    return presheaf_.implies(arrow, a, b);
  }
  bool owns(const Value& a) const { return presheaf_.owns(a); }

  std::string format(const Value& a) const { return presheaf_.format(a); }
  // An element name (daseinised) or a subobject literal `[...]`.
  Value parse_value(std::string_view text) const;

 private:
  SpectralPresheaf presheaf_;
};

}  // namespace qworlds
