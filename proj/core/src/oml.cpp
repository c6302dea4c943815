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

#include "qworlds/oml.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "qworlds/error.hpp"

namespace qworlds {
namespace {

std::string quote(const std::string& s) { return "'" + s + "'"; }

}  // namespace

Oml Oml::verify(const RawLattice& raw) {
  const std::size_t n = raw.elements.size();
  if (n == 0) throw Error(ErrorCode::kNotALattice, "lattice has no elements");

  Oml l;
  l.names_ = raw.elements;
  std::unordered_map<std::string, std::uint32_t> index;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (l.names_[i].empty()) {
      throw Error(ErrorCode::kSyntaxError, "empty element name");
    }
    if (!index.emplace(l.names_[i], i).second) {
      throw Error(ErrorCode::kSyntaxError, "duplicate element " + quote(l.names_[i]));
    }
  }
  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) {
      throw Error(ErrorCode::kSyntaxError, "unknown element " + quote(name));
    }
    return it->second;
  };

  // Reflexive-transitive closure of the supplied relation.
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) rel[i][i] = true;
  for (const auto& [x, y] : raw.order) rel[lookup(x)][lookup(y)] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!rel[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (rel[k][j]) rel[i][j] = true;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rel[i][j] && rel[j][i]) {
        throw Error(ErrorCode::kNotALattice,
                    "order is not antisymmetric: " + quote(l.names_[i]) + " and " +
                        quote(l.names_[j]) + " lie below each other");
      }
    }
  }
  l.leq_.assign(n * n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) l.leq_[i * n + j] = rel[i][j];
  }

  // Greatest lower bound and least upper bound of every pair.
  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      std::optional<std::size_t> glb;
      std::optional<std::size_t> lub;
      for (std::size_t c = 0; c < n; ++c) {
        if (rel[c][a] && rel[c][b] && (!glb || rel[*glb][c])) glb = c;
        if (rel[a][c] && rel[b][c] && (!lub || rel[c][*lub])) lub = c;
      }
      // The candidate found by the scan must dominate every lower bound.
      for (std::size_t c = 0; c < n && glb; ++c) {
        if (rel[c][a] && rel[c][b] && !rel[c][*glb]) glb.reset();
      }
      for (std::size_t c = 0; c < n && lub; ++c) {
        if (rel[a][c] && rel[b][c] && !rel[*lub][c]) lub.reset();
      }
      if (!glb || !lub) {
        throw Error(ErrorCode::kNotALattice,
                    std::string(glb ? "no join" : "no meet") + " for " + quote(l.names_[a]) +
                        " and " + quote(l.names_[b]));
      }
      l.meet_[a * n + b] = l.meet_[b * n + a] = static_cast<std::uint32_t>(*glb);
      l.join_[a * n + b] = l.join_[b * n + a] = static_cast<std::uint32_t>(*lub);
    }
  }
  std::uint32_t bottom = 0;
  std::uint32_t top = 0;
  for (std::uint32_t i = 1; i < n; ++i) {
    bottom = l.meet_[bottom * n + i];
    top = l.join_[top * n + i];
  }
  l.bottom_ = Elem(bottom);
  l.top_ = Elem(top);

  // Orthocomplement: total, involutive, order-reversing, complementing.
  l.ortho_.assign(n, static_cast<std::uint32_t>(n));
  for (const auto& [x, y] : raw.ortho) {
    auto i = lookup(x);
    auto j = lookup(y);
    if (l.ortho_[i] != n && l.ortho_[i] != j) {
      throw Error(ErrorCode::kNotOrtho, "two complements given for " + quote(x));
    }
    l.ortho_[i] = j;
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    if (l.ortho_[i] == n) {
      throw Error(ErrorCode::kNotOrtho, "no complement given for " + quote(l.names_[i]));
    }
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    const std::uint32_t ca = l.ortho_[a];
    if (l.ortho_[ca] != a) {
      throw Error(ErrorCode::kNotOrtho, "complement is not an involution at " +
                                            quote(l.names_[a]));
    }
    if (l.join_[a * n + ca] != top || l.meet_[a * n + ca] != bottom) {
      throw Error(ErrorCode::kNotOrtho, quote(l.names_[ca]) + " is not a complement of " +
                                            quote(l.names_[a]));
    }
    for (std::uint32_t b = 0; b < n; ++b) {
      if (rel[a][b] && !rel[l.ortho_[b]][ca]) {
        throw Error(ErrorCode::kNotOrtho, "complement is not order-reversing on " +
                                              quote(l.names_[a]) + " <= " +
                                              quote(l.names_[b]));
      }
    }
  }

  // Orthomodular law: a <= b implies b = a | (b & ortho(a)).
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (!rel[a][b]) continue;
      const std::uint32_t rhs = l.join_[a * n + l.meet_[b * n + l.ortho_[a]]];
      if (rhs != b) {
        throw Error(ErrorCode::kNotOrthomodular,
                    "orthomodular law fails for " + quote(l.names_[a]) + " <= " +
                        quote(l.names_[b]));
      }
    }
  }

  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      if (x == y || !rel[x][y]) continue;
      bool cover = true;
      for (std::uint32_t z = 0; z < n && cover; ++z) {
        if (z != x && z != y && rel[x][z] && rel[z][y]) cover = false;
      }
      if (cover) {
        l.covers_.emplace_back(Elem(x), Elem(y));
        if (x == bottom) l.atoms_.push_back(Elem(y));
      }
    }
  }
  return l;
}

Elem Oml::meet_all(const std::vector<Elem>& xs) const {
  Elem acc = top_;
  for (Elem x : xs) acc = meet(acc, x);
  return acc;
}

Elem Oml::join_all(const std::vector<Elem>& xs) const {
  Elem acc = bottom_;
  for (Elem x : xs) acc = join(acc, x);
  return acc;
}

std::optional<Elem> Oml::find(std::string_view name) const {
  for (std::uint32_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return Elem(i);
  }
  return std::nullopt;
}

Elem Oml::at(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw Error(ErrorCode::kInvalidArgument, "unknown element '" + std::string(name) + "'");
}

std::vector<Elem> Oml::elements() const {
  std::vector<Elem> out;
  out.reserve(size());
  for (std::uint32_t i = 0; i < size(); ++i) out.emplace_back(i);
  return out;
}

ElementSubset::ElementSubset(const Oml& lattice) : bits_(lattice.size(), false) {}

ElementSubset::ElementSubset(const Oml& lattice, const std::vector<Elem>& members)
    : bits_(lattice.size(), false) {
  for (Elem e : members) insert(e);
}

ElementSubset ElementSubset::all(const Oml& lattice) {
  ElementSubset s(lattice);
  s.bits_.assign(lattice.size(), true);
  return s;
}

void ElementSubset::insert(Elem a) {
  if (a.index >= bits_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "element outside lattice");
  }
  bits_[a.index] = true;
}

std::size_t ElementSubset::size() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<Elem> ElementSubset::members() const {
  std::vector<Elem> out;
  for (std::uint32_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.emplace_back(i);
  }
  return out;
}

std::string format_subset(const Oml& lattice, const ElementSubset& subset) {
  std::string out = "{";
  bool first = true;
  for (Elem e : subset.members()) {
    if (!first) out += ", ";
    out += lattice.name(e);
    first = false;
  }
  return out + "}";
}

Arrow parse_arrow(std::string_view text) {
  if (text.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
      case 'S': return Arrow::kSasaki;
      case 'C': return Arrow::kContrapositive;
      case 'R': return Arrow::kRelevance;
      default: break;
    }
  }
  throw Error(ErrorCode::kInvalidArgument,
              "implication must be S, C or R, got '" + std::string(text) + "'");
}

std::string_view arrow_name(Arrow arrow) {
  switch (arrow) {
    case Arrow::kSasaki: return "S";
    case Arrow::kContrapositive: return "C";
    case Arrow::kRelevance: return "R";
  }
  return "?";
}

Elem sasaki(const Oml& l, Elem a, Elem b) { return l.join(l.ortho(a), l.meet(a, b)); }

Elem contrapositive(const Oml& l, Elem a, Elem b) {
  return sasaki(l, l.ortho(b), l.ortho(a));
}

Elem relevance(const Oml& l, Elem a, Elem b) {
  return l.meet(sasaki(l, a, b), contrapositive(l, a, b));
}

Elem implies(const Oml& l, Arrow arrow, Elem a, Elem b) {
  switch (arrow) {
    case Arrow::kSasaki: return sasaki(l, a, b);
    case Arrow::kContrapositive: return contrapositive(l, a, b);
    case Arrow::kRelevance: return relevance(l, a, b);
  }
  return l.top();
}

CriteriaReport implication_criteria_check(const Oml& l, const BinaryOp& op) {
  CriteriaReport report;
  auto witness = [&](const char* what, Elem a, Elem b) {
    if (report.witnesses.size() < 16) {
      report.witnesses.push_back(std::string(what) + " fails at a=" + l.name(a) +
                                 ", b=" + l.name(b));
    }
  };
  for (Elem a : l.elements()) {
    for (Elem b : l.elements()) {
      const Elem ab = op(l, a, b);
      if (l.leq(a, b) != (ab == l.top())) {
        report.order_reflection = false;
        witness("order reflection", a, b);
      }
      if (!l.leq(l.meet(a, ab), b)) {
        report.modus_ponens = false;
        witness("modus ponens", a, b);
      }
      if (!l.leq(l.meet(l.ortho(b), ab), l.ortho(a))) {
        report.modus_tollens = false;
        witness("modus tollens", a, b);
      }
    }
  }
  return report;
}

CriteriaReport implication_criteria_check(const Oml& l, Arrow arrow) {
  return implication_criteria_check(
      l, [arrow](const Oml& lat, Elem a, Elem b) { return implies(lat, arrow, a, b); });
}

bool commutes(const Oml& l, Elem a, Elem b) {
  return a == l.join(l.meet(a, b), l.meet(a, l.ortho(b)));
}

ElementSubset commutant(const Oml& l, const ElementSubset& subset) {
  ElementSubset out(l);
  const auto members = subset.members();
  for (Elem a : l.elements()) {
    bool all = true;
    for (Elem b : members) {
      if (!commutes(l, a, b)) {
        all = false;
        break;
      }
    }
    if (all) out.insert(a);
  }
  return out;
}

Elem amalgam(const Oml& l, const ElementSubset& subset) {
  const auto members = subset.members();
  Elem acc = l.bottom();
  for (Elem c : commutant(l, subset).members()) {
    bool ok = true;
    for (std::size_t i = 0; i < members.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < members.size() && ok; ++j) {
        ok = commutes(l, l.meet(members[i], c), l.meet(members[j], c));
      }
    }
    if (ok) acc = l.join(acc, c);
  }
  return acc;
}

ElementSubset center(const Oml& l) { return commutant(l, ElementSubset::all(l)); }

bool is_irreducible(const Oml& l) { return center(l).size() <= 2; }

std::vector<ElementSubset> blocks(const Oml& l) {
  // In a finite OML a maximal Boolean subalgebra is generated by a set of
  // pairwise orthogonal atoms whose join is top.
  const auto& atoms = l.atoms();
  std::vector<ElementSubset> out;
  std::vector<Elem> chosen;
  auto emit = [&] {
    ElementSubset carrier(l);
    const std::size_t k = chosen.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      Elem acc = l.bottom();
      for (std::size_t i = 0; i < k; ++i) {
        if (mask >> i & 1) acc = l.join(acc, chosen[i]);
      }
      carrier.insert(acc);
    }
    out.push_back(std::move(carrier));
  };
  auto search = [&](auto& self, std::size_t start, Elem joined) -> void {
    if (joined == l.top()) {
      emit();
      return;
    }
    for (std::size_t i = start; i < atoms.size(); ++i) {
      if (!l.orthogonal(atoms[i], joined)) continue;
      chosen.push_back(atoms[i]);
      self(self, i + 1, l.join(joined, atoms[i]));
      chosen.pop_back();
    }
  };
  if (l.size() == 1) {
    out.push_back(ElementSubset::all(l));
    return out;
  }
  search(search, 0, l.bottom());
  return out;
}

}  // namespace qworlds
