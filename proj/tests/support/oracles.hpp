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

// Brute-force reference implementations used to check the library. They
// favour obviousness over speed and share no code with the library beyond
// the lattice tables and the value types.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qworlds/contexts.hpp"
#include "qworlds/formula.hpp"
#include "qworlds/lset.hpp"
#include "qworlds/oml.hpp"
#include "qworlds/presheaf.hpp"

namespace qworlds::oracle {

enum class Verdict { kValid, kNotALattice, kNotOrtho, kNotOrthomodular };

// Axiom scan straight from a raw description.
inline Verdict classify(const RawLattice& raw) {
  const std::size_t n = raw.elements.size();
  const auto index = [&](const std::string& name) {
    return static_cast<std::size_t>(
        std::find(raw.elements.begin(), raw.elements.end(), name) - raw.elements.begin());
  };
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
  for (const auto& [x, y] : raw.order) le[index(x)][index(y)] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && le[i][j] && le[j][i]) return Verdict::kNotALattice;

  const auto bound = [&](std::size_t a, std::size_t b, bool upper) -> std::optional<std::size_t> {
    std::vector<std::size_t> candidates;
    for (std::size_t c = 0; c < n; ++c) {
      const bool ok = upper ? (le[a][c] && le[b][c]) : (le[c][a] && le[c][b]);
      if (ok) candidates.push_back(c);
    }
    for (std::size_t c : candidates) {
      bool best = true;
      for (std::size_t d : candidates) best = best && (upper ? le[c][d] : le[d][c]);
      if (best) return c;
    }
    return std::nullopt;
  };
  std::vector<std::vector<std::size_t>> meet(n, std::vector<std::size_t>(n));
  std::vector<std::vector<std::size_t>> join(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto m = bound(a, b, false);
      const auto j = bound(a, b, true);
      if (!m || !j) return Verdict::kNotALattice;
      meet[a][b] = *m;
      join[a][b] = *j;
    }
  std::size_t bottom = 0;
  std::size_t top = 0;
  for (std::size_t c = 0; c < n; ++c) {
    bool is_bottom = true;
    bool is_top = true;
    for (std::size_t d = 0; d < n; ++d) {
      is_bottom = is_bottom && le[c][d];
      is_top = is_top && le[d][c];
    }
    if (is_bottom) bottom = c;
    if (is_top) top = c;
  }

  std::vector<std::optional<std::size_t>> perp(n);
  for (const auto& [x, y] : raw.ortho) perp[index(x)] = index(y);
  for (std::size_t a = 0; a < n; ++a) {
    if (!perp[a] || !perp[*perp[a]] || *perp[*perp[a]] != a) return Verdict::kNotOrtho;
    if (join[a][*perp[a]] != top || meet[a][*perp[a]] != bottom) return Verdict::kNotOrtho;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (le[a][b] && !le[*perp[b]][*perp[a]]) return Verdict::kNotOrtho;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (le[a][b] && join[a][meet[b][*perp[a]]] != b) return Verdict::kNotOrthomodular;
  return Verdict::kValid;
}

inline bool commute(const Oml& l, Elem a, Elem b) {
  return l.join(l.meet(a, b), l.meet(a, l.ortho(b))) == a;
}

// Closure of a set of elements under meet, join and complement.
inline std::set<std::uint32_t> closure(const Oml& l, std::set<std::uint32_t> xs) {
  xs.insert(l.bottom().index);
  xs.insert(l.top().index);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::uint32_t> snapshot(xs.begin(), xs.end());
    for (std::uint32_t a : snapshot) {
      grew = xs.insert(l.ortho(Elem(a)).index).second || grew;
      for (std::uint32_t b : snapshot) {
        grew = xs.insert(l.meet(Elem(a), Elem(b)).index).second || grew;
        grew = xs.insert(l.join(Elem(a), Elem(b)).index).second || grew;
      }
    }
  }
  return xs;
}

// Boolean subalgebras grown from {0, 1} by adjoining one element that
// commutes with everything already present and closing again.
inline std::set<std::set<std::uint32_t>> boolean_subalgebras(const Oml& l) {
  std::set<std::set<std::uint32_t>> found;
  std::vector<std::set<std::uint32_t>> frontier = {closure(l, {})};
  found.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<std::set<std::uint32_t>> next;
    for (const auto& algebra : frontier) {
      for (Elem x : l.elements()) {
        if (algebra.count(x.index)) continue;
        bool ok = true;
        for (std::uint32_t y : algebra) ok = ok && commute(l, x, Elem(y));
        if (!ok) continue;
        auto grown = algebra;
        grown.insert(x.index);
        grown = closure(l, grown);
        if (found.insert(grown).second) next.push_back(grown);
      }
    }
    frontier = std::move(next);
  }
  return found;
}

// Smallest carrier element above a, as a meet of everything above it.
inline Elem dasein_in(const Oml& l, const BooleanContext& context, Elem a) {
  Elem out = l.top();
  for (Elem b : context.elements())
    if (l.leq(a, b)) out = l.meet(out, b);
  return out;
}

// Atoms of the context lying below a carrier element, found by order.
inline AtomMask atoms_below(const Oml& l, const BooleanContext& context, Elem b) {
  AtomMask m = 0;
  for (std::size_t i = 0; i < context.atoms().size(); ++i)
    if (l.leq(context.atoms()[i], b)) m |= AtomMask{1} << i;
  return m;
}

inline std::vector<AtomMask> dasein_masks(const ContextPoset& poset, Elem a) {
  const Oml& l = poset.lattice();
  std::vector<AtomMask> out;
  for (const BooleanContext& c : poset.contexts()) out.push_back(atoms_below(l, c, dasein_in(l, c, a)));
  return out;
}

inline bool masks_leq(const std::vector<AtomMask>& s, const std::vector<AtomMask>& t) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if ((s[i] & ~t[i]) != 0) return false;
  return true;
}

// Join of every element whose daseinisation lies below the family.
inline Elem eps(const ContextPoset& poset, const std::vector<AtomMask>& s) {
  const Oml& l = poset.lattice();
  Elem out = l.bottom();
  for (Elem a : l.elements())
    if (masks_leq(dasein_masks(poset, a), s)) out = l.join(out, a);
  return out;
}

// Index of the atom of `sub` above atom `atom` of `super`, found by order.
inline std::size_t atom_above(const ContextPoset& poset, std::size_t sub, std::size_t super,
                              std::size_t atom) {
  const Oml& l = poset.lattice();
  const Elem x = poset[super].atoms()[atom];
  for (std::size_t i = 0; i < poset[sub].atoms().size(); ++i)
    if (l.leq(x, poset[sub].atoms()[i])) return i;
  return poset[sub].atoms().size();
}

inline bool compatible(const ContextPoset& poset, const std::vector<AtomMask>& s) {
  for (std::size_t hi = 0; hi < poset.size(); ++hi)
    for (std::size_t lo = 0; lo < poset.size(); ++lo) {
      if (lo == hi || !poset.leq(lo, hi)) continue;
      for (std::size_t x = 0; x < poset[hi].atom_count(); ++x)
        if ((s[hi] >> x & 1) && !(s[lo] >> atom_above(poset, lo, hi, x) & 1)) return false;
    }
  return true;
}

// Every compatible family, by odometer over all per-context subsets.
inline std::vector<std::vector<AtomMask>> all_subobjects(const ContextPoset& poset) {
  std::vector<std::vector<AtomMask>> out;
  std::vector<AtomMask> cur(poset.size(), 0);
  while (true) {
    if (compatible(poset, cur)) out.push_back(cur);
    std::size_t i = 0;
    while (i < cur.size()) {
      if (cur[i] < poset[i].full_mask()) {
        ++cur[i];
        break;
      }
      cur[i] = 0;
      ++i;
    }
    if (i == cur.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Number of compatible choices of one atom per context, by backtracking in
// context order with a full compatibility check against earlier choices.
inline std::size_t count_global_sections(const ContextPoset& poset) {
  std::vector<std::size_t> choice(poset.size(), 0);
  std::size_t count = 0;
  const std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == poset.size()) {
      ++count;
      return;
    }
    for (std::size_t x = 0; x < poset[k].atom_count(); ++x) {
      bool ok = true;
      for (std::size_t e = 0; e < k && ok; ++e) {
        if (poset.leq(e, k)) ok = atom_above(poset, e, k, x) == choice[e];
        if (poset.leq(k, e)) ok = atom_above(poset, k, e, choice[e]) == x;
      }
      if (!ok) continue;
      choice[k] = x;
      go(k + 1);
    }
  };
  go(0);
  return count;
}

// Reference evaluator: the recursive truth-value clauses, no memoisation.
template <typename A>
class NaiveEvaluator {
 public:
  using Value = typename A::Value;
  NaiveEvaluator(const Universe<A>& universe, Arrow arrow) : u_(universe), arrow_(arrow) {}

  Value eq(LSetId x, LSetId y) const {
    const A& alg = u_.algebra();
    Value out = alg.top();
    for (const auto& [m, v] : u_.entries(x)) out = alg.meet(out, alg.implies(arrow_, v, in(m, y)));
    for (const auto& [m, v] : u_.entries(y)) out = alg.meet(out, alg.implies(arrow_, v, in(m, x)));
    return out;
  }
  Value in(LSetId x, LSetId y) const {
    const A& alg = u_.algebra();
    Value out = alg.bottom();
    for (const auto& [m, v] : u_.entries(y)) out = alg.join(out, alg.meet(v, eq(m, x)));
    return out;
  }
  Value eval(const Formula& f, std::map<std::string, LSetId> env) const {
    const A& alg = u_.algebra();
    switch (f.kind) {
      case FormulaKind::kEq:
        return eq(env.at(f.var), env.at(f.other));
      case FormulaKind::kIn:
        return in(env.at(f.var), env.at(f.other));
      case FormulaKind::kNot:
        return alg.negate(eval(*f.left, env));
      case FormulaKind::kAnd:
        return alg.meet(eval(*f.left, env), eval(*f.right, env));
      case FormulaKind::kOr:
        return alg.join(eval(*f.left, env), eval(*f.right, env));
      case FormulaKind::kImplies:
        return alg.implies(arrow_, eval(*f.left, env), eval(*f.right, env));
      case FormulaKind::kIff: {
        const Value a = eval(*f.left, env);
        const Value b = eval(*f.right, env);
        return alg.meet(alg.implies(arrow_, a, b), alg.implies(arrow_, b, a));
      }
      case FormulaKind::kForallIn: {
        Value out = alg.top();
        for (const auto& [m, v] : u_.entries(env.at(f.other))) {
          auto inner = env;
          inner[f.var] = m;
          out = alg.meet(out, alg.implies(arrow_, v, eval(*f.left, inner)));
        }
        return out;
      }
      case FormulaKind::kExistsIn: {
        Value out = alg.bottom();
        for (const auto& [m, v] : u_.entries(env.at(f.other))) {
          auto inner = env;
          inner[f.var] = m;
          out = alg.join(out, alg.meet(v, eval(*f.left, inner)));
        }
        return out;
      }
      default:
        throw std::logic_error("unbounded quantifier in reference evaluator");
    }
  }

 private:
  const Universe<A>& u_;
  Arrow arrow_;
};

}  // namespace qworlds::oracle
