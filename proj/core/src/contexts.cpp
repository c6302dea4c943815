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

#include "qworlds/contexts.hpp"

#include <algorithm>
#include <sstream>

#include "qworlds/error.hpp"
#include "qworlds/lattice_io.hpp"

namespace qworlds {
namespace {

// Atoms are given in increasing index order; the carrier is every join of
// a subset of them. Checks that joins of disjoint atom sets never collide and
// that the map from atom sets is a homomorphism for meet, join and ortho.
bool build_context(const Oml& l, const std::vector<Elem>& atoms,
                   std::vector<AtomMask>& mask_by_elem, std::vector<Elem>& by_mask) {
  const std::size_t k = atoms.size();
  if (k >= 32 || (std::size_t{1} << k) > l.size()) return false;
  const AtomMask full = (AtomMask{1} << k) - 1;
  by_mask.assign(std::size_t{1} << k, l.bottom());
  mask_by_elem.assign(l.size(), 0);
  std::vector<bool> seen(l.size(), false);
  for (AtomMask m = 0; m <= full; ++m) {
    Elem acc = l.bottom();
    for (std::size_t i = 0; i < k; ++i) {
      if (m >> i & 1) acc = l.join(acc, atoms[i]);
    }
    if (seen[acc.index]) return false;
    seen[acc.index] = true;
    by_mask[m] = acc;
    mask_by_elem[acc.index] = m;
  }
  for (AtomMask m1 = 0; m1 <= full; ++m1) {
    if (by_mask[full & ~m1] != l.ortho(by_mask[m1])) return false;
    for (AtomMask m2 = m1 + 1; m2 <= full; ++m2) {
      if (by_mask[m1 & m2] != l.meet(by_mask[m1], by_mask[m2])) return false;
      if (by_mask[m1 | m2] != l.join(by_mask[m1], by_mask[m2])) return false;
    }
  }
  return true;
}

}  // namespace

AtomMask BooleanContext::mask_of(Elem a) const {
  if (!contains(a)) {
    throw Error(ErrorCode::kElementNotInContext,
                "element index " + std::to_string(a.index) + " is not in context " +
                    std::to_string(id_));
  }
  return mask_by_elem_[a.index];
}

ContextPoset ContextPoset::enumerate(const Oml& l, const ContextOptions& options) {
  ContextPoset poset(l);
  std::vector<std::vector<Elem>> partitions;

  // Orthogonal decompositions of the unit, parts taken in increasing index
  // order. Each Boolean subalgebra is generated by exactly one of them, its
  // set of atoms.
  std::vector<Elem> chosen;
  auto search = [&](auto& self, Elem remaining) -> void {
    if (remaining == l.bottom()) {
      partitions.push_back(chosen);
      if (partitions.size() > options.cap + 1) {
        throw Error(ErrorCode::kSizeLimitExceeded,
                    "more than " + std::to_string(options.cap) + " contexts");
      }
      return;
    }
    const std::uint32_t start = chosen.empty() ? 0 : chosen.back().index + 1;
    for (std::uint32_t i = start; i < l.size(); ++i) {
      const Elem p(i);
      if (p == l.bottom() || !l.leq(p, remaining)) continue;
      if (chosen.size() + 1 > kMaxContextAtoms) continue;
      chosen.push_back(p);
      self(self, l.meet(remaining, l.ortho(p)));
      chosen.pop_back();
    }
  };
  search(search, l.top());

  std::vector<BooleanContext> contexts;
  for (const auto& atoms : partitions) {
    BooleanContext ctx;
    if (!build_context(l, atoms, ctx.mask_by_elem_, ctx.by_mask_)) {
      throw Error(ErrorCode::kNotOrthomodular,
                  "orthogonal decomposition does not generate a Boolean subalgebra");
    }
    ctx.atoms_ = atoms;
    ctx.carrier_ = ElementSubset(l, ctx.by_mask_);
    ctx.elements_ = ctx.carrier_.members();
    contexts.push_back(std::move(ctx));
  }
  poset.includes_trivial_ = options.include_trivial || contexts.size() == 1;
  if (!poset.includes_trivial_) {
    std::erase_if(contexts, [](const BooleanContext& c) { return c.is_trivial(); });
  }
  if (contexts.size() > options.cap) {
    throw Error(ErrorCode::kSizeLimitExceeded,
                std::to_string(contexts.size()) + " contexts exceed the cap of " +
                    std::to_string(options.cap));
  }
  std::sort(contexts.begin(), contexts.end(),
            [](const BooleanContext& a, const BooleanContext& b) {
              if (a.elements_.size() != b.elements_.size()) {
                return a.elements_.size() < b.elements_.size();
              }
              return a.elements_ < b.elements_;
            });

  const std::size_t n = contexts.size();
  for (std::size_t i = 0; i < n; ++i) contexts[i].id_ = i;
  poset.leq_.assign(n * n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& small = contexts[i].elements_;
      bool sub = small.size() <= contexts[j].elements_.size();
      for (std::size_t e = 0; sub && e < small.size(); ++e) {
        sub = contexts[j].contains(small[e]);
      }
      poset.leq_[i * n + j] = sub;
    }
  }
  poset.lower_.assign(n, {});
  poset.upper_.assign(n, {});
  for (std::size_t lo = 0; lo < n; ++lo) {
    for (std::size_t hi = lo + 1; hi < n; ++hi) {
      if (!poset.leq_[lo * n + hi]) continue;
      bool cover = true;
      for (std::size_t mid = lo + 1; mid < hi && cover; ++mid) {
        if (poset.leq_[lo * n + mid] && poset.leq_[mid * n + hi]) cover = false;
      }
      if (cover) {
        poset.lower_[hi].push_back(lo);
        poset.upper_[lo].push_back(hi);
      }
    }
  }
  poset.contexts_ = std::move(contexts);
  return poset;
}

std::vector<std::size_t> ContextPoset::restriction(std::size_t sub, std::size_t super) const {
  if (sub >= size() || super >= size() || !leq(sub, super)) {
    throw Error(ErrorCode::kInvalidArgument, "restriction requires an inclusion of contexts");
  }
  const auto& big = contexts_[super];
  const auto& small = contexts_[sub];
  std::vector<std::size_t> map(big.atom_count());
  for (std::size_t j = 0; j < small.atom_count(); ++j) {
    const AtomMask below = big.mask_of(small.atoms()[j]);
    for (std::size_t i = 0; i < big.atom_count(); ++i) {
      if (below >> i & 1) map[i] = j;
    }
  }
  return map;
}

AtomMask ContextPoset::restrict_mask(std::size_t sub, std::size_t super, AtomMask mask) const {
  const auto map = restriction(sub, super);
  AtomMask out = 0;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (mask >> i & 1) out |= AtomMask{1} << map[i];
  }
  return out;
}

std::optional<std::size_t> ContextPoset::find(const ElementSubset& carrier) const {
  for (const auto& c : contexts_) {
    if (c.carrier() == carrier) return c.id();
  }
  return std::nullopt;
}

std::size_t ContextPoset::total_points() const {
  std::size_t total = 0;
  for (const auto& c : contexts_) total += c.atom_count();
  return total;
}

std::vector<StonePoint> stone_points(const BooleanContext& context) {
  std::vector<StonePoint> points;
  for (std::size_t i = 0; i < context.atom_count(); ++i) points.push_back({context.id(), i});
  return points;
}

bool evaluate_point(const ContextPoset& poset, const StonePoint& point, Elem b) {
  const auto& ctx = poset[point.context];
  return (stone_rep(ctx, b) >> point.atom & 1) != 0;
}

AtomMask stone_rep(const BooleanContext& context, Elem b) { return context.mask_of(b); }

std::string format_context(const ContextPoset& poset, std::size_t id) {
  const Oml& l = poset.lattice();
  std::string out = "context " + std::to_string(id) + ": {";
  bool first = true;
  for (Elem e : poset[id].elements()) {
    if (!first) out += ", ";
    out += l.name(e);
    first = false;
  }
  return out + "}";
}

std::string format_contexts(const ContextPoset& poset) {
  std::string out;
  for (std::size_t i = 0; i < poset.size(); ++i) out += format_context(poset, i) + "\n";
  return out;
}

std::string contexts_dot(const ContextPoset& poset) {
  const Oml& l = poset.lattice();
  std::ostringstream out;
  out << "digraph contexts {\n  rankdir=BT;\n  node [shape=box];\n";
  for (const auto& ctx : poset.contexts()) {
    std::string label;
    for (Elem a : ctx.atoms()) label += (label.empty() ? "" : " ") + l.name(a);
    out << "  c" << ctx.id() << " [label=" << dot_quote("B" + std::to_string(ctx.id()) + ": " + label)
        << "];\n";
  }
  for (std::size_t hi = 0; hi < poset.size(); ++hi) {
    for (std::size_t lo : poset.lower_covers(hi)) out << "  c" << lo << " -> c" << hi << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace qworlds
