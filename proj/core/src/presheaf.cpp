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

#include "qworlds/presheaf.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

#include "qworlds/error.hpp"
#include "qworlds/lattice_io.hpp"

namespace qworlds {
namespace detail {

struct CoverMap {
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::vector<std::size_t> map;  // atom of hi -> atom of lo

  AtomMask image(AtomMask m) const {
    AtomMask out = 0;
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (m >> i & 1) out |= AtomMask{1} << map[i];
    }
    return out;
  }
  AtomMask preimage(AtomMask m) const {
    AtomMask out = 0;
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (m >> map[i] & 1) out |= AtomMask{1} << i;
    }
    return out;
  }
};

struct PresheafData {
  explicit PresheafData(ContextPoset p) : poset(std::move(p)) {}

  ContextPoset poset;
  std::vector<AtomMask> dasein;  // element * contexts + context
  std::vector<CoverMap> covers;
  std::vector<std::vector<std::size_t>> below;  // covers with this context as hi
  std::vector<std::vector<std::size_t>> above;  // covers with this context as lo
};

}  // namespace detail

namespace {

std::string mask_text(const BooleanContext& ctx, const Oml& l, AtomMask m) {
  std::string out;
  for (std::size_t i = 0; i < ctx.atom_count(); ++i) {
    if (m >> i & 1) out += (out.empty() ? "" : " ") + l.name(ctx.atoms()[i]);
  }
  return out;
}

}  // namespace

std::vector<std::size_t> TruthValue::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < contexts.size(); ++i) {
    if (contexts[i]) out.push_back(i);
  }
  return out;
}

SpectralPresheaf::SpectralPresheaf(ContextPoset poset) {
  auto data = std::make_shared<detail::PresheafData>(std::move(poset));
  const ContextPoset& p = data->poset;
  const Oml& l = p.lattice();
  const std::size_t n = p.size();
  data->dasein.assign(l.size() * n, 0);
  for (Elem a : l.elements()) {
    for (std::size_t c = 0; c < n; ++c) {
      const auto& atoms = p[c].atoms();
      AtomMask m = 0;
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (!l.orthogonal(a, atoms[i])) m |= AtomMask{1} << i;
      }
      data->dasein[a.index * n + c] = m;
    }
  }
  data->below.assign(n, {});
  data->above.assign(n, {});
  for (std::size_t hi = 0; hi < n; ++hi) {
    for (std::size_t lo : p.lower_covers(hi)) {
      data->below[hi].push_back(data->covers.size());
      data->above[lo].push_back(data->covers.size());
      data->covers.push_back({lo, hi, p.restriction(lo, hi)});
    }
  }
  data_ = std::move(data);
}

SpectralPresheaf SpectralPresheaf::build(const Oml& lattice, const ContextOptions& options) {
  return SpectralPresheaf(ContextPoset::enumerate(lattice, options));
}

const ContextPoset& SpectralPresheaf::poset() const { return data_->poset; }
const Oml& SpectralPresheaf::lattice() const { return data_->poset.lattice(); }
std::size_t SpectralPresheaf::context_count() const { return data_->poset.size(); }

void SpectralPresheaf::check_owner(const ClopenSubobject& s) const {
  if (s.owner_ != data_.get()) {
    throw Error(ErrorCode::kMismatchedPresheaf, "subobject belongs to another presheaf");
  }
}

bool SpectralPresheaf::is_compatible(const std::vector<AtomMask>& masks) const {
  if (masks.size() != context_count()) return false;
  for (std::size_t c = 0; c < masks.size(); ++c) {
    if (masks[c] & ~data_->poset[c].full_mask()) return false;
  }
  for (const auto& cover : data_->covers) {
    if (cover.image(masks[cover.hi]) & ~masks[cover.lo]) return false;
  }
  return true;
}

ClopenSubobject SpectralPresheaf::make(std::vector<AtomMask> masks) const {
  if (masks.size() != context_count()) {
    throw Error(ErrorCode::kInvalidArgument, "expected " + std::to_string(context_count()) +
                                                 " components, got " +
                                                 std::to_string(masks.size()));
  }
  for (std::size_t c = 0; c < masks.size(); ++c) {
    if (masks[c] & ~data_->poset[c].full_mask()) {
      throw Error(ErrorCode::kNotASubobject,
                  "component " + std::to_string(c) + " names a missing atom");
    }
  }
  for (const auto& cover : data_->covers) {
    if (cover.image(masks[cover.hi]) & ~masks[cover.lo]) {
      throw Error(ErrorCode::kNotASubobject,
                  "restriction from context " + std::to_string(cover.hi) + " to context " +
                      std::to_string(cover.lo) + " leaves the subobject");
    }
  }
  return ClopenSubobject(data_.get(), std::move(masks));
}

ClopenSubobject SpectralPresheaf::top() const {
  std::vector<AtomMask> masks(context_count());
  for (std::size_t c = 0; c < masks.size(); ++c) masks[c] = data_->poset[c].full_mask();
  return ClopenSubobject(data_.get(), std::move(masks));
}

ClopenSubobject SpectralPresheaf::bottom() const {
  return ClopenSubobject(data_.get(), std::vector<AtomMask>(context_count(), 0));
}

ClopenSubobject SpectralPresheaf::meet(const ClopenSubobject& s, const ClopenSubobject& t) const {
  check_owner(s);
  check_owner(t);
  std::vector<AtomMask> masks(s.masks_.size());
  for (std::size_t c = 0; c < masks.size(); ++c) masks[c] = s.masks_[c] & t.masks_[c];
  return ClopenSubobject(data_.get(), std::move(masks));
}

ClopenSubobject SpectralPresheaf::join(const ClopenSubobject& s, const ClopenSubobject& t) const {
  check_owner(s);
  check_owner(t);
  std::vector<AtomMask> masks(s.masks_.size());
  for (std::size_t c = 0; c < masks.size(); ++c) masks[c] = s.masks_[c] | t.masks_[c];
  return ClopenSubobject(data_.get(), std::move(masks));
}

bool SpectralPresheaf::leq(const ClopenSubobject& s, const ClopenSubobject& t) const {
  check_owner(s);
  check_owner(t);
  for (std::size_t c = 0; c < s.masks_.size(); ++c) {
    if (s.masks_[c] & ~t.masks_[c]) return false;
  }
  return true;
}

ClopenSubobject SpectralPresheaf::meet_all(const std::vector<ClopenSubobject>& xs) const {
  ClopenSubobject acc = top();
  for (const auto& x : xs) acc = meet(acc, x);
  return acc;
}

ClopenSubobject SpectralPresheaf::join_all(const std::vector<ClopenSubobject>& xs) const {
  ClopenSubobject acc = bottom();
  for (const auto& x : xs) acc = join(acc, x);
  return acc;
}

AtomMask SpectralPresheaf::dasein_mask(Elem a, std::size_t context) const {
  return data_->dasein[a.index * context_count() + context];
}

ClopenSubobject SpectralPresheaf::daseinise(Elem a) const {
  if (a.index >= lattice().size()) {
    throw Error(ErrorCode::kInvalidArgument, "element outside lattice");
  }
  const std::size_t n = context_count();
  auto first = data_->dasein.begin() + static_cast<std::ptrdiff_t>(a.index * n);
  return ClopenSubobject(data_.get(), std::vector<AtomMask>(first, first + static_cast<std::ptrdiff_t>(n)));
}

Elem SpectralPresheaf::to_element(const ClopenSubobject& s) const {
  check_owner(s);
  const Oml& l = lattice();
  Elem acc = l.top();
  for (std::size_t c = 0; c < s.masks_.size(); ++c) {
    acc = l.meet(acc, data_->poset[c].element_of(s.masks_[c]));
  }
  return acc;
}

ClopenSubobject SpectralPresheaf::star(const ClopenSubobject& s) const {
  return daseinise(lattice().ortho(to_element(s)));
}

ClopenSubobject SpectralPresheaf::double_star(const ClopenSubobject& s) const {
  return daseinise(to_element(s));
}

bool SpectralPresheaf::is_regular(const ClopenSubobject& s) const {
  return double_star(s) == s;
}

ClopenSubobject SpectralPresheaf::implies_s(const ClopenSubobject& s,
                                            const ClopenSubobject& t) const {
  const ClopenSubobject ss = star(s);
  return join(ss, star(join(ss, star(t))));
}

ClopenSubobject SpectralPresheaf::implies_c(const ClopenSubobject& s,
                                            const ClopenSubobject& t) const {
  return implies_s(star(t), star(s));
}

ClopenSubobject SpectralPresheaf::implies_r(const ClopenSubobject& s,
                                            const ClopenSubobject& t) const {
  return double_star(meet(implies_s(s, t), implies_c(s, t)));
}

ClopenSubobject SpectralPresheaf::implies(Arrow arrow, const ClopenSubobject& s,
                                          const ClopenSubobject& t) const {
  switch (arrow) {
    case Arrow::kSasaki: return implies_s(s, t);
    case Arrow::kContrapositive: return implies_c(s, t);
    case Arrow::kRelevance: return implies_r(s, t);
  }
  return top();
}

ClopenSubobject SpectralPresheaf::iff(Arrow arrow, const ClopenSubobject& s,
                                      const ClopenSubobject& t) const {
  return meet(implies(arrow, s, t), implies(arrow, t, s));
}

bool SpectralPresheaf::sub_commutes(const ClopenSubobject& s, const ClopenSubobject& t) const {
  return commutes(lattice(), to_element(s), to_element(t));
}

bool SpectralPresheaf::cp_identity_holds(const ClopenSubobject& s,
                                         const ClopenSubobject& t) const {
  const ClopenSubobject ts = star(t);
  return double_star(s) == star(join(star(s), meet(ts, star(ts))));
}

bool SpectralPresheaf::enumerable(const SubclOptions& options) const {
  return poset().total_points() <= options.enumeration_bits;
}

std::vector<ClopenSubobject> SpectralPresheaf::enumerate(const SubclOptions& options) const {
  if (!enumerable(options)) {
    throw Error(ErrorCode::kSizeLimitExceeded,
                std::to_string(poset().total_points()) +
                    " Stone points exceed the enumeration limit of " +
                    std::to_string(options.enumeration_bits));
  }
  const std::size_t n = context_count();
  std::vector<ClopenSubobject> out;
  std::vector<AtomMask> masks(n, 0);
  // Subcontexts come first, so each component only has to respect the
  // components already chosen below it.
  auto search = [&](auto& self, std::size_t c) -> void {
    if (c == n) {
      out.push_back(ClopenSubobject(data_.get(), masks));
      return;
    }
    AtomMask allowed = poset()[c].full_mask();
    for (std::size_t k : data_->below[c]) {
      const auto& cover = data_->covers[k];
      allowed &= cover.preimage(masks[cover.lo]);
    }
    // Walk all submasks of `allowed`, including zero.
    AtomMask sub = allowed;
    while (true) {
      masks[c] = sub;
      self(self, c + 1);
      if (sub == 0) break;
      sub = (sub - 1) & allowed;
    }
  };
  search(search, 0);
  std::sort(out.begin(), out.end());
  return out;
}

ClopenSubobject SpectralPresheaf::sample(Rng& rng) const {
  const Oml& l = lattice();
  const auto elems = l.elements();
  auto free_family = [&] {
    const std::size_t n = context_count();
    const std::size_t density = 1 + rng.below(7);  // out of 8
    std::vector<AtomMask> masks(n, 0);
    for (std::size_t c = n; c-- > 0;) {
      AtomMask forced = 0;
      for (std::size_t k : data_->above[c]) {
        const auto& cover = data_->covers[k];
        forced |= cover.image(masks[cover.hi]);
      }
      AtomMask m = forced;
      for (std::size_t i = 0; i < poset()[c].atom_count(); ++i) {
        if (rng.chance(density, 8)) m |= AtomMask{1} << i;
      }
      masks[c] = m;
    }
    return ClopenSubobject(data_.get(), std::move(masks));
  };
  switch (rng.below(6)) {
    case 0: return daseinise(rng.pick(elems));
    case 1: return star(free_family());
    case 2: {
      const Elem a = rng.pick(elems);
      const Elem b = rng.pick(elems);
      return join(daseinise(a), daseinise(b));
    }
    case 3: {
      const Elem a = rng.pick(elems);
      return meet(daseinise(a), free_family());
    }
    default: return free_family();
  }
}

std::vector<ClopenSubobject> SpectralPresheaf::population(Rng& rng, std::size_t samples,
                                                          const SubclOptions& options) const {
  if (enumerable(options)) return enumerate(options);
  std::vector<ClopenSubobject> out = {bottom(), top()};
  for (std::size_t i = 0; i < samples; ++i) out.push_back(sample(rng));
  return out;
}

EQuotient SpectralPresheaf::quotient(const SubclOptions& options) const {
  EQuotient q;
  const Oml& l = lattice();
  for (Elem a : l.elements()) q.canonical.push_back(daseinise(a));
  if (enumerable(options)) {
    q.materialized = true;
    q.members.assign(l.size(), {});
    for (auto& s : enumerate(options)) q.members[to_element(s).index].push_back(std::move(s));
  }
  return q;
}

std::vector<GlobalSection> SpectralPresheaf::global_sections(std::size_t limit) const {
  const std::size_t n = context_count();
  std::vector<GlobalSection> out;
  std::vector<std::size_t> atoms(n, 0);
  // Supercontexts first: a context below an already chosen one has its
  // point forced by the restriction maps.
  auto search = [&](auto& self, std::size_t remaining) -> void {
    if (out.size() >= limit) return;
    if (remaining == 0) {
      out.push_back({atoms});
      return;
    }
    const std::size_t c = remaining - 1;
    const auto& ups = data_->above[c];
    if (ups.empty()) {
      for (std::size_t a = 0; a < poset()[c].atom_count(); ++a) {
        atoms[c] = a;
        self(self, c);
      }
      return;
    }
    const std::size_t forced = data_->covers[ups[0]].map[atoms[data_->covers[ups[0]].hi]];
    for (std::size_t k : ups) {
      const auto& cover = data_->covers[k];
      if (cover.map[atoms[cover.hi]] != forced) return;
    }
    atoms[c] = forced;
    self(self, c);
  };
  search(search, n);
  std::sort(out.begin(), out.end(),
            [](const GlobalSection& a, const GlobalSection& b) { return a.atoms < b.atoms; });
  return out;
}

TruthValue SpectralPresheaf::truth_value(const ClopenSubobject& s,
                                         const ClopenSubobject& w) const {
  check_owner(s);
  check_owner(w);
  TruthValue v;
  v.contexts.assign(context_count(), false);
  for (std::size_t c = 0; c < context_count(); ++c) {
    v.contexts[c] = (w.masks_[c] & ~s.masks_[c]) == 0;
  }
  for (const auto& cover : data_->covers) {
    if (v.contexts[cover.hi] && !v.contexts[cover.lo]) {
      throw Error(ErrorCode::kNotALowerSet,
                  "context " + std::to_string(cover.hi) + " is in the truth value but its " +
                      "subcontext " + std::to_string(cover.lo) + " is not");
    }
  }
  return v;
}

std::string SpectralPresheaf::format(const ClopenSubobject& s) const {
  check_owner(s);
  std::string out = "[";
  bool first = true;
  for (std::size_t c = 0; c < context_count(); ++c) {
    if (s.masks_[c] == 0) continue;
    if (!first) out += " ; ";
    out += std::to_string(c) + ": " + mask_text(poset()[c], lattice(), s.masks_[c]);
    first = false;
  }
  return out + "]";
}

ClopenSubobject SpectralPresheaf::parse(std::string_view text) const {
  auto fail = [&](const std::string& what) -> ClopenSubobject {
    throw Error(ErrorCode::kSyntaxError, "subobject literal: " + what);
  };
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos >= text.size() || text[pos] != '[') return fail("expected '['");
  ++pos;
  std::vector<AtomMask> masks(context_count(), 0);
  skip();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    while (true) {
      skip();
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) return fail("expected context id at offset " + std::to_string(start));
      const std::size_t c = std::stoul(std::string(text.substr(start, pos - start)));
      if (c >= context_count()) return fail("no context " + std::to_string(c));
      skip();
      if (pos >= text.size() || text[pos] != ':') return fail("expected ':'");
      ++pos;
      while (true) {
        skip();
        start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
               text[pos] != ';' && text[pos] != ']') {
          ++pos;
        }
        if (start == pos) break;
        const std::string name(text.substr(start, pos - start));
        const auto elem = lattice().find(name);
        const auto& atoms = poset()[c].atoms();
        auto it = elem ? std::find(atoms.begin(), atoms.end(), *elem) : atoms.end();
        if (it == atoms.end()) {
          return fail("'" + name + "' is not an atom of context " + std::to_string(c));
        }
        masks[c] |= AtomMask{1} << (it - atoms.begin());
      }
      if (pos < text.size() && text[pos] == ';') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ']') {
        ++pos;
        break;
      }
      return fail("expected ';' or ']'");
    }
  }
  skip();
  if (pos != text.size()) return fail("trailing input");
  return make(std::move(masks));
}

std::string SpectralPresheaf::format_truth_value(const TruthValue& v) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t c : v.members()) {
    out += (first ? "" : ", ") + std::string("B") + std::to_string(c);
    first = false;
  }
  return out + "}";
}

std::string SpectralPresheaf::dot(const ClopenSubobject& s) const {
  check_owner(s);
  const Oml& l = lattice();
  std::ostringstream out;
  out << "digraph subobject {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (std::size_t c = 0; c < context_count(); ++c) {
    const auto& ctx = poset()[c];
    out << "  subgraph cluster_" << c << " {\n    label=" << dot_quote("B" + std::to_string(c))
        << ";\n";
    for (std::size_t i = 0; i < ctx.atom_count(); ++i) {
      const bool in = (s.masks_[c] >> i & 1) != 0;
      out << "    p" << c << "_" << i << " [label=" << dot_quote(l.name(ctx.atoms()[i]))
          << (in ? ", style=filled, fillcolor=gold" : "") << "];\n";
    }
    out << "  }\n";
  }
  for (const auto& cover : data_->covers) {
    for (std::size_t i = 0; i < cover.map.size(); ++i) {
      out << "  p" << cover.hi << "_" << i << " -> p" << cover.lo << "_" << cover.map[i]
          << " [color=gray];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace qworlds
