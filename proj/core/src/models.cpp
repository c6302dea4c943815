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

#include "qworlds/models.hpp"

#include <algorithm>
#include <sstream>

#include "qworlds/error.hpp"

namespace qworlds {
namespace detail {
extern const char* const kProvableDelta0Data;
}  // namespace detail

namespace {

void collect_support(const LatticeUniverse& universe, LSetId u, ElementSubset& out,
                     std::vector<bool>& seen) {
  if (seen[u.index]) return;
  seen[u.index] = true;
  for (const auto& [x, value] : universe.entries(u)) {
    out.insert(value);
    collect_support(universe, x, out, seen);
  }
}

void require_delta0(const Formula& f) {
  if (!is_delta0(f)) {
    throw Error(ErrorCode::kFormulaNotDelta0,
                "formula has unbounded quantifiers: " + to_string(f));
  }
}

void require_negation_free(const Formula& f) {
  require_delta0(f);
  if (!is_negation_free(f)) {
    throw Error(ErrorCode::kFormulaNotNegationFree,
                "formula uses not, -> or <->: " + to_string(f));
  }
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

ElementSubset support(const LatticeUniverse& universe, LSetId u) {
  return support(universe, std::vector<LSetId>{u});
}

ElementSubset support(const LatticeUniverse& universe, const std::vector<LSetId>& us) {
  ElementSubset out(universe.algebra().lattice());
  std::vector<bool> seen(universe.size(), false);
  for (LSetId u : us) collect_support(universe, u, out, seen);
  return out;
}

Elem commutator(const LatticeUniverse& universe, const std::vector<LSetId>& us) {
  return amalgam(universe.algebra().lattice(), support(universe, us));
}

UniverseBridge::UniverseBridge(LatticeUniverse& lattice_side, SubclUniverse& subcl_side)
    : lattice_(lattice_side), subcl_(subcl_side) {
  if (!(lattice_.algebra().lattice() == subcl_.algebra().lattice())) {
    throw Error(ErrorCode::kAlgebraMismatch, "the two universes are built over different lattices");
  }
}

LSetId UniverseBridge::lift(LSetId u) {
  if (auto it = lifted_.find(u); it != lifted_.end()) return it->second;
  if (!lattice_.valid(u)) throw Error(ErrorCode::kInvalidArgument, "unknown set");
  const SpectralPresheaf& p = subcl_.algebra().presheaf();
  std::vector<SubclUniverse::Entry> entries;
  for (const auto& [x, value] : lattice_.entries(u)) {
    entries.emplace_back(lift(x), p.daseinise(value));
  }
  const LSetId out = subcl_.make(std::move(entries));
  lifted_.emplace(u, out);
  return out;
}

LSetId UniverseBridge::project(LSetId u) {
  if (auto it = projected_.find(u); it != projected_.end()) return it->second;
  if (!subcl_.valid(u)) throw Error(ErrorCode::kInvalidArgument, "unknown set");
  const SpectralPresheaf& p = subcl_.algebra().presheaf();
  std::vector<LatticeUniverse::Entry> entries;
  for (const auto& [x, value] : subcl_.entries(u)) {
    entries.emplace_back(project(x), p.to_element(value));
  }
  // Distinct members can collapse onto one set; keep the join of their values.
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<LatticeUniverse::Entry> merged;
  const Oml& l = lattice_.algebra().lattice();
  for (auto& e : entries) {
    if (!merged.empty() && merged.back().first == e.first) {
      merged.back().second = l.join(merged.back().second, e.second);
    } else {
      merged.push_back(e);
    }
  }
  const LSetId out = lattice_.make(std::move(merged));
  projected_.emplace(u, out);
  return out;
}

std::vector<LSetId> UniverseBridge::lift(const std::vector<LSetId>& us) {
  std::vector<LSetId> out;
  for (LSetId u : us) out.push_back(lift(u));
  return out;
}

namespace {

template <typename U, typename Draw>
LSetId random_lset_impl(U& universe, Rng& rng, std::size_t max_rank, std::size_t max_width,
                        Draw draw) {
  if (max_rank == 0) return universe.empty();
  const std::size_t width = rng.below(max_width + 1);
  std::vector<typename U::Entry> entries;
  for (std::size_t i = 0; i < width; ++i) {
    const LSetId child = random_lset_impl(universe, rng, rng.below(max_rank), max_width, draw);
    auto value = draw();
    const bool repeated = std::any_of(entries.begin(), entries.end(),
                                      [&](const auto& e) { return e.first == child; });
    if (!repeated) entries.emplace_back(child, std::move(value));
  }
  return universe.make(std::move(entries));
}

}  // namespace

LSetId random_lset(LatticeUniverse& universe, Rng& rng, const RandomSetOptions& options) {
  const Oml& l = universe.algebra().lattice();
  const auto elems = l.elements();
  return random_lset_impl(universe, rng, options.max_rank, options.max_width, [&] {
    Elem e = rng.pick(elems);
    if (e == l.bottom() && rng.coin()) e = rng.pick(elems);
    return e;
  });
}

LSetId random_lset(SubclUniverse& universe, Rng& rng, const RandomSetOptions& options) {
  const SpectralPresheaf& p = universe.algebra().presheaf();
  return random_lset_impl(universe, rng, options.max_rank, options.max_width,
                          [&] { return p.sample(rng); });
}

FormulaPtr random_delta0(Rng& rng, const std::vector<std::string>& vars,
                         const RandomFormulaOptions& options) {
  if (vars.empty()) throw Error(ErrorCode::kInvalidArgument, "no variables to build atoms from");
  std::size_t fresh = 0;
  auto build = [&](auto& self, std::vector<std::string>& scope, std::size_t depth) -> FormulaPtr {
    if (depth == 0 || rng.chance(1, 4)) {
      const std::string x = rng.pick(scope);
      const std::string y = rng.pick(scope);
      return rng.coin() ? make_eq(x, y) : make_in(x, y);
    }
    const std::size_t kinds = options.negation_free ? 4 : 7;
    switch (rng.below(kinds)) {
      case 0: {
        FormulaPtr a = self(self, scope, depth - 1);
        return make_and(a, self(self, scope, depth - 1));
      }
      case 1: {
        FormulaPtr a = self(self, scope, depth - 1);
        return make_or(a, self(self, scope, depth - 1));
      }
      case 2:
      case 3: {
        const std::string domain = rng.pick(scope);
        const std::string var = "x" + std::to_string(fresh++);
        scope.push_back(var);
        FormulaPtr body = self(self, scope, depth - 1);
        scope.pop_back();
        const bool universal = rng.coin();
        return universal ? make_forall_in(var, domain, body) : make_exists_in(var, domain, body);
      }
      case 4: return make_not(self(self, scope, depth - 1));
      case 5: {
        FormulaPtr a = self(self, scope, depth - 1);
        return make_implies(a, self(self, scope, depth - 1));
      }
      default: {
        FormulaPtr a = self(self, scope, depth - 1);
        return make_iff(a, self(self, scope, depth - 1));
      }
    }
  };
  std::vector<std::string> scope = vars;
  return build(build, scope, options.max_depth);
}

std::vector<std::string> argument_order(const Formula& f) {
  const auto vars = free_variables(f);
  return {vars.begin(), vars.end()};
}

TransferCase check_transfer_negfree(const Formula& f, UniverseBridge& bridge,
                                    const std::vector<LSetId>& us, Arrow arrow) {
  require_negation_free(f);
  const auto vars = argument_order(f);
  const auto lifted = bridge.lift(us);
  const auto& lat = bridge.lattice_side();
  const auto& sub = bridge.subcl_side();
  const SpectralPresheaf& p = sub.algebra().presheaf();
  const Elem lhs = evaluate(lat, arrow, f, vars, us);
  const ClopenSubobject rhs = evaluate(sub, arrow, f, vars, lifted);
  const ClopenSubobject bound = p.daseinise(lhs);
  return {p.leq(bound, rhs), p.format(bound), p.format(rhs)};
}

TransferCase check_transfer_zfc(const Formula& f, const LatticeUniverse& universe,
                                const std::vector<LSetId>& us, Arrow arrow) {
  require_delta0(f);
  const Oml& l = universe.algebra().lattice();
  const Elem bound = commutator(universe, us);
  const Elem value = evaluate(universe, arrow, f, argument_order(f), us);
  return {l.leq(bound, value), l.name(bound), l.name(value)};
}

TransferCase check_transfer_zfc_delta(const Formula& f, UniverseBridge& bridge,
                                      const std::vector<LSetId>& us) {
  require_negation_free(f);
  const SpectralPresheaf& p = bridge.subcl_side().algebra().presheaf();
  const ClopenSubobject bound = p.daseinise(commutator(bridge.lattice_side(), us));
  const auto lifted = bridge.lift(us);
  const ClopenSubobject value =
      evaluate(bridge.subcl_side(), Arrow::kSasaki, f, argument_order(f), lifted);
  return {p.leq(bound, value), p.format(bound), p.format(value)};
}

std::vector<ProvableFormula> parse_provable_list(std::string_view text) {
  std::vector<ProvableFormula> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto bar1 = t.find('|');
    const auto bar2 = bar1 == std::string::npos ? bar1 : t.find('|', bar1 + 1);
    if (bar2 == std::string::npos) {
      throw Error(ErrorCode::kSyntaxError,
                  "provable list line " + std::to_string(number) + ": expected two '|'");
    }
    ProvableFormula p;
    p.id = trim(std::string_view(t).substr(0, bar1));
    p.formula = parse_formula(std::string_view(t).substr(bar1 + 1, bar2 - bar1 - 1));
    p.justification = trim(std::string_view(t).substr(bar2 + 1));
    if (!is_delta0(*p.formula)) {
      throw Error(ErrorCode::kFormulaNotDelta0, "provable list entry '" + p.id + "'");
    }
    out.push_back(std::move(p));
  }
  return out;
}

const std::vector<ProvableFormula>& provable_delta0() {
  static const std::vector<ProvableFormula> list =
      parse_provable_list(detail::kProvableDelta0Data);
  return list;
}

}  // namespace qworlds
