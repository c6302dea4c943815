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

#include "qworlds/battery.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "qworlds/error.hpp"
#include "qworlds/evaluator.hpp"
#include "qworlds/fixtures.hpp"
#include "qworlds/hf.hpp"
#include "qworlds/lset.hpp"
#include "qworlds/models.hpp"
#include "qworlds/qreals.hpp"

namespace qworlds {
namespace {

using Sub = ClopenSubobject;

std::uint64_t seed_for(std::uint64_t seed, std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : label) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
  return seed * 0x9e3779b97f4a7c15ULL ^ h;
}

// Outcome of checking one statement over many cases; remembers the first
// counterexample.
struct Check {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string witness;

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) witness = describe();
  }
  bool ok() const { return failures == 0; }
};

struct Pairs {
  std::vector<std::pair<std::size_t, std::size_t>> list;
  std::string scope;
};

class Runner {
 public:
  Runner(const Oml& lattice, std::string_view fixture, const BatteryConfig& config)
      : l_(lattice),
        fixture_(fixture),
        config_(config),
        p_(SpectralPresheaf::build(lattice, config.contexts)) {
    Rng rng(seed_for(config.seed, "population"));
    pop_ = p_.population(rng, config.samples, config.subcl);
    exhaustive_ = p_.enumerable(config.subcl);
    pop_scope_ = exhaustive_ ? "all " + std::to_string(pop_.size()) + " subobjects"
                             : std::to_string(pop_.size()) + " sampled subobjects";
  }

  void run(std::string_view suite) {
    if (suite == "adjunction") return adjunction();
    if (suite == "star") return star();
    if (suite == "mirror") return mirror();
    if (suite == "commutativity") return commutativity();
    if (suite == "paraconsistency") return paraconsistency();
    if (suite == "transfer") return transfer();
    if (suite == "hat") return hat();
    if (suite == "reals") return reals();
    if (suite == "topos") return topos();
    throw Error(ErrorCode::kInvalidArgument, "unknown suite '" + std::string(suite) + "'");
  }

  std::vector<BatteryRecord> records;

 private:
  void add(std::string_view theorem, std::string_view j, std::string scope, const Check& c) {
    records.push_back({suite_, std::string(theorem), fixture_, std::string(j), std::move(scope),
                       c.ok() ? "pass" : "fail", c.witness});
  }
  void add_raw(std::string_view theorem, std::string_view j, std::string scope, std::string result,
               std::string witness) {
    records.push_back({suite_, std::string(theorem), fixture_, std::string(j), std::move(scope),
                       std::move(result), std::move(witness)});
  }

  std::string el(Elem a) const { return l_.name(a); }
  std::string sub(const Sub& s) const { return p_.format(s); }
  std::string two(const Sub& s, const Sub& t) const { return "S=" + sub(s) + " T=" + sub(t); }

  std::string elements_scope() const {
    return "all " + std::to_string(l_.size()) + " elements";
  }
  std::string element_pairs_scope() const {
    return "all " + std::to_string(l_.size() * l_.size()) + " element pairs";
  }

  Pairs pop_pairs(Rng& rng) const {
    Pairs out;
    const std::size_t n = pop_.size();
    if (n * n <= config_.max_exhaustive_pairs) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) out.list.emplace_back(i, k);
      out.scope = "all " + std::to_string(n * n) + " subobject pairs";
    } else {
      for (std::size_t i = 0; i < config_.samples; ++i) {
        const std::size_t a = rng.below(n);
        const std::size_t b = rng.below(n);
        out.list.emplace_back(a, b);
      }
      out.scope = std::to_string(config_.samples) + " sampled subobject pairs";
    }
    return out;
  }

  template <typename F>
  Check each_elem(F f) const {
    Check c;
    for (Elem a : l_.elements()) f(c, a);
    return c;
  }
  template <typename F>
  Check each_elem_pair(F f) const {
    Check c;
    for (Elem a : l_.elements())
      for (Elem b : l_.elements()) f(c, a, b);
    return c;
  }
  template <typename F>
  Check each_sub(F f) const {
    Check c;
    for (const Sub& s : pop_) f(c, s);
    return c;
  }
  template <typename F>
  Check each_sub_pair(const Pairs& pairs, F f) const {
    Check c;
    for (auto [i, k] : pairs.list) f(c, pop_[i], pop_[k]);
    return c;
  }

  void adjunction();
  void star();
  void mirror();
  void commutativity();
  void paraconsistency();
  void transfer();
  void hat();
  void reals();
  void topos();

  Oml l_;
  std::string fixture_;
  BatteryConfig config_;
  SpectralPresheaf p_;
  std::vector<Sub> pop_;
  bool exhaustive_ = false;
  std::string pop_scope_;
  std::string suite_;

 public:
  void set_suite(std::string_view s) { suite_ = s; }
};

void Runner::adjunction() {
  Rng rng(seed_for(config_.seed, "adjunction"));
  const Pairs pairs = pop_pairs(rng);

  add("eps_after_dasein_is_identity", "-", elements_scope(), each_elem([&](Check& c, Elem a) {
        const Elem back = p_.to_element(p_.daseinise(a));
        c.expect(back == a, [&] { return "a=" + el(a) + " eps(dasein(a))=" + el(back); });
      }));
  add("dasein_after_eps_below_identity", "-", pop_scope_, each_sub([&](Check& c, const Sub& s) {
        const Sub d = p_.daseinise(p_.to_element(s));
        c.expect(p_.leq(d, s), [&] { return "S=" + sub(s) + " dasein(eps(S))=" + sub(d); });
      }));
  add("adjunction_law", "-",
      "all " + std::to_string(l_.size() * pop_.size()) + " element-subobject pairs",
      [&] {
        Check c;
        for (Elem a : l_.elements()) {
          const Sub d = p_.daseinise(a);
          for (const Sub& s : pop_) {
            c.expect(p_.leq(d, s) == l_.leq(a, p_.to_element(s)),
                     [&] { return "a=" + el(a) + " S=" + sub(s); });
          }
        }
        return c;
      }());
  add("dasein_preserves_joins", "-", element_pairs_scope(),
      each_elem_pair([&](Check& c, Elem a, Elem b) {
        c.expect(p_.daseinise(l_.join(a, b)) == p_.join(p_.daseinise(a), p_.daseinise(b)),
                 [&] { return "a=" + el(a) + " b=" + el(b); });
      }));
  add("dasein_of_meet_below_meet", "-", element_pairs_scope(),
      each_elem_pair([&](Check& c, Elem a, Elem b) {
        c.expect(p_.leq(p_.daseinise(l_.meet(a, b)), p_.meet(p_.daseinise(a), p_.daseinise(b))),
                 [&] { return "a=" + el(a) + " b=" + el(b); });
      }));
  add("dasein_injective_and_order_embedding", "-", element_pairs_scope(),
      each_elem_pair([&](Check& c, Elem a, Elem b) {
        const Sub da = p_.daseinise(a);
        const Sub db = p_.daseinise(b);
        c.expect((da == db) == (a == b) && p_.leq(da, db) == l_.leq(a, b),
                 [&] { return "a=" + el(a) + " b=" + el(b); });
      }));
  add("eps_preserves_meets", "-", pairs.scope,
      each_sub_pair(pairs, [&](Check& c, const Sub& s, const Sub& t) {
        c.expect(p_.to_element(p_.meet(s, t)) == l_.meet(p_.to_element(s), p_.to_element(t)),
                 [&] { return two(s, t); });
      }));
  add("eps_of_join_above_join", "-", pairs.scope,
      each_sub_pair(pairs, [&](Check& c, const Sub& s, const Sub& t) {
        c.expect(l_.leq(l_.join(p_.to_element(s), p_.to_element(t)), p_.to_element(p_.join(s, t))),
                 [&] { return two(s, t); });
      }));
  add("bounds_preserved", "-", "top and bottom", [&] {
    Check c;
    c.expect(p_.daseinise(l_.bottom()) == p_.bottom(), [] { return std::string("dasein(0)"); });
    c.expect(p_.daseinise(l_.top()) == p_.top(), [] { return std::string("dasein(1)"); });
    c.expect(p_.to_element(p_.bottom()) == l_.bottom(), [] { return std::string("eps(bottom)"); });
    c.expect(p_.to_element(p_.top()) == l_.top(), [] { return std::string("eps(top)"); });
    return c;
  }());
  add("eps_is_join_of_daseinised_below", "-", pop_scope_, each_sub([&](Check& c, const Sub& s) {
        std::vector<Elem> below;
        for (Elem a : l_.elements())
          if (p_.leq(p_.daseinise(a), s)) below.push_back(a);
        c.expect(l_.join_all(below) == p_.to_element(s), [&] { return "S=" + sub(s); });
      }));

  const EQuotient q = p_.quotient(config_.subcl);
  Check classes;
  classes.expect(q.class_count() == l_.size(), [&] {
    return std::to_string(q.class_count()) + " classes for " + std::to_string(l_.size()) +
           " elements";
  });
  for (Elem a : l_.elements()) {
    if (a.index >= q.class_count()) break;
    classes.expect(q.canonical[a.index] == p_.daseinise(a),
                   [&] { return "canonical member of class " + el(a); });
    if (!q.materialized) continue;
    for (const Sub& m : q.members[a.index]) {
      classes.expect(p_.to_element(m) == a && p_.leq(q.canonical[a.index], m),
                     [&] { return "class " + el(a) + " member " + sub(m); });
    }
  }
  if (q.materialized) {
    std::size_t total = 0;
    for (const auto& members : q.members) total += members.size();
    classes.expect(total == pop_.size(), [&] { return "classes do not partition subobjects"; });
  }
  add("quotient_classes_match_elements", "-",
      q.materialized ? "all classes materialized" : "canonical members", classes);
}

void Runner::star() {
  Rng rng(seed_for(config_.seed, "star"));
  const Pairs pairs = pop_pairs(rng);

  add("join_with_star_is_top", "-", pop_scope_, each_sub([&](Check& c, const Sub& s) {
        c.expect(p_.join(s, p_.star(s)) == p_.top(), [&] { return "S=" + sub(s); });
      }));
  add("double_star_is_dasein_eps", "-", pop_scope_, each_sub([&](Check& c, const Sub& s) {
        c.expect(p_.double_star(s) == p_.daseinise(p_.to_element(s)), [&] { return "S=" + sub(s); });
      }));
  add("double_star_below", "-", pop_scope_, each_sub([&](Check& c, const Sub& s) {
        c.expect(p_.leq(p_.double_star(s), s), [&] { return "S=" + sub(s); });
      }));
  add("triple_star", "-", pop_scope_, each_sub([&](Check& c, const Sub& s) {
        c.expect(p_.star(p_.double_star(s)) == p_.star(s), [&] { return "S=" + sub(s); });
      }));
  add("meet_with_star_above_bottom", "-", pop_scope_, each_sub([&](Check& c, const Sub& s) {
        c.expect(p_.leq(p_.bottom(), p_.meet(s, p_.star(s))), [&] { return "S=" + sub(s); });
      }));
  add("star_of_meet_is_join_of_stars", "-", pairs.scope,
      each_sub_pair(pairs, [&](Check& c, const Sub& s, const Sub& t) {
        c.expect(p_.join(p_.star(s), p_.star(t)) == p_.star(p_.meet(s, t)),
                 [&] { return two(s, t); });
      }));
  add("star_of_join_below_meet_of_stars", "-", pairs.scope,
      each_sub_pair(pairs, [&](Check& c, const Sub& s, const Sub& t) {
        c.expect(p_.leq(p_.star(p_.join(s, t)), p_.meet(p_.star(s), p_.star(t))),
                 [&] { return two(s, t); });
      }));
  add("eps_with_eps_of_star_joins_to_top", "-", pop_scope_, each_sub([&](Check& c, const Sub& s) {
        c.expect(l_.join(p_.to_element(s), p_.to_element(p_.star(s))) == l_.top(),
                 [&] { return "S=" + sub(s); });
      }));
  add("eps_with_eps_of_star_meets_to_bottom", "-", pop_scope_,
      each_sub([&](Check& c, const Sub& s) {
        c.expect(l_.meet(p_.to_element(s), p_.to_element(p_.star(s))) == l_.bottom(),
                 [&] { return "S=" + sub(s); });
      }));
  add("star_antitone", "-", pairs.scope,
      each_sub_pair(pairs, [&](Check& c, const Sub& s, const Sub& t) {
        c.expect(!p_.leq(s, t) || p_.leq(p_.star(t), p_.star(s)), [&] { return two(s, t); });
      }));
  add("eps_of_star_is_ortho", "-", pop_scope_, each_sub([&](Check& c, const Sub& s) {
        c.expect(p_.to_element(p_.star(s)) == l_.ortho(p_.to_element(s)),
                 [&] { return "S=" + sub(s); });
      }));
  add("star_of_dasein_is_dasein_of_ortho", "-", elements_scope(),
      each_elem([&](Check& c, Elem a) {
        c.expect(p_.star(p_.daseinise(a)) == p_.daseinise(l_.ortho(a)),
                 [&] { return "a=" + el(a); });
      }));
  add("dasein_image_is_regular", "-", elements_scope(), each_elem([&](Check& c, Elem a) {
        c.expect(p_.is_regular(p_.daseinise(a)), [&] { return "a=" + el(a); });
      }));
  add("double_star_least_in_class", "-", pairs.scope,
      each_sub_pair(pairs, [&](Check& c, const Sub& s, const Sub& t) {
        const bool same_class = p_.to_element(s) == p_.to_element(t);
        c.expect(!same_class || p_.leq(p_.double_star(s), t), [&] { return two(s, t); });
      }));
}

void Runner::mirror() {
  Rng rng(seed_for(config_.seed, "mirror"));
  const Pairs pairs = pop_pairs(rng);
  for (Arrow arrow : kAllArrows) {
    const std::string j(arrow_name(arrow));
    const CriteriaReport report = implication_criteria_check(l_, arrow);
    Check criteria;
    criteria.expect(report.pass(), [&] {
      return report.witnesses.empty() ? std::string("criteria failed") : report.witnesses.front();
    });
    add("lattice_implication_criteria", j, element_pairs_scope(), criteria);
    add("dasein_mirrors_implication", j, element_pairs_scope(),
        each_elem_pair([&](Check& c, Elem a, Elem b) {
          c.expect(p_.daseinise(implies(l_, arrow, a, b)) ==
                       p_.implies(arrow, p_.daseinise(a), p_.daseinise(b)),
                   [&] { return "a=" + el(a) + " b=" + el(b); });
        }));
    add("eps_mirrors_implication", j, pairs.scope,
        each_sub_pair(pairs, [&](Check& c, const Sub& s, const Sub& t) {
          c.expect(p_.to_element(p_.implies(arrow, s, t)) ==
                       implies(l_, arrow, p_.to_element(s), p_.to_element(t)),
                   [&] { return two(s, t); });
        }));
    add("implication_via_lattice", j, pairs.scope,
        each_sub_pair(pairs, [&](Check& c, const Sub& s, const Sub& t) {
          c.expect(p_.implies(arrow, s, t) ==
                       p_.daseinise(implies(l_, arrow, p_.to_element(s), p_.to_element(t))),
                   [&] { return two(s, t); });
        }));
    add("top_implies_is_double_star", j, pop_scope_, each_sub([&](Check& c, const Sub& s) {
          c.expect(p_.implies(arrow, p_.top(), s) == p_.double_star(s),
                   [&] { return "S=" + sub(s); });
        }));
    add("bottom_implies_is_top", j, pop_scope_, each_sub([&](Check& c, const Sub& s) {
          c.expect(p_.implies(arrow, p_.bottom(), s) == p_.top(), [&] { return "S=" + sub(s); });
        }));
    add("implies_top_is_top", j, pop_scope_, each_sub([&](Check& c, const Sub& s) {
          c.expect(p_.implies(arrow, s, p_.top()) == p_.top(), [&] { return "S=" + sub(s); });
        }));
    add("implies_bottom_is_star", j, pop_scope_, each_sub([&](Check& c, const Sub& s) {
          c.expect(p_.implies(arrow, s, p_.bottom()) == p_.star(s), [&] { return "S=" + sub(s); });
        }));
    add("implies_is_top_iff_double_stars_ordered", j, pairs.scope,
        each_sub_pair(pairs, [&](Check& c, const Sub& s, const Sub& t) {
          c.expect((p_.implies(arrow, s, t) == p_.top()) ==
                       p_.leq(p_.double_star(s), p_.double_star(t)),
                   [&] { return two(s, t); });
        }));
    add("iff_is_top_iff_double_stars_equal", j, pairs.scope,
        each_sub_pair(pairs, [&](Check& c, const Sub& s, const Sub& t) {
          c.expect((p_.iff(arrow, s, t) == p_.top()) == (p_.double_star(s) == p_.double_star(t)),
                   [&] { return two(s, t); });
        }));
  }
}

void Runner::commutativity() {
  Rng rng(seed_for(config_.seed, "commutativity"));
  const Pairs pairs = pop_pairs(rng);
  add("commutes_symmetric", "-", element_pairs_scope(),
      each_elem_pair([&](Check& c, Elem a, Elem b) {
        c.expect(commutes(l_, a, b) == commutes(l_, b, a),
                 [&] { return "a=" + el(a) + " b=" + el(b); });
      }));
  add("commutes_iff_dasein_commutes", "-", element_pairs_scope(),
      each_elem_pair([&](Check& c, Elem a, Elem b) {
        c.expect(commutes(l_, a, b) == p_.sub_commutes(p_.daseinise(a), p_.daseinise(b)),
                 [&] { return "a=" + el(a) + " b=" + el(b); });
      }));
  add("double_star_identity_iff_commutes", "-", pairs.scope,
      each_sub_pair(pairs, [&](Check& c, const Sub& s, const Sub& t) {
        c.expect(p_.cp_identity_holds(s, t) == p_.sub_commutes(s, t), [&] { return two(s, t); });
      }));
  add("amalgam_in_commutant", "-", element_pairs_scope(),
      each_elem_pair([&](Check& c, Elem a, Elem b) {
        const ElementSubset pair(l_, {a, b});
        const Elem m = amalgam(l_, pair);
        c.expect(commutant(l_, pair).contains(m),
                 [&] { return "a=" + el(a) + " b=" + el(b) + " amalgam=" + el(m); });
      }));
}

void Runner::paraconsistency() {
  const auto is_bound = [&](const SpectralPresheaf& p, const Sub& s) {
    return s == p.bottom() || s == p.top();
  };
  if (is_irreducible(l_)) {
    add("proper_paraconsistency", "-", pop_scope_, each_sub([&](Check& c, const Sub& s) {
          const bool disjoint = p_.meet(s, p_.star(s)) == p_.bottom();
          c.expect(disjoint == is_bound(p_, s), [&] { return "S=" + sub(s); });
        }));
    add("dasein_paraconsistency", "-", elements_scope(), each_elem([&](Check& c, Elem a) {
          const Sub d = p_.daseinise(a);
          const bool disjoint = p_.meet(d, p_.star(d)) == p_.bottom();
          c.expect(disjoint == (a == l_.bottom() || a == l_.top()), [&] { return "a=" + el(a); });
        }));
  } else {
    add_raw("proper_paraconsistency", "-", pop_scope_, "skip", "reducible lattice");
  }

  // With the trivial context present every non-empty subobject and its star
  // overlap there, so the characterization holds on every lattice. Search
  // for a counterexample on the full poset and on the poset without it.
  const auto search = [&](const SpectralPresheaf& p, std::string_view label) {
    Rng rng(seed_for(config_.seed, label));
    const std::vector<Sub> population = p.population(rng, config_.samples, config_.subcl);
    std::optional<Sub> found;
    for (const Sub& s : population) {
      if (!is_bound(p, s) && p.meet(s, p.star(s)) == p.bottom()) {
        found = s;
        break;
      }
    }
    std::string scope = (p.enumerable(config_.subcl) ? "all " : "") +
                        std::to_string(population.size()) + " subobjects";
    if (!p.poset().includes_trivial()) scope += " without the trivial context";
    return std::make_pair(scope, found ? "S=" + p.format(*found) : std::string());
  };
  const auto [full_scope, full_found] = search(p_, "paraconsistency");
  if (!is_irreducible(l_)) {
    add_raw("disjoint_from_star_counterexample", "-", full_scope, "info",
            full_found.empty() ? "none: the trivial context forces overlap" : full_found);
  }
  ContextOptions options = config_.contexts;
  options.include_trivial = false;
  const SpectralPresheaf bare = SpectralPresheaf::build(l_, options);
  if (bare.context_count() == 0) return;
  const auto [bare_scope, bare_found] = search(bare, "paraconsistency_bare");
  if (is_irreducible(l_)) {
    add_raw("disjoint_from_star_only_bounds_without_trivial_context", "-", bare_scope,
            bare_found.empty() ? "pass" : "fail", bare_found);
  } else {
    add_raw("disjoint_from_star_counterexample_without_trivial_context", "-", bare_scope, "info",
            bare_found.empty() ? "none found" : bare_found);
  }
}

void Runner::transfer() {
  Rng rng(seed_for(config_.seed, "transfer"));
  LatticeUniverse lattice_side{LatticeAlgebra(l_)};
  SubclUniverse subcl_side{SubclAlgebra(p_)};
  UniverseBridge bridge(lattice_side, subcl_side);
  const std::vector<std::string> vars = {"u", "v", "w"};
  RandomSetOptions set_options;
  set_options.max_rank = config_.max_rank;

  const auto random_args = [&](const Formula& f) {
    std::vector<LSetId> args;
    for (std::size_t i = 0; i < argument_order(f).size(); ++i)
      args.push_back(random_lset(lattice_side, rng, set_options));
    return args;
  };
  const auto describe = [&](const Formula& f, const std::vector<LSetId>& args,
                            const TransferCase& t) {
    std::string out = "phi=" + to_string(f);
    const auto names = argument_order(f);
    for (std::size_t i = 0; i < args.size(); ++i)
      out += " " + names[i] + "=" + lattice_side.describe(args[i]);
    return out + " bound=" + t.bound + " value=" + t.value;
  };

  for (Arrow arrow : kAllArrows) {
    const std::string j(arrow_name(arrow));
    const std::size_t trials =
        arrow == Arrow::kSasaki ? config_.trials : std::max<std::size_t>(1, config_.trials / 5);
    Check c;
    RandomFormulaOptions options;
    options.negation_free = true;
    for (std::size_t i = 0; i < trials; ++i) {
      const FormulaPtr f = random_delta0(rng, vars, options);
      const std::vector<LSetId> args = random_args(*f);
      const TransferCase t = check_transfer_negfree(*f, bridge, args, arrow);
      c.expect(t.holds, [&] { return describe(*f, args, t); });
    }
    const std::string scope = std::to_string(trials) + " random negation-free cases";
    if (arrow == Arrow::kSasaki) {
      add("negation_free_transfer", j, scope, c);
    } else {
      add_raw("negation_free_transfer_other_arrow", j, scope, "info",
              c.ok() ? "no counterexample"
                     : std::to_string(c.failures) +
                           (c.failures == 1 ? " counterexample: " : " counterexamples, first: ") +
                           c.witness);
    }
  }

  const auto& provable = provable_delta0();
  constexpr std::size_t kArgsPerFormula = 40;
  for (Arrow arrow : kAllArrows) {
    Check c;
    for (const auto& entry : provable) {
      for (std::size_t i = 0; i < kArgsPerFormula; ++i) {
        const std::vector<LSetId> args = random_args(*entry.formula);
        const TransferCase t = check_transfer_zfc(*entry.formula, lattice_side, args, arrow);
        c.expect(t.holds, [&] { return entry.id + ": " + describe(*entry.formula, args, t); });
      }
    }
    add("commutator_bounds_provable", arrow_name(arrow),
        std::to_string(provable.size()) + " provable formulas x " +
            std::to_string(kArgsPerFormula) + " argument tuples",
        c);
  }

  Check lifted;
  std::size_t formulas = 0;
  for (const auto& entry : provable) {
    if (!is_negation_free(*entry.formula)) continue;
    ++formulas;
    for (std::size_t i = 0; i < kArgsPerFormula; ++i) {
      const std::vector<LSetId> args = random_args(*entry.formula);
      const TransferCase t = check_transfer_zfc_delta(*entry.formula, bridge, args);
      lifted.expect(t.holds, [&] { return entry.id + ": " + describe(*entry.formula, args, t); });
    }
  }
  add("dasein_commutator_bounds_provable", "S",
      std::to_string(formulas) + " negation-free provable formulas x " +
          std::to_string(kArgsPerFormula) + " argument tuples",
      lifted);
}

template <typename A>
void hat_checks(const Universe<A>& universe, const std::vector<HfSet>& sets,
                const std::vector<LSetId>& hats, Arrow arrow, Check& member_true,
                Check& member_false, Check& equal_true, Check& equal_false) {
  Evaluator<A> ev(universe, arrow);
  const A& alg = universe.algebra();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t k = 0; k < sets.size(); ++k) {
      const auto where = [&] { return to_string(sets[i]) + ", " + to_string(sets[k]); };
      const auto in = ev.member(hats[i], hats[k]);
      if (sets[k].contains(sets[i])) {
        member_true.expect(in == alg.top(), where);
      } else {
        member_false.expect(in == alg.bottom(), where);
      }
      const auto eq = ev.eq(hats[i], hats[k]);
      if (i == k) {
        equal_true.expect(eq == alg.top(), where);
      } else {
        equal_false.expect(eq == alg.bottom(), where);
      }
    }
  }
}

void Runner::hat() {
  constexpr unsigned kMaxRank = 3;
  const std::vector<HfSet> sets = hf_sets_up_to_rank(kMaxRank);
  LatticeUniverse lattice_side{LatticeAlgebra(l_)};
  SubclUniverse subcl_side{SubclAlgebra(p_)};
  std::vector<LSetId> lattice_hats;
  std::vector<LSetId> subcl_hats;
  for (const HfSet& x : sets) {
    lattice_hats.push_back(lattice_side.hat(x));
    subcl_hats.push_back(subcl_side.hat(x));
  }
  const std::string scope = "all " + std::to_string(sets.size() * sets.size()) +
                            " pairs of sets of rank <= " + std::to_string(kMaxRank);
  for (Arrow arrow : kAllArrows) {
    const std::string j(arrow_name(arrow));
    for (int side = 0; side < 2; ++side) {
      Check member_true;
      Check member_false;
      Check equal_true;
      Check equal_false;
      if (side == 0) {
        hat_checks(lattice_side, sets, lattice_hats, arrow, member_true, member_false,
                   equal_true, equal_false);
      } else {
        hat_checks(subcl_side, sets, subcl_hats, arrow, member_true, member_false,
                   equal_true, equal_false);
      }
      const std::string suffix = side == 0 ? "_lattice" : "_subcl";
      add("hat_member_is_top" + suffix, j, scope, member_true);
      add("hat_nonmember_is_bottom" + suffix, j, scope, member_false);
      add("hat_equal_is_top" + suffix, j, scope, equal_true);
      add("hat_unequal_is_bottom" + suffix, j, scope, equal_false);
    }
  }
}

void Runner::reals() {
  Rng rng(seed_for(config_.seed, "reals"));
  const std::vector<Rational> two_cuts = {Rational(0), Rational(1)};
  const std::vector<Elem> elems = l_.elements();

  // Every lattice spectral family with at most two jumps at the cuts 0 and 1.
  std::vector<LatticeReal> families;
  for (Elem a : elems)
    for (Elem b : elems)
      for (Elem c : elems) {
        LatticeReal x(two_cuts, {a, b, c});
        if (!check_real(l_, x).pass()) continue;
        if (std::find(families.begin(), families.end(), x) == families.end())
          families.push_back(x);
      }
  const std::string family_scope =
      "all " + std::to_string(families.size()) + " spectral families with <= 2 jumps";

  add("extract_after_embed_is_identity", "-", family_scope, [&] {
    Check c;
    for (const LatticeReal& x : families) {
      const LatticeReal back = extract_real(p_, embed_real(p_, x));
      c.expect(back == x, [&] { return format_real(l_, x); });
    }
    return c;
  }());
  add("embedded_family_properties", "-", family_scope, [&] {
    Check c;
    for (const LatticeReal& x : families) {
      const SubclReal h = embed_real(p_, x);
      const auto& ps = h.plateaus();
      std::vector<Sub> stars;
      for (const Sub& s : ps) stars.push_back(p_.star(s));
      bool exact_left = true;
      for (std::size_t i = 0; i < ps.size(); ++i) {
        std::vector<Sub> upto(ps.begin(), ps.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        exact_left = exact_left && p_.join_all(upto) == ps[i];
      }
      c.expect(p_.join_all(ps) == p_.top() && p_.join_all(stars) == p_.top() && exact_left &&
                   is_regular(p_, h) && check_real(p_, h).pass() && regularise(p_, h) == h,
               [&] { return format_real(l_, x); });
    }
    return c;
  }());
  add("embed_injective", "-", family_scope, [&] {
    Check c;
    for (std::size_t i = 0; i < families.size(); ++i)
      for (std::size_t k = i + 1; k < families.size(); ++k)
        c.expect(!(embed_real(p_, families[i]) == embed_real(p_, families[k])), [&] {
          return format_real(l_, families[i]) + " and " + format_real(l_, families[k]);
        });
    return c;
  }());

  // Regular reals with at most two jumps: values are daseinised elements.
  std::vector<SubclReal> regular;
  std::vector<Sub> images;
  for (Elem a : elems) images.push_back(p_.daseinise(a));
  for (const Sub& a : images)
    for (const Sub& b : images)
      for (const Sub& c : images) {
        SubclReal u(two_cuts, {a, b, c});
        if (!check_real(p_, u).pass()) continue;
        if (std::find(regular.begin(), regular.end(), u) == regular.end()) regular.push_back(u);
      }
  const std::string regular_scope =
      "all " + std::to_string(regular.size()) + " regular reals with <= 2 jumps";
  add("embed_after_extract_is_identity", "-", regular_scope, [&] {
    Check c;
    for (const SubclReal& u : regular) {
      c.expect(embed_real(p_, extract_real(p_, u)) == u, [&] { return format_real(p_, u); });
    }
    return c;
  }());
  add("extracted_family_is_spectral", "-", regular_scope, [&] {
    Check c;
    for (const SubclReal& u : regular) {
      const LatticeReal f = extract_real(p_, u);
      const auto& ps = f.plateaus();
      bool exact_left = true;
      for (std::size_t i = 0; i < ps.size(); ++i) {
        std::vector<Elem> upto(ps.begin(), ps.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        exact_left = exact_left && l_.join_all(upto) == ps[i];
      }
      c.expect(l_.join_all(ps) == l_.top() && l_.meet_all(ps) == l_.bottom() && exact_left &&
                   check_real(l_, f).pass(),
               [&] { return format_real(p_, u); });
    }
    return c;
  }());

  // Reals that need not be regular, for the equality criterion.
  std::vector<SubclReal> general = regular;
  std::vector<Sub> lows;
  for (const Sub& s : pop_)
    if (p_.to_element(s) == l_.bottom()) lows.push_back(s);
  for (std::size_t i = 0; i < config_.samples && !lows.empty(); ++i) {
    const Sub a = rng.pick(lows);
    const Sub b = rng.pick(pop_);
    const Sub c = rng.coin() ? p_.top() : p_.join(b, rng.pick(pop_));
    SubclReal u(two_cuts, {a, b, c});
    if (check_real(p_, u).pass()) general.push_back(u);
  }
  const std::string general_scope = std::to_string(general.size()) + " reals";
  add("regularise_idempotent", "-", general_scope, [&] {
    Check c;
    for (const SubclReal& u : general) {
      const SubclReal r = regularise(p_, u);
      c.expect(regularise(p_, r) == r && is_regular(p_, r), [&] { return format_real(p_, u); });
    }
    return c;
  }());
  for (Arrow arrow : kAllArrows) {
    Check c;
    std::size_t pairs = 0;
    const std::size_t n = general.size();
    const bool all = n * n <= config_.max_exhaustive_pairs;
    const std::size_t count = all ? n * n : config_.samples;
    for (std::size_t idx = 0; idx < count; ++idx) {
      const SubclReal& u = all ? general[idx / n] : general[rng.below(n)];
      const SubclReal& v = all ? general[idx % n] : general[rng.below(n)];
      ++pairs;
      bool same = true;
      for (const Rational& r : representative_points(u, v))
        same = same && p_.double_star(u.value(r)) == p_.double_star(v.value(r));
      c.expect((real_truth_eq(p_, u, v, arrow) == p_.top()) == same,
               [&] { return format_real(p_, u) + " vs " + format_real(p_, v); });
    }
    add("real_equality_iff_double_stars_agree", arrow_name(arrow),
        (all ? "all " : "") + std::to_string(pairs) + " real pairs", c);
  }

  add("regular_join_lemma", "-", "200 sampled regular families", [&] {
    Check c;
    for (std::size_t i = 0; i < 200; ++i) {
      const std::size_t size = 1 + rng.below(4);
      std::vector<Elem> as;
      std::vector<Sub> ss;
      for (std::size_t k = 0; k < size; ++k) {
        const Elem a = rng.pick(elems);
        as.push_back(a);
        ss.push_back(p_.daseinise(a));
      }
      c.expect(p_.to_element(p_.join_all(ss)) == l_.join_all(as), [&] {
        std::string out = "family";
        for (Elem a : as) out += " " + el(a);
        return out;
      });
    }
    return c;
  }());
}

void Runner::topos() {
  Rng rng(seed_for(config_.seed, "topos"));
  const ContextPoset& poset = p_.poset();
  add("truth_values_are_lower_sets", "-",
      "all " + std::to_string(l_.size()) + " elements x " + pop_scope_, [&] {
        Check c;
        for (Elem a : l_.elements()) {
          const Sub w = p_.daseinise(a);
          for (const Sub& s : pop_) {
            std::optional<TruthValue> v;
            try {
              v = p_.truth_value(s, w);
            } catch (const Error&) {
            }
            bool lower = v.has_value();
            if (lower) {
              for (std::size_t hi = 0; hi < poset.size(); ++hi)
                for (std::size_t lo = 0; lo < poset.size(); ++lo)
                  if (v->contains(hi) && poset.leq(lo, hi)) lower = lower && v->contains(lo);
            }
            const bool everywhere =
                lower && std::all_of(v->contexts.begin(), v->contexts.end(), [](bool b) { return b; });
            c.expect(lower && everywhere == p_.leq(w, s),
                     [&] { return "p=" + el(a) + " S=" + sub(s); });
          }
        }
        return c;
      }());

  Check laws;
  for (std::size_t a = 0; a < poset.size(); ++a)
    for (std::size_t b = 0; b < poset.size(); ++b) {
      if (!poset.leq(a, b)) continue;
      const auto ab = poset.restriction(a, b);
      laws.expect(a != b || [&] {
        for (std::size_t i = 0; i < ab.size(); ++i)
          if (ab[i] != i) return false;
        return true;
      }(), [&] { return "identity restriction at context " + std::to_string(a); });
      std::vector<bool> hit(poset[a].atom_count(), false);
      for (std::size_t t : ab) hit[t] = true;
      laws.expect(std::all_of(hit.begin(), hit.end(), [](bool x) { return x; }), [&] {
        return "restriction " + std::to_string(b) + " -> " + std::to_string(a) + " not onto";
      });
      for (std::size_t c = 0; c < poset.size(); ++c) {
        if (!poset.leq(b, c)) continue;
        const auto bc = poset.restriction(b, c);
        const auto ac = poset.restriction(a, c);
        for (std::size_t i = 0; i < ac.size(); ++i) {
          laws.expect(ac[i] == ab[bc[i]], [&] {
            return "contexts " + std::to_string(a) + " <= " + std::to_string(b) + " <= " +
                   std::to_string(c);
          });
        }
      }
    }
  add("restrictions_form_presheaf", "-", "all comparable context chains", laws);

  const std::vector<GlobalSection> sections = p_.global_sections();
  Check compatible;
  for (const GlobalSection& g : sections)
    for (std::size_t hi = 0; hi < poset.size(); ++hi)
      for (std::size_t lo : poset.lower_covers(hi)) {
        compatible.expect(poset.restriction(lo, hi)[g.atoms[hi]] == g.atoms[lo], [&] {
          return "section breaks at contexts " + std::to_string(lo) + " <= " + std::to_string(hi);
        });
      }
  add("global_sections_compatible", "-", std::to_string(sections.size()) + " sections", compatible);
  add_raw("global_section_count", "-", "exhaustive", "info", std::to_string(sections.size()));

  Check dist;
  const std::size_t n = pop_.size();
  for (std::size_t i = 0; i < config_.samples; ++i) {
    const Sub& s = pop_[rng.below(n)];
    const Sub& t = pop_[rng.below(n)];
    const Sub& u = pop_[rng.below(n)];
    dist.expect(p_.meet(s, p_.join(t, u)) == p_.join(p_.meet(s, t), p_.meet(s, u)),
                [&] { return two(s, t) + " U=" + sub(u); });
  }
  add("subobjects_distributive", "-", std::to_string(config_.samples) + " sampled triples", dist);
}

}  // namespace

const std::vector<std::string>& battery_suites() {
  static const std::vector<std::string> suites = {"adjunction",      "star",     "mirror",
                                                  "commutativity",   "paraconsistency",
                                                  "transfer",        "hat",      "reals",
                                                  "topos"};
  return suites;
}

std::vector<BatteryRecord> run_battery(const Oml& lattice, std::string_view fixture,
                                       std::string_view suite, const BatteryConfig& config) {
  const auto& suites = battery_suites();
  if (suite != "all" && std::find(suites.begin(), suites.end(), suite) == suites.end()) {
    throw Error(ErrorCode::kInvalidArgument, "unknown suite '" + std::string(suite) + "'");
  }
  Runner runner(lattice, fixture, config);
  for (const std::string& name : suites) {
    if (suite != "all" && suite != name) continue;
    runner.set_suite(name);
    runner.run(name);
  }
  return std::move(runner.records);
}

bool battery_passed(const std::vector<BatteryRecord>& records) {
  return std::none_of(records.begin(), records.end(),
                      [](const BatteryRecord& r) { return r.result == "fail"; });
}

std::string format_text(const std::vector<BatteryRecord>& records) {
  std::ostringstream out;
  for (const BatteryRecord& r : records) {
    out << r.result << "  " << r.suite << "/" << r.theorem_id << "  " << r.fixture
        << "  j=" << r.j << "  (" << r.scope << ")";
    if (!r.witness.empty()) out << "  " << r.witness;
    out << '\n';
  }
  return out.str();
}

std::string format_structured(const std::vector<BatteryRecord>& records) {
  std::string out;
  for (const BatteryRecord& r : records) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["theorem_id"] = r.theorem_id;
    j["fixture"] = r.fixture;
    j["j"] = r.j;
    j["scope"] = r.scope;
    j["result"] = r.result;
    j["witness"] = r.witness;
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace qworlds
