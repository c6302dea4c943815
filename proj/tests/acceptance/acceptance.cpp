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

// Prints one PASS or FAIL line per acceptance criterion and exits nonzero if
// any criterion fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qworlds/battery.hpp"
#include "qworlds/evaluator.hpp"
#include "qworlds/fixtures.hpp"
#include "qworlds/models.hpp"
#include "qworlds/presheaf.hpp"
#include "qworlds/qreals.hpp"

namespace qworlds {
namespace {

using Sub = ClopenSubobject;
constexpr Arrow kArrows[] = {Arrow::kSasaki, Arrow::kContrapositive, Arrow::kRelevance};

struct Outcome {
  bool pass = true;
  std::string evidence;
};

// Counts checks and keeps the first failure.
class Tally {
 public:
  void expect(bool ok, const std::function<std::string()>& describe) {
    ++checks_;
    if (!ok && first_failure_.empty()) first_failure_ = describe();
    failures_ += !ok;
  }
  std::size_t checks() const { return checks_; }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    if (ok()) return std::to_string(checks_) + " checks";
    return std::to_string(failures_) + " of " + std::to_string(checks_) +
           " checks failed, first: " + first_failure_;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_failure_;
};

BatteryConfig acceptance_config() {
  BatteryConfig config;
  config.seed = 1;
  config.trials = 1000;
  config.samples = 500;
  return config;
}

// Runs one battery suite on every standard fixture.
void battery_suite(const std::string& suite, Tally& tally, std::size_t* records = nullptr) {
  for (const std::string& name : standard_fixture_names()) {
    for (const BatteryRecord& r : run_battery(*builtin_fixture(name), name, suite, acceptance_config())) {
      if (records) ++*records;
      if (r.result == "info" || r.result == "skip") continue;
      tally.expect(r.result == "pass", [&] {
        return suite + "/" + r.theorem_id + " on " + name + " j=" + r.j + ": " + r.witness;
      });
    }
  }
}

std::vector<Sub> population(const SpectralPresheaf& p, std::uint64_t seed) {
  Rng rng(seed);
  return p.population(rng, 500);
}

// ---------------------------------------------------------------- criteria

Outcome adjunction() {
  Tally t;
  for (const std::string& name : standard_fixture_names()) {
    const SpectralPresheaf p = SpectralPresheaf::build(*builtin_fixture(name));
    const Oml& l = p.lattice();
    for (Elem a : l.elements()) {
      t.expect(p.to_element(p.daseinise(a)) == a, [&] { return name + ": eps(dasein(" + l.name(a) + "))"; });
      t.expect(p.daseinise(a).masks() == oracle::dasein_masks(p.poset(), a),
               [&] { return name + ": dasein(" + l.name(a) + ") differs from the oracle"; });
    }
    for (const Sub& s : population(p, 11)) {
      t.expect(p.leq(p.daseinise(p.to_element(s)), s),
               [&] { return name + ": dasein(eps(S)) not below S=" + p.format(s); });
      t.expect(p.to_element(s) == oracle::eps(p.poset(), s.masks()),
               [&] { return name + ": eps(" + p.format(s) + ") differs from the oracle"; });
    }
  }
  battery_suite("adjunction", t);
  return {t.ok(), t.summary() + " over 5 fixtures"};
}

Outcome battery_only(const std::string& suite) {
  Tally t;
  std::size_t records = 0;
  battery_suite(suite, t, &records);
  return {t.ok(), t.summary() + " from " + std::to_string(records) + " records over 5 fixtures"};
}

Outcome commutativity() {
  Tally t;
  for (const std::string& name : standard_fixture_names()) {
    const SpectralPresheaf p = SpectralPresheaf::build(*builtin_fixture(name));
    const Oml& l = p.lattice();
    for (Elem a : l.elements()) {
      for (Elem b : l.elements()) {
        t.expect(oracle::commute(l, a, b) == p.sub_commutes(p.daseinise(a), p.daseinise(b)),
                 [&] { return name + ": " + l.name(a) + ", " + l.name(b); });
      }
    }
  }
  battery_suite("commutativity", t);
  return {t.ok(), t.summary() + " (elements exhaustive, subobject pairs exhaustive on mo2)"};
}

Outcome paraconsistency() {
  Tally t;
  std::ostringstream evidence;
  for (const std::string name : {"mo2", "mo3"}) {
    const SpectralPresheaf p = SpectralPresheaf::build(*builtin_fixture(name));
    const std::vector<Sub> all = p.enumerate();
    for (const Sub& s : all) {
      const bool disjoint = p.meet(s, p.star(s)) == p.bottom();
      const bool bound = s == p.bottom() || s == p.top();
      t.expect(disjoint == bound, [&] { return name + ": S=" + p.format(s); });
    }
    evidence << name << " holds on all " << all.size() << " subobjects; ";
  }
  bool counterexample = false;
  for (const std::string name : {"boolean2", "boolean3"}) {
    const SpectralPresheaf p = SpectralPresheaf::build(*builtin_fixture(name));
    const std::vector<Sub> all = p.enumerate();
    std::string witness;
    for (const Sub& s : all) {
      if (s == p.bottom() || s == p.top()) continue;
      if (p.meet(s, p.star(s)) == p.bottom() && witness.empty()) witness = p.format(s);
    }
    if (witness.empty()) {
      evidence << name << ": no S outside {bottom, top} with S & S* = bottom among all "
               << all.size() << " subobjects; ";
    } else {
      counterexample = true;
      evidence << name << " counterexample S=" << witness << "; ";
    }
  }
  if (!counterexample) {
    evidence << "the trivial context {0,1} gives every nonempty S and S* a common point, so the "
                "required Boolean counterexample cannot exist";
  }
  return {t.ok() && counterexample, evidence.str()};
}

Outcome transfer() {
  Tally t;
  std::size_t negfree_cases = 0;
  for (const std::string& name : standard_fixture_names()) {
    for (const BatteryRecord& r :
         run_battery(*builtin_fixture(name), name, "transfer", acceptance_config())) {
      if (r.result == "info") continue;
      if (r.theorem_id == "negation_free_transfer") {
        negfree_cases += std::stoul(r.scope);
      }
      t.expect(r.result == "pass", [&] { return r.theorem_id + " on " + name + ": " + r.witness; });
    }
  }
  const std::size_t provable = provable_delta0().size();
  t.expect(provable >= 8, [&] { return "only " + std::to_string(provable) + " provable formulas"; });
  t.expect(negfree_cases >= 5000,
           [&] { return "only " + std::to_string(negfree_cases) + " negation-free cases"; });
  return {t.ok(), t.summary() + ", " + std::to_string(negfree_cases) +
                      " negation-free cases, " + std::to_string(provable) + " provable formulas"};
}

Outcome hat() {
  Tally t;
  const std::vector<HfSet> sets = hf_sets_up_to_rank(3);
  for (const std::string& name : standard_fixture_names()) {
    const Oml l = *builtin_fixture(name);
    LatticeUniverse lu{LatticeAlgebra(l)};
    SubclUniverse su{SubclAlgebra(SpectralPresheaf::build(l))};
    for (Arrow arrow : kArrows) {
      Evaluator<LatticeAlgebra> el(lu, arrow);
      Evaluator<SubclAlgebra> es(su, arrow);
      for (const HfSet& x : sets) {
        for (const HfSet& y : sets) {
          const auto what = [&] { return name + ": " + to_string(x) + ", " + to_string(y); };
          t.expect(el.member(lu.hat(x), lu.hat(y)) == (y.contains(x) ? l.top() : l.bottom()), what);
          t.expect(el.eq(lu.hat(x), lu.hat(y)) == (x == y ? l.top() : l.bottom()), what);
          t.expect(es.member(su.hat(x), su.hat(y)) ==
                       (y.contains(x) ? su.algebra().top() : su.algebra().bottom()),
                   what);
          t.expect(es.eq(su.hat(x), su.hat(y)) == (x == y ? su.algebra().top() : su.algebra().bottom()),
                   what);
        }
      }
    }
  }
  battery_suite("hat", t);
  return {t.ok(), t.summary() + " over 16 sets of rank <= 3, both universes, all arrows"};
}

Outcome reals() {
  Tally t;
  const SpectralPresheaf p = SpectralPresheaf::build(mo(2));
  const Oml& l = p.lattice();
  const std::vector<Rational> cuts = {Rational(0), Rational(1)};
  std::size_t lattice_families = 0;
  for (Elem a : l.elements()) {
    for (Elem b : l.elements()) {
      for (Elem c : l.elements()) {
        const LatticeReal x(cuts, {a, b, c});
        if (!check_real(l, x).pass()) continue;
        ++lattice_families;
        const SubclReal h = embed_real(p, x);
        const auto what = [&] { return "lattice family " + format_real(l, x); };
        t.expect(extract_real(p, h) == x, what);
        t.expect(is_regular(p, h) && check_real(p, h).pass(), what);
        for (std::size_t i = 0; i < h.plateaus().size(); ++i) {
          t.expect(p.to_element(h.plateaus()[i]) == x.plateaus()[i], what);
        }
      }
    }
  }
  const std::vector<Sub> all = p.enumerate();
  std::size_t regular = 0;
  for (const Sub& s0 : all) {
    for (const Sub& s1 : all) {
      for (const Sub& s2 : all) {
        const SubclReal u(cuts, {s0, s1, s2});
        if (!check_real(p, u).pass() || !is_regular(p, u)) continue;
        ++regular;
        const auto what = [&] { return "subobject family " + format_real(p, u); };
        const LatticeReal g = extract_real(p, u);
        t.expect(embed_real(p, g) == u, what);
        t.expect(regularise(p, u) == u, what);
        for (Arrow arrow : kArrows) t.expect(real_truth_eq(p, u, u, arrow) == p.top(), what);
        Elem previous = l.bottom();
        for (const Rational& r : {Rational(-1), Rational(0), Rational(1, 2), Rational(1), Rational(2)}) {
          const Elem f = projection_at(p, u, r);
          t.expect(l.leq(previous, f) && member_truth(u, r) == u.value(r), what);
          previous = f;
        }
        t.expect(previous == l.top(), what);
      }
    }
  }
  // Joins of regular subobjects project to joins of their projections.
  std::vector<Sub> regular_subs;
  for (const Sub& s : all) {
    if (p.is_regular(s)) regular_subs.push_back(s);
  }
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    std::vector<Sub> family;
    Elem expected = l.bottom();
    for (std::size_t k = 0, n = 1 + rng.below(4); k < n; ++k) {
      family.push_back(rng.pick(regular_subs));
      expected = l.join(expected, p.to_element(family.back()));
    }
    t.expect(p.to_element(p.join_all(family)) == expected, [&] { return "regular join " + std::to_string(i); });
  }
  battery_suite("reals", t);
  return {t.ok(), t.summary() + ", " + std::to_string(lattice_families) + " lattice and " +
                      std::to_string(regular) + " regular subobject families on mo2"};
}

Outcome topos() {
  Tally t;
  for (const std::string name : {"mo2", "mo3"}) {
    const SpectralPresheaf p = SpectralPresheaf::build(*builtin_fixture(name));
    const ContextPoset& poset = p.poset();
    for (Elem e : p.lattice().elements()) {
      const Sub w = p.daseinise(e);
      for (const Sub& s : population(p, 13)) {
        std::vector<bool> expected(poset.size());
        for (std::size_t c = 0; c < poset.size(); ++c) {
          expected[c] = (w.component(c) & ~s.component(c)) == 0;
        }
        bool lower = true;
        for (std::size_t c = 0; c < poset.size(); ++c) {
          for (std::size_t d = 0; d < poset.size(); ++d) {
            if (expected[c] && poset.leq(d, c) && !expected[d]) lower = false;
          }
        }
        const auto what = [&] { return name + ": w=" + p.format(w) + " S=" + p.format(s); };
        t.expect(lower, what);
        t.expect(p.truth_value(s, w).contexts == expected, what);
      }
    }
  }
  const std::map<std::string, std::size_t> sections = {
      {"boolean1", 1}, {"boolean2", 2}, {"boolean3", 3}, {"mo2", 4}};
  for (const auto& [name, count] : sections) {
    const SpectralPresheaf p = SpectralPresheaf::build(*builtin_fixture(name));
    t.expect(oracle::count_global_sections(p.poset()) == count, [&] { return name + " oracle count"; });
    t.expect(p.global_sections().size() == count, [&] { return name + " section count"; });
  }
  battery_suite("topos", t);
  return {t.ok(), t.summary() + ", global sections 1/2/3/4 on boolean1/boolean2/boolean3/mo2"};
}

// Zermelo numerals keep hat-encoded grid points distinct and small.
HfSet numeral(std::size_t n) {
  HfSet x;
  for (std::size_t i = 0; i < n; ++i) x = HfSet(std::vector<HfSet>{x});
  return x;
}

template <typename A>
void grid_check(Universe<A>& universe, const StepFamily<typename A::Value>& u,
                const StepFamily<typename A::Value>& v,
                const std::function<typename A::Value(Arrow)>& library_eq, Tally& t) {
  std::set<Rational> points;
  for (const auto* family : {&u, &v}) {
    for (const Rational& b : family->breakpoints()) {
      points.insert(b - 1);
      points.insert(b);
      points.insert(b + 1);
    }
  }
  const std::vector<Rational> grid(points.begin(), points.end());
  std::vector<LSetId> hats;
  std::vector<typename Universe<A>::Entry> ue, ve;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    hats.push_back(universe.hat(numeral(i)));
    ue.emplace_back(hats.back(), u.value(grid[i]));
    ve.emplace_back(hats.back(), v.value(grid[i]));
  }
  const LSetId us = universe.make(ue);
  const LSetId vs = universe.make(ve);
  for (Arrow arrow : kArrows) {
    Evaluator<A> ev(universe, arrow);
    t.expect(ev.eq(us, vs) == library_eq(arrow), [] { return std::string("grid equality"); });
    for (std::size_t i = 0; i < grid.size(); ++i) {
      t.expect(ev.member(hats[i], us) == member_truth(u, grid[i]),
               [] { return std::string("grid membership"); });
    }
  }
}

Outcome oracle_equivalence() {
  Tally t;
  const std::vector<std::string> vars = {"u", "v", "w"};
  Rng rng(2024);
  std::size_t formulas = 0;
  for (const std::string name : {"mo2", "mo3", "boolean2", "mo2xbool2"}) {
    const Oml l = *builtin_fixture(name);
    LatticeUniverse lu{LatticeAlgebra(l)};
    SubclUniverse su{SubclAlgebra(SpectralPresheaf::build(l))};
    for (int i = 0; i < 125; ++i, ++formulas) {
      const FormulaPtr f = random_delta0(rng, vars);
      Environment le, se;
      for (const auto& v : vars) {
        le[v] = random_lset(lu, rng);
        se[v] = random_lset(su, rng);
      }
      for (Arrow arrow : kArrows) {
        const auto what = [&] { return name + ": " + to_string(*f); };
        Evaluator<LatticeAlgebra> fl(lu, arrow);
        t.expect(fl.eval(*f, le) == oracle::NaiveEvaluator<LatticeAlgebra>(lu, arrow).eval(*f, le), what);
        Evaluator<SubclAlgebra> fs(su, arrow);
        t.expect(fs.eval(*f, se) == oracle::NaiveEvaluator<SubclAlgebra>(su, arrow).eval(*f, se), what);
      }
    }
  }
  // Step reals on mo2 with one or two jumps, paired with a shifted copy.
  const SpectralPresheaf p = SpectralPresheaf::build(mo(2));
  const Oml& l = p.lattice();
  LatticeUniverse lu{LatticeAlgebra(l)};
  SubclUniverse su{SubclAlgebra(p)};
  std::size_t pairs = 0;
  const std::vector<Sub> all = p.enumerate();
  for (Elem a : l.elements()) {
    const LatticeReal x({Rational(0), Rational(1)}, {l.bottom(), a, l.top()});
    for (Elem b : l.elements()) {
      const LatticeReal y({Rational(1, 2), Rational(3)}, {l.bottom(), b, l.top()});
      grid_check<LatticeAlgebra>(lu, x, y, [&](Arrow j) { return real_truth_eq(l, x, y, j); }, t);
      const SubclReal hx = embed_real(p, x);
      for (const Sub& s : all) {
        const SubclReal v({Rational(1, 2), Rational(3)}, {p.bottom(), s, p.top()});
        grid_check<SubclAlgebra>(su, hx, v, [&](Arrow j) { return real_truth_eq(p, hx, v, j); }, t);
        ++pairs;
      }
    }
  }
  return {t.ok(), t.summary() + ", " + std::to_string(formulas) + " random formulas, " +
                      std::to_string(pairs) + " real pairs on the breakpoint grid"};
}

std::string run_cli(const std::string& args, int& exit_code) {
  const std::string command = "'" + std::string(QWORLDS_CLI) + "' " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    exit_code = -1;
    return out;
  }
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), n);
  const int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

Outcome reproducibility() {
  Tally t;
  std::size_t bytes = 0;
  for (const std::string& name : standard_fixture_names()) {
    for (const std::uint64_t seed : {1u, 7u}) {
      BatteryConfig config = acceptance_config();
      config.seed = seed;
      const Oml l = *builtin_fixture(name);
      const std::string a = format_structured(run_battery(l, name, "all", config));
      const std::string b = format_structured(run_battery(l, name, "all", config));
      t.expect(a == b, [&] { return "library run differs on " + name; });
      int code_a = 0, code_b = 0;
      const std::string args = "battery " + name + " --suite all --seed " + std::to_string(seed) +
                               " --format structured";
      const std::string ca = run_cli(args, code_a);
      const std::string cb = run_cli(args, code_b);
      t.expect(code_a == 0 && code_b == 0, [&] { return "cli exit codes on " + name; });
      t.expect(!ca.empty() && ca == cb, [&] { return "cli runs differ on " + name; });
      t.expect(ca == a, [&] { return "cli and library reports differ on " + name; });
      bytes += ca.size();
    }
  }
  return {t.ok(), t.summary() + ", " + std::to_string(bytes) + " report bytes compared"};
}

}  // namespace
}  // namespace qworlds

int main() {
  using qworlds::Outcome;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"adjunction", qworlds::adjunction},
      {"star", [] { return qworlds::battery_only("star"); }},
      {"mirror", [] { return qworlds::battery_only("mirror"); }},
      {"commutativity", qworlds::commutativity},
      {"paraconsistency", qworlds::paraconsistency},
      {"transfer", qworlds::transfer},
      {"hat", qworlds::hat},
      {"reals", qworlds::reals},
      {"topos", qworlds::topos},
      {"oracle", qworlds::oracle_equivalence},
      {"reproducibility", qworlds::reproducibility},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !outcome.pass;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", seconds);
    std::cout << (outcome.pass ? "PASS" : "FAIL") << "  " << (i + 1) << "  " << criteria[i].first
              << "  [" << timing << "]  " << outcome.evidence << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
