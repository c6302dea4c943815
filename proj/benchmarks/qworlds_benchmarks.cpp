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

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "qworlds/battery.hpp"
#include "qworlds/contexts.hpp"
#include "qworlds/evaluator.hpp"
#include "qworlds/fixtures.hpp"
#include "qworlds/models.hpp"
#include "qworlds/presheaf.hpp"

namespace qworlds {
namespace {

const std::vector<std::string> kFixtures = {"boolean3", "mo3", "mo2xbool2"};

void BM_ContextEnumeration(benchmark::State& state) {
  const Oml l = *builtin_fixture(kFixtures[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(ContextPoset::enumerate(l));
  state.SetLabel(kFixtures[state.range(0)]);
}
BENCHMARK(BM_ContextEnumeration)->DenseRange(0, 2);

void BM_BooleanContexts(benchmark::State& state) {
  const Oml l = boolean(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ContextPoset::enumerate(l));
}
BENCHMARK(BM_BooleanContexts)->DenseRange(2, 5);

void BM_DaseiniseAll(benchmark::State& state) {
  const SpectralPresheaf p = SpectralPresheaf::build(*builtin_fixture(kFixtures[state.range(0)]));
  const std::vector<Elem> elements = p.lattice().elements();
  for (auto _ : state) {
    for (Elem a : elements) benchmark::DoNotOptimize(p.daseinise(a));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(elements.size()));
  state.SetLabel(kFixtures[state.range(0)]);
}
BENCHMARK(BM_DaseiniseAll)->DenseRange(0, 2);

void BM_StarRoundTrip(benchmark::State& state) {
  const SpectralPresheaf p = SpectralPresheaf::build(*builtin_fixture(kFixtures[state.range(0)]));
  Rng rng(1);
  const std::vector<ClopenSubobject> subs = p.population(rng, 200);
  for (auto _ : state) {
    for (const auto& s : subs) benchmark::DoNotOptimize(p.double_star(s));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(subs.size()));
  state.SetLabel(kFixtures[state.range(0)]);
}
BENCHMARK(BM_StarRoundTrip)->DenseRange(0, 2);

template <typename A>
void eval_random(benchmark::State& state, Universe<A>& universe) {
  Rng rng(3);
  const std::vector<std::string> vars = {"u", "v", "w"};
  std::vector<FormulaPtr> formulas;
  std::vector<Environment> envs;
  RandomSetOptions sets;
  sets.max_rank = static_cast<std::size_t>(state.range(0));
  for (int i = 0; i < 50; ++i) {
    formulas.push_back(random_delta0(rng, vars));
    Environment env;
    for (const auto& v : vars) env[v] = random_lset(universe, rng, sets);
    envs.push_back(env);
  }
  for (auto _ : state) {
    for (std::size_t i = 0; i < formulas.size(); ++i) {
      Evaluator<A> ev(universe, Arrow::kSasaki);
      benchmark::DoNotOptimize(ev.eval(*formulas[i], envs[i]));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(formulas.size()));
}

void BM_EvalLattice(benchmark::State& state) {
  LatticeUniverse u{LatticeAlgebra(*builtin_fixture("mo3"))};
  eval_random(state, u);
}
BENCHMARK(BM_EvalLattice)->DenseRange(1, 3);

void BM_EvalSubobjects(benchmark::State& state) {
  SubclUniverse u{SubclAlgebra(SpectralPresheaf::build(*builtin_fixture("mo3")))};
  eval_random(state, u);
}
BENCHMARK(BM_EvalSubobjects)->DenseRange(1, 3);

void BM_BatteryAll(benchmark::State& state) {
  const std::string name = kFixtures[state.range(0)];
  const Oml l = *builtin_fixture(name);
  BatteryConfig config;
  for (auto _ : state) benchmark::DoNotOptimize(run_battery(l, name, "all", config));
  state.SetLabel(name);
}
BENCHMARK(BM_BatteryAll)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace qworlds

BENCHMARK_MAIN();
