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

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qworlds/formula.hpp"
#include "qworlds/lset.hpp"

namespace qworlds {

using Environment = std::map<std::string, LSetId>;

struct EvalOptions {
  // When set, unbounded quantifiers range over these sets instead of being
  // rejected. The result is then only a relativised truth value.
  std::optional<std::vector<LSetId>> relativized_domain;
};

// Truth values of formulas in a universe for one choice of implication.
// Atomic truth values are memoised for the evaluator's lifetime; compound
// ones for the duration of a single eval() call.
template <typename A>
class Evaluator {
 public:
  using Value = typename A::Value;

  Evaluator(const Universe<A>& universe, Arrow arrow, EvalOptions options = {});

  // Meet over members of u of (u(x) => [x in v]) together with the same
  // condition with u and v exchanged.
  Value eq(LSetId u, LSetId v);
  // Join over members y of v of (v(y) & [y = u]).
  Value member(LSetId u, LSetId v);

  // Throws kUnboundVariable for free variables missing from env and
  // kUnboundedQuantifier for unbounded quantifiers without a domain.
  Value eval(const Formula& f, const Environment& env);

  Arrow arrow() const { return arrow_; }
  const Universe<A>& universe() const { return universe_; }

 private:
  Value iff(const Value& a, const Value& b) const;
  Value eval_node(const Formula& f, Environment& env);
  const std::vector<std::string>& free_of(const Formula& f);

  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& key) const noexcept;
  };

  const Universe<A>& universe_;
  Arrow arrow_;
  EvalOptions options_;
  std::unordered_map<std::uint64_t, Value> eq_memo_;
  std::unordered_map<std::uint64_t, Value> in_memo_;
  std::unordered_map<const Formula*, std::vector<std::string>> free_vars_;
  std::unordered_map<const Formula*, std::unordered_map<std::vector<std::uint32_t>, Value, KeyHash>>
      memo_;
};

extern template class Evaluator<LatticeAlgebra>;
extern template class Evaluator<SubclAlgebra>;

// Evaluates a formula over `vars` bound positionally to `args`.
template <typename A>
typename A::Value evaluate(const Universe<A>& universe, Arrow arrow, const Formula& f,
                           const std::vector<std::string>& vars, const std::vector<LSetId>& args);

extern template LatticeAlgebra::Value evaluate(const Universe<LatticeAlgebra>&, Arrow,
                                               const Formula&, const std::vector<std::string>&,
                                               const std::vector<LSetId>&);
extern template SubclAlgebra::Value evaluate(const Universe<SubclAlgebra>&, Arrow, const Formula&,
                                             const std::vector<std::string>&,
                                             const std::vector<LSetId>&);

}  // namespace qworlds
