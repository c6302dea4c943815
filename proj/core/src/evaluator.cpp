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

#include "qworlds/evaluator.hpp"

#include "qworlds/error.hpp"

namespace qworlds {
namespace {

std::uint64_t pair_key(LSetId a, LSetId b) {
  return (static_cast<std::uint64_t>(a.index) << 32) | b.index;
}

}  // namespace

template <typename A>
std::size_t Evaluator<A>::KeyHash::operator()(const std::vector<std::uint32_t>& key) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto k : key) h = (h ^ k) * 0x100000001b3ULL;
  return h;
}

template <typename A>
Evaluator<A>::Evaluator(const Universe<A>& universe, Arrow arrow, EvalOptions options)
    : universe_(universe), arrow_(arrow), options_(std::move(options)) {}

template <typename A>
typename Evaluator<A>::Value Evaluator<A>::iff(const Value& a, const Value& b) const {
  const A& alg = universe_.algebra();
  return alg.meet(alg.implies(arrow_, a, b), alg.implies(arrow_, b, a));
}

template <typename A>
typename Evaluator<A>::Value Evaluator<A>::eq(LSetId u, LSetId v) {
  // The defining expression is symmetric in u and v.
  const std::uint64_t key = u < v ? pair_key(u, v) : pair_key(v, u);
  if (auto it = eq_memo_.find(key); it != eq_memo_.end()) return it->second;
  const A& alg = universe_.algebra();
  Value acc = alg.top();
  for (const auto& [x, value] : universe_.entries(u)) {
    acc = alg.meet(acc, alg.implies(arrow_, value, member(x, v)));
  }
  for (const auto& [y, value] : universe_.entries(v)) {
    acc = alg.meet(acc, alg.implies(arrow_, value, member(y, u)));
  }
  eq_memo_.emplace(key, acc);
  return acc;
}

template <typename A>
typename Evaluator<A>::Value Evaluator<A>::member(LSetId u, LSetId v) {
  const std::uint64_t key = pair_key(u, v);
  if (auto it = in_memo_.find(key); it != in_memo_.end()) return it->second;
  const A& alg = universe_.algebra();
  Value acc = alg.bottom();
  for (const auto& [y, value] : universe_.entries(v)) {
    acc = alg.join(acc, alg.meet(value, eq(y, u)));
  }
  in_memo_.emplace(key, acc);
  return acc;
}

template <typename A>
const std::vector<std::string>& Evaluator<A>::free_of(const Formula& f) {
  auto it = free_vars_.find(&f);
  if (it != free_vars_.end()) return it->second;
  auto vars = free_variables(f);
  return free_vars_.emplace(&f, std::vector<std::string>(vars.begin(), vars.end())).first->second;
}

template <typename A>
typename Evaluator<A>::Value Evaluator<A>::eval(const Formula& f, const Environment& env) {
  for (const auto& v : free_variables(f)) {
    if (!env.count(v)) throw Error(ErrorCode::kUnboundVariable, "variable '" + v + "' is not bound");
  }
  for (const auto& [name, id] : env) {
    if (!universe_.valid(id)) {
      throw Error(ErrorCode::kInvalidArgument, "variable '" + name + "' names an unknown set");
    }
  }
  if (!is_delta0(f) && !options_.relativized_domain) {
    throw Error(ErrorCode::kUnboundedQuantifier,
                "unbounded quantifiers range over the whole universe and cannot be evaluated; "
                "supply a relativised domain");
  }
  // Node addresses are only stable while the caller's formula is alive.
  memo_.clear();
  free_vars_.clear();
  Environment scratch = env;
  return eval_node(f, scratch);
}

template <typename A>
typename Evaluator<A>::Value Evaluator<A>::eval_node(const Formula& f, Environment& env) {
  const A& alg = universe_.algebra();
  switch (f.kind) {
    case FormulaKind::kEq: return eq(env.at(f.var), env.at(f.other));
    case FormulaKind::kIn: return member(env.at(f.var), env.at(f.other));
    default: break;
  }

  const auto& vars = free_of(f);
  std::vector<std::uint32_t> key;
  key.reserve(vars.size());
  for (const auto& v : vars) key.push_back(env.at(v).index);
  auto& table = memo_[&f];
  if (auto it = table.find(key); it != table.end()) return it->second;

  // Evaluates the body with `var` bound to x, restoring any outer binding.
  auto with = [&](const std::string& var, LSetId x) {
    auto saved = env.find(var);
    std::optional<LSetId> outer;
    if (saved != env.end()) outer = saved->second;
    env[var] = x;
    Value v = eval_node(*f.left, env);
    if (outer) {
      env[var] = *outer;
    } else {
      env.erase(var);
    }
    return v;
  };

  Value result = alg.top();
  switch (f.kind) {
    case FormulaKind::kNot:
      result = alg.negate(eval_node(*f.left, env));
      break;
    case FormulaKind::kAnd:
      result = alg.meet(eval_node(*f.left, env), eval_node(*f.right, env));
      break;
    case FormulaKind::kOr:
      result = alg.join(eval_node(*f.left, env), eval_node(*f.right, env));
      break;
    case FormulaKind::kImplies: {
      Value a = eval_node(*f.left, env);
      result = alg.implies(arrow_, a, eval_node(*f.right, env));
      break;
    }
    case FormulaKind::kIff: {
      Value a = eval_node(*f.left, env);
      result = iff(a, eval_node(*f.right, env));
      break;
    }
    case FormulaKind::kForallIn: {
      const LSetId domain = env.at(f.other);
      for (const auto& [x, value] : universe_.entries(domain)) {
        result = alg.meet(result, alg.implies(arrow_, value, with(f.var, x)));
      }
      break;
    }
    case FormulaKind::kExistsIn: {
      const LSetId domain = env.at(f.other);
      result = alg.bottom();
      for (const auto& [x, value] : universe_.entries(domain)) {
        result = alg.join(result, alg.meet(value, with(f.var, x)));
      }
      break;
    }
    case FormulaKind::kForall:
      for (LSetId x : *options_.relativized_domain) result = alg.meet(result, with(f.var, x));
      break;
    case FormulaKind::kExists:
      result = alg.bottom();
      for (LSetId x : *options_.relativized_domain) result = alg.join(result, with(f.var, x));
      break;
    default:
      break;
  }
  memo_[&f].emplace(std::move(key), result);
  return result;
}

template <typename A>
typename A::Value evaluate(const Universe<A>& universe, Arrow arrow, const Formula& f,
                           const std::vector<std::string>& vars,
                           const std::vector<LSetId>& args) {
  if (vars.size() != args.size()) {
    throw Error(ErrorCode::kInvalidArgument, "variable and argument counts differ");
  }
  Environment env;
  for (std::size_t i = 0; i < vars.size(); ++i) env[vars[i]] = args[i];
  Evaluator<A> evaluator(universe, arrow);
  return evaluator.eval(f, env);
}

template class Evaluator<LatticeAlgebra>;
template class Evaluator<SubclAlgebra>;
template LatticeAlgebra::Value evaluate(const Universe<LatticeAlgebra>&, Arrow, const Formula&,
                                        const std::vector<std::string>&,
                                        const std::vector<LSetId>&);
template SubclAlgebra::Value evaluate(const Universe<SubclAlgebra>&, Arrow, const Formula&,
                                      const std::vector<std::string>&,
                                      const std::vector<LSetId>&);

}  // namespace qworlds
