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

#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace qworlds {

enum class FormulaKind {
  kEq,        // lhs = rhs
  kIn,        // lhs in rhs
  kNot,
  kAnd,
  kOr,
  kImplies,
  kIff,
  kForallIn,  // (forall var in domain) body
  kExistsIn,  // (exists var in domain) body
  kForall,    // (forall var) body
  kExists,    // (exists var) body
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable syntax tree node. Atoms use `var` and `other` for their two
// sides; quantifiers bind `var`, bounded ones range over `other`.
struct Formula {
  FormulaKind kind;
  std::string var;
  std::string other;
  FormulaPtr left;
  FormulaPtr right;
};

FormulaPtr make_eq(std::string x, std::string y);
FormulaPtr make_in(std::string x, std::string y);
FormulaPtr make_not(FormulaPtr f);
FormulaPtr make_binary(FormulaKind kind, FormulaPtr a, FormulaPtr b);
FormulaPtr make_and(FormulaPtr a, FormulaPtr b);
FormulaPtr make_or(FormulaPtr a, FormulaPtr b);
FormulaPtr make_implies(FormulaPtr a, FormulaPtr b);
FormulaPtr make_iff(FormulaPtr a, FormulaPtr b);
FormulaPtr make_forall_in(std::string x, std::string domain, FormulaPtr body);
FormulaPtr make_exists_in(std::string x, std::string domain, FormulaPtr body);
FormulaPtr make_forall(std::string x, FormulaPtr body);
FormulaPtr make_exists(std::string x, FormulaPtr body);

// Grammar, loosest first: `<->`, `->` (right associative), `or`, `and`,
// then unary `not` and quantifier prefixes `(forall x in y)`, `(exists x)`
// which apply to the next unary formula. Atoms are `x = y` and `x in y`.
// Throws kSyntaxError with the byte offset of the problem.
FormulaPtr parse_formula(std::string_view text);
// Additionally throws kUnboundVariable if a free variable is not listed.
FormulaPtr parse_formula(std::string_view text, const std::set<std::string>& bound);

// Fully parenthesised form that parses back to an equal tree.
std::string to_string(const Formula& f);

bool structurally_equal(const Formula& a, const Formula& b);
// No unbounded quantifiers.
bool is_delta0(const Formula& f);
// Built from atoms with and, or and bounded quantifiers only.
bool is_negation_free(const Formula& f);
std::set<std::string> free_variables(const Formula& f);
std::size_t formula_size(const Formula& f);

}  // namespace qworlds
