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

#include "qworlds/formula.hpp"

#include <cctype>

#include "qworlds/error.hpp"

namespace qworlds {
namespace {

FormulaPtr node(FormulaKind kind, std::string var, std::string other, FormulaPtr left,
                FormulaPtr right) {
  return std::make_shared<const Formula>(
      Formula{kind, std::move(var), std::move(other), std::move(left), std::move(right)});
}

bool is_keyword(std::string_view word) {
  return word == "not" || word == "and" || word == "or" || word == "in" || word == "forall" ||
         word == "exists";
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FormulaPtr parse() {
    FormulaPtr f = parse_iff();
    skip();
    if (pos_ != text_.size()) fail("unexpected input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kSyntaxError, what + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_symbol(std::string_view sym) {
    skip();
    return text_.substr(pos_, sym.size()) == sym;
  }

  bool accept_symbol(std::string_view sym) {
    if (!peek_symbol(sym)) return false;
    pos_ += sym.size();
    return true;
  }

  void expect_symbol(std::string_view sym) {
    if (!accept_symbol(sym)) fail("expected '" + std::string(sym) + "'");
  }

  // Keyword followed by a non-identifier character.
  bool peek_keyword(std::string_view word, std::size_t at) const {
    if (text_.substr(at, word.size()) != word) return false;
    const std::size_t end = at + word.size();
    return end == text_.size() || !ident_char(text_[end]);
  }

  bool accept_keyword(std::string_view word) {
    skip();
    if (!peek_keyword(word, pos_)) return false;
    pos_ += word.size();
    return true;
  }

  std::string identifier() {
    skip();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail("expected variable");
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    std::string word(text_.substr(start, pos_ - start));
    if (is_keyword(word)) {
      pos_ = start;
      fail("expected variable, found keyword '" + word + "'");
    }
    return word;
  }

  FormulaPtr parse_iff() {
    FormulaPtr f = parse_implies();
    while (accept_symbol("<->")) f = make_iff(f, parse_implies());
    return f;
  }

  FormulaPtr parse_implies() {
    FormulaPtr f = parse_or();
    if (accept_symbol("->")) return make_implies(f, parse_implies());
    return f;
  }

  FormulaPtr parse_or() {
    FormulaPtr f = parse_and();
    while (accept_keyword("or")) f = make_or(f, parse_and());
    return f;
  }

  FormulaPtr parse_and() {
    FormulaPtr f = parse_unary();
    while (accept_keyword("and")) f = make_and(f, parse_unary());
    return f;
  }

  // After '(' decide whether a quantifier prefix follows.
  bool at_quantifier() {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != '(') return false;
    std::size_t at = pos_ + 1;
    while (at < text_.size() && std::isspace(static_cast<unsigned char>(text_[at]))) ++at;
    return peek_keyword("forall", at) || peek_keyword("exists", at);
  }

  FormulaPtr parse_unary() {
    if (accept_keyword("not")) return make_not(parse_unary());
    if (at_quantifier()) {
      expect_symbol("(");
      const bool universal = accept_keyword("forall");
      if (!universal && !accept_keyword("exists")) fail("expected quantifier");
      std::string var = identifier();
      std::string domain;
      const bool bounded = accept_keyword("in");
      if (bounded) domain = identifier();
      expect_symbol(")");
      FormulaPtr body = parse_unary();
      if (bounded) {
        return universal ? make_forall_in(var, domain, body) : make_exists_in(var, domain, body);
      }
      return universal ? make_forall(var, body) : make_exists(var, body);
    }
    if (accept_symbol("(")) {
      FormulaPtr f = parse_iff();
      expect_symbol(")");
      return f;
    }
    std::string lhs = identifier();
    if (accept_symbol("=")) return make_eq(lhs, identifier());
    if (accept_keyword("in")) return make_in(lhs, identifier());
    fail("expected '=' or 'in'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  auto use = [&](const std::string& v) {
    if (!bound.count(v)) out.insert(v);
  };
  switch (f.kind) {
    case FormulaKind::kEq:
    case FormulaKind::kIn:
      use(f.var);
      use(f.other);
      return;
    case FormulaKind::kNot:
      collect_free(*f.left, bound, out);
      return;
    case FormulaKind::kAnd:
    case FormulaKind::kOr:
    case FormulaKind::kImplies:
    case FormulaKind::kIff:
      collect_free(*f.left, bound, out);
      collect_free(*f.right, bound, out);
      return;
    case FormulaKind::kForallIn:
    case FormulaKind::kExistsIn:
    case FormulaKind::kForall:
    case FormulaKind::kExists: {
      if (f.kind == FormulaKind::kForallIn || f.kind == FormulaKind::kExistsIn) use(f.other);
      const bool fresh = bound.insert(f.var).second;
      collect_free(*f.left, bound, out);
      if (fresh) bound.erase(f.var);
      return;
    }
  }
}

std::string binary_op(FormulaKind kind) {
  switch (kind) {
    case FormulaKind::kAnd: return " and ";
    case FormulaKind::kOr: return " or ";
    case FormulaKind::kImplies: return " -> ";
    case FormulaKind::kIff: return " <-> ";
    default: return " ? ";
  }
}

}  // namespace

FormulaPtr make_eq(std::string x, std::string y) {
  return node(FormulaKind::kEq, std::move(x), std::move(y), nullptr, nullptr);
}
FormulaPtr make_in(std::string x, std::string y) {
  return node(FormulaKind::kIn, std::move(x), std::move(y), nullptr, nullptr);
}
FormulaPtr make_not(FormulaPtr f) { return node(FormulaKind::kNot, "", "", std::move(f), nullptr); }
FormulaPtr make_binary(FormulaKind kind, FormulaPtr a, FormulaPtr b) {
  return node(kind, "", "", std::move(a), std::move(b));
}
FormulaPtr make_and(FormulaPtr a, FormulaPtr b) {
  return make_binary(FormulaKind::kAnd, std::move(a), std::move(b));
}
FormulaPtr make_or(FormulaPtr a, FormulaPtr b) {
  return make_binary(FormulaKind::kOr, std::move(a), std::move(b));
}
FormulaPtr make_implies(FormulaPtr a, FormulaPtr b) {
  return make_binary(FormulaKind::kImplies, std::move(a), std::move(b));
}
FormulaPtr make_iff(FormulaPtr a, FormulaPtr b) {
  return make_binary(FormulaKind::kIff, std::move(a), std::move(b));
}
FormulaPtr make_forall_in(std::string x, std::string domain, FormulaPtr body) {
  return node(FormulaKind::kForallIn, std::move(x), std::move(domain), std::move(body), nullptr);
}
FormulaPtr make_exists_in(std::string x, std::string domain, FormulaPtr body) {
  return node(FormulaKind::kExistsIn, std::move(x), std::move(domain), std::move(body), nullptr);
}
FormulaPtr make_forall(std::string x, FormulaPtr body) {
  return node(FormulaKind::kForall, std::move(x), "", std::move(body), nullptr);
}
FormulaPtr make_exists(std::string x, FormulaPtr body) {
  return node(FormulaKind::kExists, std::move(x), "", std::move(body), nullptr);
}

FormulaPtr parse_formula(std::string_view text) { return Parser(text).parse(); }

FormulaPtr parse_formula(std::string_view text, const std::set<std::string>& bound) {
  FormulaPtr f = parse_formula(text);
  for (const auto& v : free_variables(*f)) {
    if (!bound.count(v)) throw Error(ErrorCode::kUnboundVariable, "variable '" + v + "' is not bound");
  }
  return f;
}

std::string to_string(const Formula& f) {
  switch (f.kind) {
    case FormulaKind::kEq: return f.var + " = " + f.other;
    case FormulaKind::kIn: return f.var + " in " + f.other;
    case FormulaKind::kNot: return "not " + to_string(*f.left);
    case FormulaKind::kAnd:
    case FormulaKind::kOr:
    case FormulaKind::kImplies:
    case FormulaKind::kIff:
      return "(" + to_string(*f.left) + binary_op(f.kind) + to_string(*f.right) + ")";
    case FormulaKind::kForallIn:
      return "(forall " + f.var + " in " + f.other + ") " + to_string(*f.left);
    case FormulaKind::kExistsIn:
      return "(exists " + f.var + " in " + f.other + ") " + to_string(*f.left);
    case FormulaKind::kForall: return "(forall " + f.var + ") " + to_string(*f.left);
    case FormulaKind::kExists: return "(exists " + f.var + ") " + to_string(*f.left);
  }
  return "";
}

bool structurally_equal(const Formula& a, const Formula& b) {
  if (a.kind != b.kind || a.var != b.var || a.other != b.other) return false;
  if (static_cast<bool>(a.left) != static_cast<bool>(b.left)) return false;
  if (static_cast<bool>(a.right) != static_cast<bool>(b.right)) return false;
  if (a.left && !structurally_equal(*a.left, *b.left)) return false;
  if (a.right && !structurally_equal(*a.right, *b.right)) return false;
  return true;
}

bool is_delta0(const Formula& f) {
  if (f.kind == FormulaKind::kForall || f.kind == FormulaKind::kExists) return false;
  if (f.left && !is_delta0(*f.left)) return false;
  if (f.right && !is_delta0(*f.right)) return false;
  return true;
}

bool is_negation_free(const Formula& f) {
  switch (f.kind) {
    case FormulaKind::kNot:
    case FormulaKind::kImplies:
    case FormulaKind::kIff:
    case FormulaKind::kForall:
    case FormulaKind::kExists:
      return false;
    default:
      break;
  }
  if (f.left && !is_negation_free(*f.left)) return false;
  if (f.right && !is_negation_free(*f.right)) return false;
  return true;
}

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> bound;
  std::set<std::string> out;
  collect_free(f, bound, out);
  return out;
}

std::size_t formula_size(const Formula& f) {
  std::size_t n = 1;
  if (f.left) n += formula_size(*f.left);
  if (f.right) n += formula_size(*f.right);
  return n;
}

}  // namespace qworlds
