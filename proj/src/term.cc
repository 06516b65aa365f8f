// Copyright 2026 The regunify Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "regunify/term.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace regunify {

struct Term::Rep {
  Kind kind;
  std::string name;
  LiteralKind literal = LiteralKind::kAtom;
  std::vector<Term> args;
  std::size_t size = 1;
  bool ground = true;
};

Term Term::var(std::string name) {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::kVar;
  rep->name = std::move(name);
  rep->ground = false;
  return Term(std::move(rep));
}

Term Term::constant(std::string symbol, LiteralKind kind) {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::kConst;
  rep->name = std::move(symbol);
  rep->literal = kind;
  return Term(std::move(rep));
}

Term Term::integer(long long value) {
  return constant(std::to_string(value), LiteralKind::kInt);
}

Term Term::compound(std::string functor, std::vector<Term> args) {
  if (args.empty()) {
    throw std::invalid_argument("compound term '" + functor +
                                "' needs at least one argument");
  }
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::kCompound;
  rep->name = std::move(functor);
  for (const auto& a : args) {
    rep->size += a.size();
    rep->ground = rep->ground && a.is_ground();
  }
  rep->args = std::move(args);
  return Term(std::move(rep));
}

Term Term::cons(Term head, Term tail) {
  return compound(std::string(kConsSymbol), {std::move(head), std::move(tail)});
}

Term::Kind Term::kind() const { return rep_->kind; }
const std::string& Term::name() const { return rep_->name; }
LiteralKind Term::literal_kind() const { return rep_->literal; }
const std::vector<Term>& Term::args() const { return rep_->args; }
std::size_t Term::size() const { return rep_->size; }
bool Term::is_ground() const { return rep_->ground; }

bool Term::same_head(const Term& other) const {
  if (kind() != other.kind() || kind() == Kind::kVar) return false;
  if (name() != other.name()) return false;
  if (kind() == Kind::kConst) return literal_kind() == other.literal_kind();
  return arity() == other.arity();
}

bool operator==(const Term& a, const Term& b) {
  if (a.rep_ == b.rep_) return true;
  if (a.kind() != b.kind() || a.name() != b.name()) return false;
  switch (a.kind()) {
    case Term::Kind::kVar:
      return true;
    case Term::Kind::kConst:
      return a.literal_kind() == b.literal_kind();
    case Term::Kind::kCompound:
      return a.size() == b.size() && a.args() == b.args();
  }
  return false;
}

Term apply_subst(const Subst& subst, const Term& term) {
  if (subst.empty() || term.is_ground()) return term;
  switch (term.kind()) {
    case Term::Kind::kVar: {
      auto it = subst.find(term.name());
      return it == subst.end() ? term : it->second;
    }
    case Term::Kind::kConst:
      return term;
    case Term::Kind::kCompound: {
      std::vector<Term> args;
      args.reserve(term.arity());
      bool changed = false;
      for (const auto& a : term.args()) {
        args.push_back(apply_subst(subst, a));
        changed = changed || args.back() != a;
      }
      if (!changed) return term;
      return Term::compound(term.name(), std::move(args));
    }
  }
  return term;
}

bool occurs_in(std::string_view var, const Term& term) {
  if (term.is_ground()) return false;
  if (term.is_var()) return term.name() == var;
  return std::any_of(term.args().begin(), term.args().end(),
                     [&](const Term& a) { return occurs_in(var, a); });
}

void collect_vars(const Term& term, std::vector<std::string>& out) {
  if (term.is_ground()) return;
  if (term.is_var()) {
    if (std::find(out.begin(), out.end(), term.name()) == out.end()) {
      out.push_back(term.name());
    }
    return;
  }
  for (const auto& a : term.args()) collect_vars(a, out);
}

std::set<std::string> free_vars(const Term& term) {
  std::vector<std::string> names;
  collect_vars(term, names);
  return {names.begin(), names.end()};
}

Subst compose(const Subst& first, const Subst& second) {
  Subst out;
  for (const auto& [name, value] : first) {
    Term t = apply_subst(second, value);
    if (!(t.is_var() && t.name() == name)) out.emplace(name, std::move(t));
  }
  for (const auto& [name, value] : second) {
    if (!first.contains(name)) out.emplace(name, value);
  }
  return out;
}

}  // namespace regunify
