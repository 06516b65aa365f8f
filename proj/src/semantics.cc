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

#include "regunify/semantics.h"


#include "regunify/print.h"

namespace regunify {

namespace {

// Unifier over domain patterns, kept separate from the constraint solver so
// the oracle does not share code with what it checks.
class PatternUnifier {
 public:
  bool unify(const TypeExpr& a, const TypeExpr& b) {
    TypeExpr x = walk(a);
    TypeExpr y = walk(b);
    if (x.is_var() && y.is_var() && x.name() == y.name()) return true;
    if (x.is_var()) return bind(x.name(), y);
    if (y.is_var()) return bind(y.name(), x);
    if (!x.same_head(y)) return false;
    for (std::size_t i = 0; i < x.arity(); ++i) {
      if (!unify(x.args()[i], y.args()[i])) return false;
    }
    return true;
  }

  TypeExpr resolve(const TypeExpr& t) const {
    TypeExpr x = walk(t);
    if (x.is_var() || x.arity() == 0) return x;
    std::vector<TypeExpr> args;
    args.reserve(x.arity());
    for (const auto& a : x.args()) args.push_back(resolve(a));
    return x.kind() == TypeExpr::Kind::kSym ? TypeExpr::sym(x.name(), args)
                                            : TypeExpr::ctor(x.name(), args);
  }

 private:
  TypeExpr walk(TypeExpr t) const {
    while (t.is_var()) {
      auto it = bindings_.find(t.name());
      if (it == bindings_.end()) break;
      t = it->second;
    }
    return t;
  }

  bool occurs(const std::string& v, const TypeExpr& t) const {
    TypeExpr x = walk(t);
    if (x.is_var()) return x.name() == v;
    for (const auto& a : x.args()) {
      if (occurs(v, a)) return true;
    }
    return false;
  }

  bool bind(const std::string& v, const TypeExpr& t) {
    if (occurs(v, t)) return false;
    bindings_.emplace(v, t);
    return true;
  }

  std::map<std::string, TypeExpr> bindings_;
};

TypeExpr rename(const TypeExpr& t, const std::string& prefix) {
  std::vector<std::string> vars;
  collect_vars(t, vars);
  if (vars.empty()) return t;
  TypeSubst s;
  for (const auto& v : vars) s.emplace(v, TypeExpr::var(prefix + v));
  return apply_type_subst(s, t);
}

// Renames pattern variables to ?1, ?2, ... in order of first occurrence.
TypeExpr canonical(const TypeExpr& t) {
  std::vector<std::string> vars;
  collect_vars(t, vars);
  if (vars.empty()) return t;
  TypeSubst s;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    s.emplace(vars[i], TypeExpr::var("?" + std::to_string(i + 1)));
  }
  return apply_type_subst(s, t);
}

}  // namespace

struct Value::Rep {
  Kind kind;
  std::string label;
  std::vector<Value> children;
  bool truth = false;
  DomainTag domain;
};

namespace {

Value::Kind leaf_kind_of(BaseType base) {
  switch (base) {
    case BaseType::kInt:
      return Value::Kind::kInt;
    case BaseType::kFloat:
      return Value::Kind::kFloat;
    case BaseType::kString:
      return Value::Kind::kString;
    case BaseType::kAtom:
      break;
  }
  return Value::Kind::kAtom;
}

}  // namespace

Value Value::integer(std::string text) {
  return Value(std::make_shared<const Rep>(
      Rep{Kind::kInt, std::move(text), {}, false,
          DomainTag::of(TypeExpr::base(BaseType::kInt))}));
}

Value Value::floating(std::string text) {
  return Value(std::make_shared<const Rep>(
      Rep{Kind::kFloat, std::move(text), {}, false,
          DomainTag::of(TypeExpr::base(BaseType::kFloat))}));
}

Value Value::string(std::string text) {
  return Value(std::make_shared<const Rep>(
      Rep{Kind::kString, std::move(text), {}, false,
          DomainTag::of(TypeExpr::base(BaseType::kString))}));
}

Value Value::atom(std::string name) {
  return Value(std::make_shared<const Rep>(
      Rep{Kind::kAtom, std::move(name), {}, false,
          DomainTag::of(TypeExpr::base(BaseType::kAtom))}));
}

Value Value::boolean(bool value) {
  return Value(std::make_shared<const Rep>(
      Rep{Kind::kBool, value ? "true" : "false", {}, value,
          DomainTag::of(TypeExpr::boolean())}));
}

Value Value::wrong() {
  static const Value w(std::make_shared<const Rep>(
      Rep{Kind::kWrong, "wrong", {}, false, DomainTag::wrong_domain()}));
  return w;
}

Value Value::nil() {
  static const Value n(std::make_shared<const Rep>(
      Rep{Kind::kNil, std::string(kNilSymbol), {}, false,
          DomainTag::of(TypeExpr::list(TypeExpr::var("?1")))}));
  return n;
}

Value Value::constant(const std::string& symbol, const TypeDefSet& defs) {
  auto ctor = defs.find_constructor(symbol);
  if (!ctor || ctor->type().arity() != 0) return atom(symbol);
  if (symbol == kNilSymbol && ctor->def->head == kListSymbol) return nil();
  return Value(std::make_shared<const Rep>(
      Rep{Kind::kTree, symbol, {}, false,
          DomainTag::of(canonical(ctor->def->head_type()))}));
}

Value Value::apply(const std::string& symbol, std::vector<Value> children,
                   const TypeDefSet& defs) {
  if (children.empty()) return constant(symbol, defs);
  for (const auto& c : children) {
    if (c.is_wrong()) return wrong();
  }
  auto ctor = defs.find_constructor(symbol);
  if (ctor && ctor->type().arity() == children.size()) {
    PatternUnifier u;
    const TypeExpr& summand = ctor->type();
    for (std::size_t i = 0; i < children.size(); ++i) {
      TypeExpr expected = rename(summand.args()[i], "p:");
      TypeExpr actual =
          rename(children[i].domain().pattern, "c" + std::to_string(i) + ":");
      if (!u.unify(expected, actual)) return wrong();
    }
    TypeExpr result = canonical(u.resolve(rename(ctor->def->head_type(), "p:")));
    Kind kind = symbol == kConsSymbol && ctor->def->head == kListSymbol
                    ? Kind::kCons
                    : Kind::kTree;
    return Value(std::make_shared<const Rep>(
        Rep{kind, symbol, std::move(children), false,
            DomainTag::of(std::move(result))}));
  }
  std::vector<TypeExpr> parts;
  parts.reserve(children.size());
  for (std::size_t i = 0; i < children.size(); ++i) {
    parts.push_back(
        rename(children[i].domain().pattern, "c" + std::to_string(i) + ":"));
  }
  TypeExpr result =
      canonical(TypeExpr::sym(implicit_type_symbol(symbol), std::move(parts)));
  return Value(std::make_shared<const Rep>(
      Rep{Kind::kTree, symbol, std::move(children), false,
          DomainTag::of(std::move(result))}));
}

Value::Kind Value::kind() const { return rep_->kind; }
const std::string& Value::label() const { return rep_->label; }
const std::vector<Value>& Value::children() const { return rep_->children; }
bool Value::truth() const { return rep_->truth; }
const DomainTag& Value::domain() const { return rep_->domain; }

bool operator==(const Value& a, const Value& b) {
  if (a.rep_ == b.rep_) return true;
  return a.kind() == b.kind() && a.label() == b.label() &&
         a.children() == b.children();
}

bool intersects(const DomainTag& a, const DomainTag& b) {
  if (a.wrong || b.wrong) return a.wrong && b.wrong;
  PatternUnifier u;
  return u.unify(rename(a.pattern, "l:"), rename(b.pattern, "r:"));
}

std::string to_string(const DomainTag& tag) {
  return tag.wrong ? "Wrong" : to_string(tag.pattern);
}

std::string to_string(const Value& value) {
  switch (value.kind()) {
    case Value::Kind::kInt:
    case Value::Kind::kFloat:
    case Value::Kind::kBool:
    case Value::Kind::kWrong:
    case Value::Kind::kNil:
      return value.label();
    case Value::Kind::kString:
      return to_string(Term::constant(value.label(), LiteralKind::kString));
    case Value::Kind::kAtom:
      return quote_atom(value.label());
    case Value::Kind::kCons: {
      std::string out = "[";
      Value cur = value;
      bool first = true;
      while (cur.kind() == Value::Kind::kCons) {
        if (!first) out += ", ";
        first = false;
        out += to_string(cur.children()[0]);
        cur = cur.children()[1];
      }
      if (cur.kind() != Value::Kind::kNil) out += " | " + to_string(cur);
      return out + "]";
    }
    case Value::Kind::kTree: {
      std::string out = quote_atom(value.label());
      if (value.children().empty()) return out;
      out += "(";
      for (std::size_t i = 0; i < value.children().size(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(value.children()[i]);
      }
      return out + ")";
    }
  }
  return "?";
}

Value eval(const Term& term, const GroundState& state, const TypeDefSet& defs) {
  switch (term.kind()) {
    case Term::Kind::kVar: {
      auto it = state.find(term.name());
      if (it == state.end()) throw UnboundVariable(term.name());
      return it->second;
    }
    case Term::Kind::kConst:
      switch (term.literal_kind()) {
        case LiteralKind::kInt:
          return Value::integer(term.name());
        case LiteralKind::kFloat:
          return Value::floating(term.name());
        case LiteralKind::kString:
          return Value::string(term.name());
        case LiteralKind::kAtom:
          return Value::constant(term.name(), defs);
      }
      break;
    case Term::Kind::kCompound: {
      std::vector<Value> children;
      children.reserve(term.arity());
      for (const auto& a : term.args()) children.push_back(eval(a, state, defs));
      return Value::apply(term.name(), std::move(children), defs);
    }
  }
  return Value::wrong();
}

const DomainTag& dom(const Value& value) { return value.domain(); }

Value eq_values(const Value& a, const Value& b) {
  if (a.is_wrong() || b.is_wrong()) return Value::wrong();
  if (!intersects(a.domain(), b.domain())) return Value::wrong();
  return Value::boolean(a == b);
}

namespace {

bool member_children(const Value& value, const std::vector<TypeExpr>& types,
                     const TypeDefSet& defs) {
  if (value.children().size() != types.size()) return false;
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (!member(value.children()[i], types[i], defs)) return false;
  }
  return true;
}

bool is_structure(const Value& v) {
  return v.kind() == Value::Kind::kTree || v.kind() == Value::Kind::kNil ||
         v.kind() == Value::Kind::kCons;
}

}  // namespace

bool member(const Value& value, const TypeExpr& type, const TypeDefSet& defs) {
  if (!type.is_ground()) throw NonGroundType(to_string(type));
  if (value.is_wrong()) return false;
  switch (type.kind()) {
    case TypeExpr::Kind::kVar:
      break;
    case TypeExpr::Kind::kBase:
      return value.kind() == leaf_kind_of(type.base_type());
    case TypeExpr::Kind::kBool:
      return value.kind() == Value::Kind::kBool;
    case TypeExpr::Kind::kCtor:
      return is_structure(value) && value.label() == type.name() &&
             member_children(value, type.args(), defs);
    case TypeExpr::Kind::kSym: {
      if (!is_structure(value)) return false;
      if (is_implicit_type_symbol(type.name())) {
        return value.kind() == Value::Kind::kTree &&
               implicit_type_symbol(value.label()) == type.name() &&
               member_children(value, type.args(), defs);
      }
      const TypeDef* def = defs.find(type.name());
      if (def == nullptr || def->params.size() != type.arity()) return false;
      TypeSubst params;
      for (std::size_t i = 0; i < def->params.size(); ++i) {
        params.emplace(def->params[i], type.args()[i]);
      }
      for (const auto& summand : def->summands) {
        if (summand.name() == value.label() &&
            summand.arity() == value.children().size()) {
          return member_children(value, apply_type_subst(params, summand).args(),
                                 defs);
        }
      }
      return false;
    }
  }
  return false;
}

Alphabet Alphabet::from(const SignatureEnv& sig, const LiteralPool& pool) {
  Alphabet out;
  for (const auto& i : pool.ints) {
    out.constants.push_back(Term::constant(i, LiteralKind::kInt));
  }
  for (const auto& f : pool.floats) {
    out.constants.push_back(Term::constant(f, LiteralKind::kFloat));
  }
  for (const auto& s : pool.strings) {
    out.constants.push_back(Term::constant(s, LiteralKind::kString));
  }
  for (const auto& [name, scheme] : sig.constants()) {
    out.constants.push_back(Term::atom(name));
  }
  for (const auto& [key, scheme] : sig.functions()) out.functors.push_back(key);
  return out;
}

std::vector<Term> enumerate_ground_terms(const Alphabet& alphabet, int depth,
                                         std::size_t cap) {
  auto over = [&](std::size_t n) {
    if (n > cap) {
      throw BudgetExceeded("ground term space exceeds " + std::to_string(cap) +
                           " terms");
    }
  };
  over(alphabet.constants.size());
  std::vector<Term> level = alphabet.constants;
  for (int d = 1; d <= depth; ++d) {
    // Count first so an oversized level is refused before it is built.
    long double total = static_cast<long double>(alphabet.constants.size());
    for (const auto& [name, arity] : alphabet.functors) {
      long double n = 1;
      for (std::size_t i = 0; i < arity; ++i) n *= level.size();
      total += n;
    }
    if (total > static_cast<long double>(cap)) over(cap + 1);

    std::vector<Term> next = alphabet.constants;
    next.reserve(static_cast<std::size_t>(total));
    for (const auto& [name, arity] : alphabet.functors) {
      if (level.empty()) break;
      std::vector<std::size_t> index(arity, 0);
      for (;;) {
        std::vector<Term> args;
        args.reserve(arity);
        for (std::size_t i : index) args.push_back(level[i]);
        next.push_back(Term::compound(name, std::move(args)));
        std::size_t k = arity;
        while (k > 0 && ++index[k - 1] == level.size()) index[--k] = 0;
        if (k == 0) break;
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace regunify
