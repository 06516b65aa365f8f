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

#include "regunify/type_env.h"

#include <algorithm>
#include <utility>

#include "regunify/print.h"

namespace regunify {

namespace {

bool is_reserved_head(std::string_view name) {
  return base_type_from_name(name).has_value() || name == "bool" ||
         is_implicit_type_symbol(name);
}

TypeDef builtin_list_def() {
  TypeDef def;
  def.head = std::string(kListSymbol);
  def.params = {"A"};
  TypeExpr a = TypeExpr::var("A");
  def.summands = {TypeExpr::ctor(std::string(kNilSymbol)),
                  TypeExpr::ctor(std::string(kConsSymbol),
                                 {a, TypeExpr::list(a)})};
  def.span.file = "<builtin>";
  return def;
}

// Summands are a set, so compare them order-insensitively after renaming
// the parameters positionally.
bool same_definition(const TypeDef& a, const TypeDef& b) {
  if (a.head != b.head || a.params.size() != b.params.size() ||
      a.summands.size() != b.summands.size()) {
    return false;
  }
  TypeSubst rename;
  for (std::size_t i = 0; i < a.params.size(); ++i) {
    rename.emplace(b.params[i], TypeExpr::var(a.params[i]));
  }
  for (const auto& s : b.summands) {
    TypeExpr renamed = apply_type_subst(rename, s);
    if (std::find(a.summands.begin(), a.summands.end(), renamed) ==
        a.summands.end()) {
      return false;
    }
  }
  return true;
}

}  // namespace

TypeExpr TypeDef::head_type() const {
  std::vector<TypeExpr> args;
  for (const auto& p : params) args.push_back(TypeExpr::var(p));
  return TypeExpr::sym(head, std::move(args));
}

std::string_view to_string(ValidationErrorKind kind) {
  switch (kind) {
    case ValidationErrorKind::kDuplicateConstructor:
      return "DuplicateConstructor";
    case ValidationErrorKind::kUnboundTypeVar:
      return "UnboundTypeVar";
    case ValidationErrorKind::kUnusedParam:
      return "UnusedParam";
    case ValidationErrorKind::kDuplicateParam:
      return "DuplicateParam";
    case ValidationErrorKind::kIllegalSummand:
      return "IllegalSummand";
    case ValidationErrorKind::kDuplicateTypeSymbol:
      return "DuplicateTypeSymbol";
    case ValidationErrorKind::kUnknownTypeSymbol:
      return "UnknownTypeSymbol";
    case ValidationErrorKind::kArityMismatch:
      return "ArityMismatch";
    case ValidationErrorKind::kReservedName:
      return "ReservedName";
  }
  return "?";
}

std::variant<TypeDefSet, std::vector<ValidationError>> TypeDefSet::validate(
    std::vector<TypeDef> defs) {
  std::vector<ValidationError> errors;
  auto fail = [&](ValidationErrorKind kind, std::string message,
                  const SourceSpan& span) {
    errors.push_back({kind, std::move(message), span});
  };

  TypeDefSet out;
  const TypeDef list_def = builtin_list_def();
  out.defs_.emplace(list_def.head, list_def);

  // Heads first, so summands may refer to definitions further down.
  for (auto& def : defs) {
    if (is_reserved_head(def.head)) {
      fail(ValidationErrorKind::kReservedName,
           "'" + def.head + "' cannot be defined as a type symbol", def.span);
      continue;
    }
    if (def.head == kListSymbol) {
      if (!same_definition(list_def, def)) {
        fail(ValidationErrorKind::kDuplicateTypeSymbol,
             "list may only be redefined as list(A) --> [] + cons(A, list(A))",
             def.span);
      }
      continue;
    }
    if (!out.defs_.emplace(def.head, def).second) {
      fail(ValidationErrorKind::kDuplicateTypeSymbol,
           "type symbol '" + def.head + "' is defined more than once",
           def.span);
    }
  }

  std::map<std::string, std::string, std::less<>> owner;
  for (const auto& [head, def] : out.defs_) {
    std::set<std::string> params;
    for (const auto& p : def.params) {
      if (!params.insert(p).second) {
        fail(ValidationErrorKind::kDuplicateParam,
             "parameter " + p + " of '" + head + "' is not distinct", def.span);
      }
    }
    std::set<std::string> used;
    for (const auto& summand : def.summands) {
      if (summand.kind() != TypeExpr::Kind::kCtor) {
        fail(ValidationErrorKind::kIllegalSummand,
             "summand " + to_string(summand) + " of '" + head +
                 "' is not a constructor term",
             def.span);
        continue;
      }
      auto [it, inserted] = owner.emplace(summand.name(), head);
      if (!inserted) {
        fail(ValidationErrorKind::kDuplicateConstructor,
             "constructor '" + summand.name() + "' occurs in both '" +
                 it->second + "' and '" + head + "'",
             def.span);
      }
      for (const auto& arg : summand.args()) {
        std::vector<TypeExpr> stack = {arg};
        while (!stack.empty()) {
          TypeExpr t = stack.back();
          stack.pop_back();
          switch (t.kind()) {
            case TypeExpr::Kind::kVar:
              used.insert(t.name());
              if (!params.contains(t.name())) {
                fail(ValidationErrorKind::kUnboundTypeVar,
                     "type variable " + t.name() + " in '" + head +
                         "' is not a parameter",
                     def.span);
              }
              break;
            case TypeExpr::Kind::kBase:
              break;
            case TypeExpr::Kind::kBool:
            case TypeExpr::Kind::kCtor:
              fail(ValidationErrorKind::kIllegalSummand,
                   "argument " + to_string(t) + " in summand " +
                       to_string(summand) + " must be a type",
                   def.span);
              break;
            case TypeExpr::Kind::kSym: {
              if (!is_implicit_type_symbol(t.name())) {
                auto d = out.defs_.find(t.name());
                if (d == out.defs_.end()) {
                  fail(ValidationErrorKind::kUnknownTypeSymbol,
                       "unknown type symbol '" + t.name() + "' in '" + head +
                           "'",
                       def.span);
                } else if (d->second.params.size() != t.arity()) {
                  fail(ValidationErrorKind::kArityMismatch,
                       "type symbol '" + t.name() + "' expects " +
                           std::to_string(d->second.params.size()) +
                           " arguments",
                       def.span);
                }
              }
              for (const auto& a : t.args()) stack.push_back(a);
              break;
            }
          }
        }
      }
    }
    for (const auto& p : def.params) {
      if (!used.contains(p)) {
        fail(ValidationErrorKind::kUnusedParam,
             "parameter " + p + " of '" + head + "' does not occur in any summand",
             def.span);
      }
    }
  }

  if (!errors.empty()) return errors;
  out.index();
  return out;
}

void TypeDefSet::index() {
  constructors_.clear();
  for (const auto& [head, def] : defs_) {
    for (std::size_t i = 0; i < def.summands.size(); ++i) {
      constructors_.emplace(def.summands[i].name(), std::make_pair(head, i));
    }
  }
}

const TypeDefSet& TypeDefSet::builtin() {
  static const TypeDefSet kBuiltin = std::get<TypeDefSet>(validate({}));
  return kBuiltin;
}

const TypeDef* TypeDefSet::find(std::string_view head) const {
  auto it = defs_.find(head);
  return it == defs_.end() ? nullptr : &it->second;
}

std::optional<TypeDefSet::Constructor> TypeDefSet::find_constructor(
    std::string_view name) const {
  auto it = constructors_.find(name);
  if (it == constructors_.end()) return std::nullopt;
  return Constructor{&defs_.find(it->second.first)->second, it->second.second};
}

std::optional<std::string> TypeDefSet::check_type(const TypeExpr& type) const {
  switch (type.kind()) {
    case TypeExpr::Kind::kVar:
    case TypeExpr::Kind::kBase:
    case TypeExpr::Kind::kBool:
      return std::nullopt;
    case TypeExpr::Kind::kCtor:
      return "constructor term " + to_string(type) + " is not a type";
    case TypeExpr::Kind::kSym:
      if (!is_implicit_type_symbol(type.name())) {
        const TypeDef* def = find(type.name());
        if (def == nullptr) return "unknown type symbol '" + type.name() + "'";
        if (def->params.size() != type.arity()) {
          return "type symbol '" + type.name() + "' expects " +
                 std::to_string(def->params.size()) + " arguments";
        }
      }
      for (const auto& a : type.args()) {
        if (auto err = check_type(a)) return err;
      }
      return std::nullopt;
  }
  return std::nullopt;
}

bool alpha_equivalent(const TypeScheme& a, const TypeScheme& b) {
  if (a.is_function() != b.is_function()) return false;
  std::map<std::string, std::string> forward;
  std::map<std::string, std::string> backward;
  auto walk = [&](auto&& self, const TypeExpr& x, const TypeExpr& y) -> bool {
    if (x.is_var() || y.is_var()) {
      if (!x.is_var() || !y.is_var()) return false;
      auto [f, fi] = forward.emplace(x.name(), y.name());
      auto [g, gi] = backward.emplace(y.name(), x.name());
      return f->second == y.name() && g->second == x.name();
    }
    if (!x.same_head(y)) return false;
    for (std::size_t i = 0; i < x.arity(); ++i) {
      if (!self(self, x.args()[i], y.args()[i])) return false;
    }
    return true;
  };
  if (!a.is_function()) return walk(walk, a.type(), b.type());
  const FuncType& fa = a.func();
  const FuncType& fb = b.func();
  if (fa.domain.size() != fb.domain.size()) return false;
  for (std::size_t i = 0; i < fa.domain.size(); ++i) {
    if (!walk(walk, fa.domain[i], fb.domain[i])) return false;
  }
  return walk(walk, fa.codomain, fb.codomain);
}

SignatureEnv derive_signatures(const TypeDefSet& defs,
                               const std::vector<SignatureDecl>& overrides) {
  SignatureEnv env;
  env.defs_ = std::make_shared<const TypeDefSet>(defs);

  for (const auto& [head, def] : env.defs_->defs()) {
    const TypeExpr codomain = def.head_type();
    for (const auto& summand : def.summands) {
      if (summand.arity() == 0) {
        env.constants_.emplace(summand.name(), TypeScheme::generalize(codomain));
      } else {
        env.functions_.emplace(
            std::make_pair(summand.name(), summand.arity()),
            TypeScheme::generalize(FuncType{summand.args(), codomain}));
      }
      env.declared_arities_[summand.name()].insert(summand.arity());
    }
  }

  for (const auto& decl : overrides) {
    if (decl.name_kind != LiteralKind::kAtom) {
      throw SignatureError(SignatureError::Kind::kLiteralOverride,
                           "literal '" + decl.name +
                               "' has a fixed type and cannot be redeclared",
                           decl.span);
    }
    std::vector<TypeExpr> parts;
    if (decl.scheme.is_function()) {
      parts = decl.scheme.func().domain;
      parts.push_back(decl.scheme.func().codomain);
    } else {
      parts.push_back(decl.scheme.type());
    }
    for (const auto& p : parts) {
      if (auto err = defs.check_type(p)) {
        throw SignatureError(SignatureError::Kind::kBadType,
                             "in signature of '" + decl.name + "': " + *err,
                             decl.span);
      }
    }
    if (!decl.scheme.is_function() &&
        decl.scheme.type().kind() == TypeExpr::Kind::kBool) {
      throw SignatureError(SignatureError::Kind::kBadType,
                           "constant '" + decl.name + "' cannot have type bool",
                           decl.span);
    }

    if (decl.is_predicate()) {
      env.predicates_[{decl.name, decl.arity()}] = decl.scheme;
      continue;
    }
    if (auto ctor = defs.find_constructor(decl.name)) {
      const std::size_t arity = ctor->type().arity();
      TypeScheme derived =
          arity == 0 ? env.constants_.at(decl.name)
                     : env.functions_.at(std::make_pair(decl.name, arity));
      if (arity != decl.arity()) {
        throw SignatureError(
            SignatureError::Kind::kConflictingOverride,
            "'" + decl.name + "' is a constructor of " + ctor->def->head +
                " with arity " + std::to_string(arity) + ", not " +
                std::to_string(decl.arity()),
            decl.span);
      }
      if (!alpha_equivalent(derived, decl.scheme)) {
        throw SignatureError(SignatureError::Kind::kConflictingOverride,
                             "'" + decl.name + "' is a constructor with type " +
                                 to_string(derived),
                             decl.span);
      }
      continue;
    }
    if (decl.arity() == 0) {
      env.constants_[decl.name] = decl.scheme;
    } else {
      env.functions_[{decl.name, decl.arity()}] = decl.scheme;
    }
    env.declared_arities_[decl.name].insert(decl.arity());
  }
  return env;
}

void SignatureEnv::check_declared_arity(std::string_view name,
                                        std::size_t arity) const {
  auto it = declared_arities_.find(name);
  if (it != declared_arities_.end() && !it->second.contains(arity)) {
    throw TypingError(TypingError::Kind::kArityMismatch,
                      "'" + std::string(name) + "' is declared with arity " +
                          std::to_string(*it->second.begin()) + ", used with " +
                          std::to_string(arity));
  }
}

TypeScheme SignatureEnv::constant(const Term& constant) const {
  switch (constant.literal_kind()) {
    case LiteralKind::kInt:
      return TypeScheme{{}, TypeExpr::base(BaseType::kInt)};
    case LiteralKind::kFloat:
      return TypeScheme{{}, TypeExpr::base(BaseType::kFloat)};
    case LiteralKind::kString:
      return TypeScheme{{}, TypeExpr::base(BaseType::kString)};
    case LiteralKind::kAtom:
      break;
  }
  auto it = constants_.find(constant.name());
  if (it != constants_.end()) return it->second;
  check_declared_arity(constant.name(), 0);
  if (!defaults_enabled_) {
    throw TypingError(TypingError::Kind::kUnknownSymbol,
                      "no type for constant '" + constant.name() + "'");
  }
  return TypeScheme{{}, TypeExpr::base(BaseType::kAtom)};
}

namespace {

// forall A1..An. A1 x ... x An -> make_codomain(A1..An)
template <typename MakeCodomain>
TypeScheme generic_scheme(std::size_t arity, MakeCodomain make_codomain) {
  std::vector<TypeExpr> domain;
  std::vector<std::string> generics;
  for (std::size_t i = 1; i <= arity; ++i) {
    generics.push_back("A" + std::to_string(i));
    domain.push_back(TypeExpr::var(generics.back()));
  }
  TypeExpr codomain = make_codomain(domain);
  return TypeScheme{std::move(generics),
                    FuncType{std::move(domain), std::move(codomain)}};
}

}  // namespace

TypeScheme SignatureEnv::function(std::string_view functor,
                                  std::size_t arity) const {
  auto it = functions_.find(std::make_pair(std::string(functor), arity));
  if (it != functions_.end()) return it->second;
  check_declared_arity(functor, arity);
  if (!defaults_enabled_) {
    throw TypingError(TypingError::Kind::kUnknownSymbol,
                      "no type for function symbol '" + std::string(functor) +
                          "/" + std::to_string(arity) + "'");
  }
  return generic_scheme(arity, [&](std::vector<TypeExpr> args) {
    return TypeExpr::sym(implicit_type_symbol(functor), std::move(args));
  });
}

TypeScheme SignatureEnv::predicate(std::string_view name,
                                   std::size_t arity) const {
  auto it = predicates_.find(std::make_pair(std::string(name), arity));
  if (it != predicates_.end()) return it->second;
  if (!defaults_enabled_) {
    throw TypingError(TypingError::Kind::kUnknownSymbol,
                      "no type for predicate '" + std::string(name) + "/" +
                          std::to_string(arity) + "'");
  }
  if (arity == 0) return TypeScheme{{}, TypeExpr::boolean()};
  return generic_scheme(arity,
                        [](const std::vector<TypeExpr>&) { return TypeExpr::boolean(); });
}

}  // namespace regunify
