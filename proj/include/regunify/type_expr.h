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

#ifndef REGUNIFY_TYPE_EXPR_H_
#define REGUNIFY_TYPE_EXPR_H_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace regunify {

enum class BaseType { kInt, kFloat, kString, kAtom };

std::string_view base_type_name(BaseType base);
std::optional<BaseType> base_type_from_name(std::string_view name);

// Name of the type symbol standing for the free-constructor domain of an
// undeclared functor f, written f' in the concrete syntax.
std::string implicit_type_symbol(std::string_view functor);
bool is_implicit_type_symbol(std::string_view name);

inline constexpr std::string_view kListSymbol = "list";

// Immutable type expression: a type variable, a base type, bool, a type
// symbol application such as list(int), or a constructor (type term)
// application such as cons(A, list(A)) that only occurs in definitions.
class TypeExpr {
 public:
  enum class Kind { kVar, kBase, kBool, kSym, kCtor };

  static TypeExpr var(std::string name);
  static TypeExpr base(BaseType base);
  static TypeExpr boolean();
  static TypeExpr sym(std::string name, std::vector<TypeExpr> args = {});
  static TypeExpr ctor(std::string name, std::vector<TypeExpr> args = {});
  static TypeExpr list(TypeExpr element) {
    return sym(std::string(kListSymbol), {std::move(element)});
  }

  Kind kind() const;
  bool is_var() const { return kind() == Kind::kVar; }
  // Variable name, base type name, "bool", or symbol name.
  const std::string& name() const;
  BaseType base_type() const;
  const std::vector<TypeExpr>& args() const;
  std::size_t arity() const { return args().size(); }
  std::size_t size() const;
  bool is_ground() const;

  // Rigid constructor identity: kind, name and arity all agree. Variables
  // have no head.
  bool same_head(const TypeExpr& other) const;

  friend bool operator==(const TypeExpr& a, const TypeExpr& b);
  friend bool operator!=(const TypeExpr& a, const TypeExpr& b) {
    return !(a == b);
  }

 private:
  struct Rep;
  explicit TypeExpr(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

// tau_1 x ... x tau_n -> tau, with n >= 1. The codomain may be bool.
struct FuncType {
  std::vector<TypeExpr> domain;
  TypeExpr codomain;

  friend bool operator==(const FuncType&, const FuncType&) = default;
};

// forall generics. body. The generics are the type variables of the body.
struct TypeScheme {
  std::vector<std::string> generics;
  std::variant<TypeExpr, FuncType> body = TypeExpr::boolean();

  // Quantifies every type variable of body, in order of first occurrence.
  static TypeScheme generalize(std::variant<TypeExpr, FuncType> body);

  bool is_function() const { return std::holds_alternative<FuncType>(body); }
  const TypeExpr& type() const { return std::get<TypeExpr>(body); }
  const FuncType& func() const { return std::get<FuncType>(body); }
};

using TypeSubst = std::map<std::string, TypeExpr>;

TypeExpr apply_type_subst(const TypeSubst& subst, const TypeExpr& type);
FuncType apply_type_subst(const TypeSubst& subst, const FuncType& type);
bool occurs_in(std::string_view var, const TypeExpr& type);
std::set<std::string> free_vars(const TypeExpr& type);
void collect_vars(const TypeExpr& type, std::vector<std::string>& out);
void collect_vars(const FuncType& type, std::vector<std::string>& out);

TypeSubst compose(const TypeSubst& first, const TypeSubst& second);

// Source of fresh names: prefix followed by a monotone counter. Names that
// were reserved are skipped.
class FreshSupply {
 public:
  explicit FreshSupply(std::string prefix = "_T") : prefix_(std::move(prefix)) {}

  std::string next();
  void reserve(std::string name) { reserved_.insert(std::move(name)); }
  std::size_t issued() const { return counter_; }

 private:
  std::string prefix_;
  std::size_t counter_ = 0;
  std::set<std::string> reserved_;
};

// Renames the generic variables apart.
std::variant<TypeExpr, FuncType> instantiate(const TypeScheme& scheme,
                                             FreshSupply& fresh);

}  // namespace regunify

#endif  // REGUNIFY_TYPE_EXPR_H_
