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

#include "regunify/type_expr.h"

#include <algorithm>
#include <utility>

namespace regunify {

namespace {

constexpr std::string_view kBaseNames[] = {"int", "float", "string", "atom"};
const std::string kBoolName = "bool";

}  // namespace

std::string_view base_type_name(BaseType base) {
  return kBaseNames[static_cast<int>(base)];
}

std::optional<BaseType> base_type_from_name(std::string_view name) {
  for (int i = 0; i < 4; ++i) {
    if (kBaseNames[i] == name) return static_cast<BaseType>(i);
  }
  return std::nullopt;
}

std::string implicit_type_symbol(std::string_view functor) {
  return std::string(functor) + "'";
}

bool is_implicit_type_symbol(std::string_view name) {
  return name.size() > 1 && name.back() == '\'';
}

struct TypeExpr::Rep {
  Kind kind;
  std::string name;
  BaseType base = BaseType::kInt;
  std::vector<TypeExpr> args;
  std::size_t size = 1;
  bool ground = true;
};

TypeExpr TypeExpr::var(std::string name) {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::kVar;
  rep->name = std::move(name);
  rep->ground = false;
  return TypeExpr(std::move(rep));
}

TypeExpr TypeExpr::base(BaseType base) {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::kBase;
  rep->name = std::string(base_type_name(base));
  rep->base = base;
  return TypeExpr(std::move(rep));
}

TypeExpr TypeExpr::boolean() {
  static const TypeExpr kBool = [] {
    auto rep = std::make_shared<Rep>();
    rep->kind = Kind::kBool;
    rep->name = kBoolName;
    return TypeExpr(std::move(rep));
  }();
  return kBool;
}

namespace {

template <typename Rep>
void fill_args(Rep& rep, std::vector<TypeExpr> args) {
  for (const auto& a : args) {
    rep.size += a.size();
    rep.ground = rep.ground && a.is_ground();
  }
  rep.args = std::move(args);
}

}  // namespace

TypeExpr TypeExpr::sym(std::string name, std::vector<TypeExpr> args) {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::kSym;
  rep->name = std::move(name);
  fill_args(*rep, std::move(args));
  return TypeExpr(std::move(rep));
}

TypeExpr TypeExpr::ctor(std::string name, std::vector<TypeExpr> args) {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::kCtor;
  rep->name = std::move(name);
  fill_args(*rep, std::move(args));
  return TypeExpr(std::move(rep));
}

TypeExpr::Kind TypeExpr::kind() const { return rep_->kind; }
const std::string& TypeExpr::name() const { return rep_->name; }
BaseType TypeExpr::base_type() const { return rep_->base; }
const std::vector<TypeExpr>& TypeExpr::args() const { return rep_->args; }
std::size_t TypeExpr::size() const { return rep_->size; }
bool TypeExpr::is_ground() const { return rep_->ground; }

bool TypeExpr::same_head(const TypeExpr& other) const {
  if (is_var() || other.is_var()) return false;
  return kind() == other.kind() && name() == other.name() &&
         arity() == other.arity();
}

bool operator==(const TypeExpr& a, const TypeExpr& b) {
  if (a.rep_ == b.rep_) return true;
  if (a.kind() != b.kind() || a.name() != b.name()) return false;
  return a.size() == b.size() && a.args() == b.args();
}

TypeExpr apply_type_subst(const TypeSubst& subst, const TypeExpr& type) {
  if (subst.empty() || type.is_ground()) return type;
  if (type.is_var()) {
    auto it = subst.find(type.name());
    return it == subst.end() ? type : it->second;
  }
  std::vector<TypeExpr> args;
  args.reserve(type.arity());
  bool changed = false;
  for (const auto& a : type.args()) {
    args.push_back(apply_type_subst(subst, a));
    changed = changed || args.back() != a;
  }
  if (!changed) return type;
  return type.kind() == TypeExpr::Kind::kSym
             ? TypeExpr::sym(type.name(), std::move(args))
             : TypeExpr::ctor(type.name(), std::move(args));
}

FuncType apply_type_subst(const TypeSubst& subst, const FuncType& type) {
  FuncType out{{}, apply_type_subst(subst, type.codomain)};
  out.domain.reserve(type.domain.size());
  for (const auto& d : type.domain) {
    out.domain.push_back(apply_type_subst(subst, d));
  }
  return out;
}

bool occurs_in(std::string_view var, const TypeExpr& type) {
  if (type.is_ground()) return false;
  if (type.is_var()) return type.name() == var;
  return std::any_of(type.args().begin(), type.args().end(),
                     [&](const TypeExpr& a) { return occurs_in(var, a); });
}

void collect_vars(const TypeExpr& type, std::vector<std::string>& out) {
  if (type.is_ground()) return;
  if (type.is_var()) {
    if (std::find(out.begin(), out.end(), type.name()) == out.end()) {
      out.push_back(type.name());
    }
    return;
  }
  for (const auto& a : type.args()) collect_vars(a, out);
}

void collect_vars(const FuncType& type, std::vector<std::string>& out) {
  for (const auto& d : type.domain) collect_vars(d, out);
  collect_vars(type.codomain, out);
}

std::set<std::string> free_vars(const TypeExpr& type) {
  std::vector<std::string> names;
  collect_vars(type, names);
  return {names.begin(), names.end()};
}

TypeSubst compose(const TypeSubst& first, const TypeSubst& second) {
  TypeSubst out;
  for (const auto& [name, value] : first) {
    TypeExpr t = apply_type_subst(second, value);
    if (!(t.is_var() && t.name() == name)) out.emplace(name, std::move(t));
  }
  for (const auto& [name, value] : second) {
    if (!first.contains(name)) out.emplace(name, value);
  }
  return out;
}

TypeScheme TypeScheme::generalize(std::variant<TypeExpr, FuncType> body) {
  TypeScheme scheme{{}, std::move(body)};
  std::visit([&](const auto& b) { collect_vars(b, scheme.generics); },
             scheme.body);
  return scheme;
}

std::string FreshSupply::next() {
  for (;;) {
    std::string name = prefix_ + std::to_string(++counter_);
    if (!reserved_.contains(name)) return name;
  }
}

std::variant<TypeExpr, FuncType> instantiate(const TypeScheme& scheme,
                                             FreshSupply& fresh) {
  if (scheme.generics.empty()) return scheme.body;
  TypeSubst renaming;
  for (const auto& g : scheme.generics) {
    renaming.emplace(g, TypeExpr::var(fresh.next()));
  }
  return std::visit(
      [&](const auto& b) -> std::variant<TypeExpr, FuncType> {
        return apply_type_subst(renaming, b);
      },
      scheme.body);
}

}  // namespace regunify
