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

#include "regunify/type_system.h"

#include <map>
#include <utility>

#include "regunify/print.h"

namespace regunify {

namespace {

// Instances of schemes are written ?n; every other type variable is a fixed
// name that only equals itself.
bool flexible(const TypeExpr& t) {
  return t.is_var() && !t.name().empty() && t.name()[0] == '?';
}

class Deriver {
 public:
  Deriver(const Context& context, const SignatureEnv& sig)
      : context_(context), sig_(sig) {}

  TypeExpr fresh() { return TypeExpr::var("?" + std::to_string(++counter_)); }

  bool derive(const Term& term, const TypeExpr& type) {
    switch (term.kind()) {
      case Term::Kind::kVar: {
        auto it = context_.find(term.name());
        if (it == context_.end()) {
          return fail(term, type, term.name() + " is not in the context");
        }
        if (!unify(it->second, type)) {
          return fail(term, type,
                      "the context gives " + to_string(resolve(it->second)));
        }
        return true;
      }
      case Term::Kind::kConst: {
        TypeExpr own = std::get<TypeExpr>(instantiate(sig_.constant(term)));
        if (!unify(own, type)) {
          return fail(term, type, "its type is " + to_string(resolve(own)));
        }
        return true;
      }
      case Term::Kind::kCompound: {
        FuncType f = std::get<FuncType>(
            instantiate(sig_.function(term.name(), term.arity())));
        if (!unify(f.codomain, type)) {
          return fail(term, type,
                      "its result type is " + to_string(resolve(f.codomain)));
        }
        for (std::size_t i = 0; i < term.arity(); ++i) {
          if (!derive(term.args()[i], f.domain[i])) return false;
        }
        return true;
      }
    }
    return false;
  }

  const std::string& failure() const { return failure_; }

 private:
  std::variant<TypeExpr, FuncType> instantiate(const TypeScheme& scheme) {
    TypeSubst s;
    for (const auto& g : scheme.generics) s.emplace(g, fresh());
    return std::visit(
        [&](const auto& b) -> std::variant<TypeExpr, FuncType> {
          return apply_type_subst(s, b);
        },
        scheme.body);
  }

  bool fail(const Term& term, const TypeExpr& type, const std::string& why) {
    failure_ = "cannot derive " + to_string(term) + " : " +
               to_string(resolve(type)) + " (" + why + ")";
    return false;
  }

  TypeExpr walk(TypeExpr t) const {
    while (flexible(t)) {
      auto it = bindings_.find(t.name());
      if (it == bindings_.end()) break;
      t = it->second;
    }
    return t;
  }

  TypeExpr resolve(const TypeExpr& t) const {
    TypeExpr x = walk(t);
    if (x.arity() == 0) return x;
    std::vector<TypeExpr> args;
    for (const auto& a : x.args()) args.push_back(resolve(a));
    return x.kind() == TypeExpr::Kind::kSym ? TypeExpr::sym(x.name(), args)
                                            : TypeExpr::ctor(x.name(), args);
  }

  bool occurs(const std::string& v, const TypeExpr& t) const {
    TypeExpr x = walk(t);
    if (x.is_var()) return x.name() == v;
    for (const auto& a : x.args()) {
      if (occurs(v, a)) return true;
    }
    return false;
  }

  bool unify(const TypeExpr& a, const TypeExpr& b) {
    TypeExpr x = walk(a);
    TypeExpr y = walk(b);
    if (x.is_var() && y.is_var() && x.name() == y.name()) return true;
    if (flexible(x)) {
      if (occurs(x.name(), y)) return false;
      bindings_.emplace(x.name(), y);
      return true;
    }
    if (flexible(y)) return unify(y, x);
    if (x.is_var() || y.is_var() || !x.same_head(y)) return false;
    for (std::size_t i = 0; i < x.arity(); ++i) {
      if (!unify(x.args()[i], y.args()[i])) return false;
    }
    return true;
  }

  const Context& context_;
  const SignatureEnv& sig_;
  std::map<std::string, TypeExpr> bindings_;
  std::size_t counter_ = 0;
  std::string failure_;
};

}  // namespace

CheckResult check(const Context& context, const SignatureEnv& sig,
                  const Term& term, const TypeExpr& type) {
  Deriver d(context, sig);
  if (d.derive(term, type)) return {true, {}};
  return {false, d.failure()};
}

CheckResult check_equation(const Context& context, const SignatureEnv& sig,
                           const Term& lhs, const Term& rhs) {
  Deriver d(context, sig);
  TypeExpr shared = d.fresh();
  if (d.derive(lhs, shared) && d.derive(rhs, shared)) return {true, {}};
  return {false, d.failure()};
}

namespace {

bool match(const TypeExpr& pattern, const TypeExpr& target, TypeSubst& mu) {
  if (pattern.is_var()) {
    auto [it, inserted] = mu.emplace(pattern.name(), target);
    return inserted || it->second == target;
  }
  if (!pattern.same_head(target)) return false;
  for (std::size_t i = 0; i < pattern.arity(); ++i) {
    if (!match(pattern.args()[i], target.args()[i], mu)) return false;
  }
  return true;
}

}  // namespace

bool is_instance(const Typing& candidate, const Typing& principal) {
  if (candidate.context.size() != principal.context.size()) return false;
  TypeSubst mu;
  for (const auto& [name, type] : principal.context) {
    auto it = candidate.context.find(name);
    if (it == candidate.context.end() || !match(type, it->second, mu)) {
      return false;
    }
  }
  return match(principal.type, candidate.type, mu);
}

}  // namespace regunify
