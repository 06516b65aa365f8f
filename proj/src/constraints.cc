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

#include "regunify/constraints.h"

#include <stdexcept>
#include <utility>

#include "regunify/print.h"

namespace regunify {

std::string context_type_var(const std::string& name) { return "A_" + name; }

void extend_generic_context(Context& context, const Term& term) {
  std::vector<std::string> vars;
  collect_vars(term, vars);
  for (const auto& v : vars) {
    context.emplace(v, TypeExpr::var(context_type_var(v)));
  }
}

Context generic_context(const std::vector<Term>& terms) {
  Context context;
  for (const auto& t : terms) extend_generic_context(context, t);
  return context;
}

namespace {

void append(std::vector<TypeConstraint>& out,
            const std::vector<TypeConstraint>& more) {
  out.insert(out.end(), more.begin(), more.end());
}

Generated gen_application(const Context& context, const SignatureEnv& sig,
                          const FuncType& signature, const Term& term,
                          FreshSupply& fresh) {
  Generated out{signature.codomain, {}};
  std::vector<TypeExpr> arg_types;
  arg_types.reserve(term.arity());
  for (const auto& arg : term.args()) {
    Generated g = gen_term(context, sig, arg, fresh);
    append(out.constraints.types, g.constraints.types);
    arg_types.push_back(std::move(g.type));
  }
  for (std::size_t i = 0; i < arg_types.size(); ++i) {
    out.constraints.types.push_back({arg_types[i], signature.domain[i]});
  }
  return out;
}

}  // namespace

Generated gen_term(const Context& context, const SignatureEnv& sig,
                   const Term& term, FreshSupply& fresh) {
  switch (term.kind()) {
    case Term::Kind::kVar: {
      auto it = context.find(term.name());
      if (it == context.end()) {
        throw std::invalid_argument("variable " + term.name() +
                                    " is not in the context");
      }
      return {it->second, {}};
    }
    case Term::Kind::kConst:
      return {std::get<TypeExpr>(instantiate(sig.constant(term), fresh)), {}};
    case Term::Kind::kCompound: {
      FuncType f = std::get<FuncType>(
          instantiate(sig.function(term.name(), term.arity()), fresh));
      return gen_application(context, sig, f, term, fresh);
    }
  }
  throw std::logic_error("unreachable");
}

Generated gen_equation(const Context& context, const SignatureEnv& sig,
                       const Term& lhs, const Term& rhs, FreshSupply& fresh) {
  Generated left = gen_term(context, sig, lhs, fresh);
  Generated right = gen_term(context, sig, rhs, fresh);
  Generated out{TypeExpr::boolean(), {}};
  out.constraints.terms = left.constraints.terms;
  out.constraints.terms.insert(out.constraints.terms.end(),
                               right.constraints.terms.begin(),
                               right.constraints.terms.end());
  out.constraints.terms.push_back({lhs, rhs});
  out.constraints.types = std::move(left.constraints.types);
  append(out.constraints.types, right.constraints.types);
  out.constraints.types.push_back({left.type, right.type});
  return out;
}

Generated gen_atom(const Context& context, const SignatureEnv& sig,
                   const Term& atom, FreshSupply& fresh) {
  if (atom.is_var()) {
    throw std::invalid_argument("a goal must be an atom, not a variable");
  }
  if (atom.is_compound() && atom.name() == "=" && atom.arity() == 2) {
    return gen_equation(context, sig, atom.args()[0], atom.args()[1], fresh);
  }
  const auto& scheme = sig.predicate(atom.name(), atom.arity());
  if (!atom.is_compound()) {
    return {scheme.is_function() ? scheme.func().codomain : scheme.type(), {}};
  }
  FuncType p = std::get<FuncType>(instantiate(scheme, fresh));
  return gen_application(context, sig, p, atom, fresh);
}

Generated gen_atom_equation(const Context& context, const SignatureEnv& sig,
                            const Term& goal, const Term& head,
                            FreshSupply& fresh) {
  if (goal.kind() != head.kind() || goal.name() != head.name() ||
      goal.arity() != head.arity() || goal.is_var()) {
    throw std::invalid_argument("atoms of different predicates");
  }
  Generated out{TypeExpr::boolean(), {}};
  out.constraints.terms.push_back({goal, head});
  if (!goal.is_compound()) return out;
  FuncType p = std::get<FuncType>(
      instantiate(sig.predicate(goal.name(), goal.arity()), fresh));
  for (const Term* atom : {&goal, &head}) {
    Generated g = gen_application(context, sig, p, *atom, fresh);
    append(out.constraints.types, g.constraints.types);
  }
  return out;
}

std::string to_string(const TermConstraint& c) {
  return to_string(c.lhs) + " = " + to_string(c.rhs);
}

std::string to_string(const TypeConstraint& c) {
  return to_string(c.lhs) + " = " + to_string(c.rhs);
}

std::string to_string(const ConstraintState& state) {
  std::string out = "({";
  for (std::size_t i = 0; i < state.terms.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(state.terms[i]);
  }
  out += "}, {";
  for (std::size_t i = 0; i < state.types.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(state.types[i]);
  }
  return out + "})";
}

std::string context_to_string(const Context& context) {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, type] : context) {
    if (!first) out += ", ";
    first = false;
    out += name + " : " + to_string(type);
  }
  return out + "}";
}

}  // namespace regunify
