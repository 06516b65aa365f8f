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

#ifndef REGUNIFY_CONSTRAINTS_H_
#define REGUNIFY_CONSTRAINTS_H_

#include <map>
#include <string>
#include <vector>

#include "regunify/term.h"
#include "regunify/type_env.h"
#include "regunify/type_expr.h"

namespace regunify {

// Typing assumptions for term variables.
using Context = std::map<std::string, TypeExpr>;

struct TermConstraint {
  Term lhs;
  Term rhs;
  friend bool operator==(const TermConstraint&, const TermConstraint&) = default;
};

struct TypeConstraint {
  TypeExpr lhs;
  TypeExpr rhs;
  friend bool operator==(const TypeConstraint&, const TypeConstraint&) = default;
};

// Ordered multisets, kept in generation order.
struct ConstraintState {
  std::vector<TermConstraint> terms;
  std::vector<TypeConstraint> types;
  friend bool operator==(const ConstraintState&,
                         const ConstraintState&) = default;
};

struct Generated {
  TypeExpr type = TypeExpr::boolean();
  ConstraintState constraints;
};

// Type variable assigned to term variable name by generic contexts.
std::string context_type_var(const std::string& name);

Context generic_context(const std::vector<Term>& terms);
// Adds bindings for the variables of term that context lacks.
void extend_generic_context(Context& context, const Term& term);

Generated gen_term(const Context& context, const SignatureEnv& sig,
                   const Term& term, FreshSupply& fresh);
// t1 = t2 : bool.
Generated gen_equation(const Context& context, const SignatureEnv& sig,
                       const Term& lhs, const Term& rhs, FreshSupply& fresh);
// A goal atom p(t1..tn) typed with the predicate scheme of p, or an
// equation goal.
Generated gen_atom(const Context& context, const SignatureEnv& sig,
                   const Term& atom, FreshSupply& fresh);

// goal = head for two atoms of one predicate. Both are typed against a
// single instance of the predicate scheme, so the i-th arguments of goal and
// head get the same type.
Generated gen_atom_equation(const Context& context, const SignatureEnv& sig,
                            const Term& goal, const Term& head,
                            FreshSupply& fresh);

std::string to_string(const TermConstraint& c);
std::string to_string(const TypeConstraint& c);
std::string to_string(const ConstraintState& state);
std::string context_to_string(const Context& context);

}  // namespace regunify

#endif  // REGUNIFY_CONSTRAINTS_H_
