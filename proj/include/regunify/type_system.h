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

#ifndef REGUNIFY_TYPE_SYSTEM_H_
#define REGUNIFY_TYPE_SYSTEM_H_

#include <string>

#include "regunify/constraints.h"
#include "regunify/solver.h"
#include "regunify/term.h"
#include "regunify/type_env.h"
#include "regunify/type_expr.h"

namespace regunify {

struct CheckResult {
  bool derivable = false;
  // The first judgment that could not be derived, when not derivable.
  std::string failure;

  explicit operator bool() const { return derivable; }
};

// Decides Γ, Δ ⊢ t : τ. Type variables of the context and of type are fixed;
// only the instances of schemes taken from sig may be chosen.
CheckResult check(const Context& context, const SignatureEnv& sig,
                  const Term& term, const TypeExpr& type);
// Decides Γ, Δ ⊢ t1 = t2 : bool.
CheckResult check_equation(const Context& context, const SignatureEnv& sig,
                           const Term& lhs, const Term& rhs);

// True iff one type substitution maps principal onto candidate, context and
// type together. Both must type the same variables.
bool is_instance(const Typing& candidate, const Typing& principal);

}  // namespace regunify

#endif  // REGUNIFY_TYPE_SYSTEM_H_
