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

#ifndef REGUNIFY_SOLVER_H_
#define REGUNIFY_SOLVER_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "regunify/constraints.h"
#include "regunify/term.h"
#include "regunify/type_env.h"
#include "regunify/type_expr.h"

namespace regunify {

enum class SolveOutcome { kSolved, kFalse, kWrong, kBudgetExceeded };

std::string_view to_string(SolveOutcome outcome);

using AnyConstraint = std::variant<TermConstraint, TypeConstraint>;

std::string to_string(const AnyConstraint& constraint);

struct TraceStep {
  // 1 to 6 act on type constraints, 7 to 12 on term constraints.
  int rule;
  AnyConstraint constraint;
  // State after the rewrite. Rules 3, 6, 9 and 12 end the run and leave the
  // state as it was.
  ConstraintState state;

  bool is_failure() const {
    return rule == 3 || rule == 6 || rule == 9 || rule == 12;
  }
};

std::string to_string(const TraceStep& step);

enum class StepKind { kRewritten, kDone, kWrong, kFalse };

struct Step {
  StepKind kind;
  int rule = 0;
  std::optional<AnyConstraint> constraint;
};

// Applies the lowest-numbered applicable rule to the leftmost constraint it
// matches. The state is left untouched on kDone, kWrong and kFalse.
Step step(ConstraintState& state);

struct SolveOptions {
  bool trace = false;
  // Zero means unbounded.
  std::size_t max_steps = 0;
};

struct SolveResult {
  SolveOutcome outcome = SolveOutcome::kSolved;
  // Set for kSolved.
  Subst theta;
  // Set for kSolved and kFalse.
  TypeSubst mu;
  // The clashing or cyclic constraint for kFalse and kWrong.
  std::optional<AnyConstraint> witness;
  std::size_t steps = 0;
  ConstraintState final_state;
  std::vector<TraceStep> trace;
};

SolveResult solve(ConstraintState state, const SolveOptions& options = {});

// Total node count of all constraints.
std::size_t input_size(const ConstraintState& state);
// input_size squared times k.
std::size_t step_budget(const ConstraintState& state, std::size_t k = 64);

struct Typing {
  Context context;
  TypeExpr type;
};

std::string to_string(const Typing& typing);

// Renames type variables to A, B, C, ... in order of first occurrence,
// reading the context in variable order and then the type.
Typing canonical(const Typing& typing);

struct Unification {
  Context context;
  // Each side on its own, then the equation as a whole.
  Generated lhs;
  Generated rhs;
  ConstraintState constraints;
  SolveResult result;
  // Each variable's inferred type; empty unless solved or false.
  Context types;
};

Unification typed_unify(const Term& lhs, const Term& rhs,
                        const SignatureEnv& sig,
                        const SolveOptions& options = {});
Unification typed_unify(const Term& lhs, const Term& rhs,
                        const TypeDefSet& defs = TypeDefSet::builtin(),
                        const SolveOptions& options = {});

struct PrincipalTyping {
  Context context;
  Generated generated;
  SolveResult result;
  // Absent when the term has no typing at all.
  std::optional<Typing> typing;
};

PrincipalTyping principal_typing(const Term& term, const SignatureEnv& sig);
PrincipalTyping principal_typing(
    const Term& term, const TypeDefSet& defs = TypeDefSet::builtin());

}  // namespace regunify

#endif  // REGUNIFY_SOLVER_H_
