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

#ifndef REGUNIFY_TSLD_H_
#define REGUNIFY_TSLD_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "regunify/constraints.h"
#include "regunify/program.h"
#include "regunify/solver.h"
#include "regunify/term.h"
#include "regunify/type_env.h"
#include "regunify/type_expr.h"

namespace regunify {

enum class Verdict { kYes, kNoFalse, kNoWrong, kNoUnknown };

// "yes", "no(false)", "no(wrong)" or "no(?)".
std::string_view to_string(Verdict verdict);

// How one branch of the tree ended.
enum class BranchEnd { kWrong, kFalseFinal, kFalseWithRemaining, kCut };

std::string_view to_string(BranchEnd end);

struct ResolutionBudget {
  std::size_t max_depth = 256;
  // Attempted unifications.
  std::size_t max_steps = 100000;
};

struct ResolutionEvent {
  std::size_t depth;
  Term goal;
  // Index of the clause tried, or -1 for an equation goal or a goal no
  // clause head matches.
  int clause;
  SolveOutcome outcome;
  // Set when this event ends the branch.
  std::optional<BranchEnd> end;
};

std::string to_string(const ResolutionEvent& event);

struct Outcome {
  Verdict verdict = Verdict::kNoUnknown;
  // For yes: bindings of the query variables.
  Subst theta;
  // For yes: inferred types of the query variables.
  Context types;
  bool budget_exceeded = false;
  std::size_t steps = 0;
  std::vector<BranchEnd> branches;
  std::vector<ResolutionEvent> trace;
};

// Renames every variable of clause apart using fresh names.
Clause rename_clause(const Clause& clause, FreshSupply& fresh);

Outcome resolve(const std::vector<Clause>& program,
                const std::vector<Term>& query, const SignatureEnv& sig,
                const ResolutionBudget& budget = {}, bool trace = false);

// Yes if any branch succeeded, else no(wrong) if any branch ended wrong, else
// no(false) if every branch ended false on its last goal, else no(?).
Verdict aggregate(const std::vector<BranchEnd>& branches, bool succeeded,
                  bool budget_exceeded);

}  // namespace regunify

#endif  // REGUNIFY_TSLD_H_
