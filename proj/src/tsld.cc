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

#include "regunify/tsld.h"

#include <algorithm>
#include <optional>
#include <utility>

#include "regunify/print.h"

namespace regunify {

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kYes:
      return "yes";
    case Verdict::kNoFalse:
      return "no(false)";
    case Verdict::kNoWrong:
      return "no(wrong)";
    case Verdict::kNoUnknown:
      return "no(?)";
  }
  return "?";
}

std::string_view to_string(BranchEnd end) {
  switch (end) {
    case BranchEnd::kWrong:
      return "wrong";
    case BranchEnd::kFalseFinal:
      return "false";
    case BranchEnd::kFalseWithRemaining:
      return "false, goals remain";
    case BranchEnd::kCut:
      return "depth limit";
  }
  return "?";
}

std::string to_string(const ResolutionEvent& event) {
  std::string out(2 * event.depth, ' ');
  out += goal_to_string(event.goal);
  if (event.clause >= 0) out += " with clause " + std::to_string(event.clause + 1);
  out += ": ";
  out += to_string(event.outcome);
  if (event.end) out += " [branch ends " + std::string(to_string(*event.end)) + "]";
  return out;
}

Clause rename_clause(const Clause& clause, FreshSupply& fresh) {
  std::vector<std::string> vars;
  collect_vars(clause.head, vars);
  for (const auto& b : clause.body) collect_vars(b, vars);
  Subst renaming;
  for (const auto& v : vars) {
    if (!renaming.contains(v)) renaming.emplace(v, Term::var(fresh.next()));
  }
  Clause out{apply_subst(renaming, clause.head), {}, clause.span};
  for (const auto& b : clause.body) out.body.push_back(apply_subst(renaming, b));
  return out;
}

Verdict aggregate(const std::vector<BranchEnd>& branches, bool succeeded,
                  bool budget_exceeded) {
  if (succeeded) return Verdict::kYes;
  if (budget_exceeded) return Verdict::kNoUnknown;
  if (std::find(branches.begin(), branches.end(), BranchEnd::kWrong) !=
      branches.end()) {
    return Verdict::kNoWrong;
  }
  if (std::all_of(branches.begin(), branches.end(),
                  [](BranchEnd e) { return e == BranchEnd::kFalseFinal; })) {
    return Verdict::kNoFalse;
  }
  return Verdict::kNoUnknown;
}

namespace {

bool is_equation(const Term& goal) {
  return goal.is_compound() && goal.name() == "=" && goal.arity() == 2;
}

bool same_predicate(const Term& goal, const Term& head) {
  return goal.kind() == head.kind() && goal.name() == head.name() &&
         goal.arity() == head.arity();
}

struct Node {
  std::vector<Term> goals;
  Subst theta;
  TypeSubst mu;
  Context context;
  std::size_t depth = 0;
  // Next clause to try for the first goal.
  std::size_t cursor = 0;
};

std::vector<TypeConstraint> as_constraints(const TypeSubst& mu) {
  std::vector<TypeConstraint> out;
  out.reserve(mu.size());
  for (const auto& [v, t] : mu) out.push_back({TypeExpr::var(v), t});
  return out;
}

class Engine {
 public:
  Engine(const std::vector<Clause>& program, const SignatureEnv& sig,
         const ResolutionBudget& budget, bool trace)
      : program_(program), sig_(sig), budget_(budget), trace_(trace) {}

  Outcome run(const std::vector<Term>& query) {
    for (const auto& g : query) reserve(g);
    for (const auto& c : program_) {
      reserve(c.head);
      for (const auto& b : c.body) reserve(b);
    }
    Node root;
    root.goals = query;
    for (const auto& g : query) extend_generic_context(root.context, g);
    std::vector<Node> stack = {std::move(root)};

    std::optional<Node> success;
    while (!stack.empty() && !success) {
      if (out_.steps >= budget_.max_steps) {
        out_.budget_exceeded = true;
        break;
      }
      Node& node = stack.back();
      if (node.goals.empty()) {
        success = std::move(node);
        break;
      }
      if (node.depth >= budget_.max_depth) {
        end_branch(BranchEnd::kCut);
        out_.budget_exceeded = true;
        stack.pop_back();
        continue;
      }
      const Term goal = node.goals.front();
      if (is_equation(goal)) {
        Node current = std::move(node);
        stack.pop_back();
        if (auto child = resolve_equation(current, goal)) {
          stack.push_back(std::move(*child));
        }
        continue;
      }
      auto next = next_clause(node, goal);
      if (!next) {
        // Nothing left to try here. A goal no clause can match still gets its
        // types checked, so an ill-typed goal ends the branch as wrong.
        if (node.cursor == 0) no_clause(node, goal);
        stack.pop_back();
        continue;
      }
      node.cursor = *next + 1;
      Node parent = node;
      if (auto child = resolve_clause(parent, goal, *next)) {
        stack.push_back(std::move(*child));
      }
    }

    out_.verdict = aggregate(out_.branches, success.has_value(),
                             out_.budget_exceeded);
    if (success) {
      std::vector<std::string> vars;
      for (const auto& g : query) collect_vars(g, vars);
      for (const auto& v : vars) {
        Term value = apply_subst(success->theta, Term::var(v));
        if (value != Term::var(v)) out_.theta.emplace(v, value);
        out_.types.emplace(
            v, apply_type_subst(success->mu,
                                TypeExpr::var(context_type_var(v))));
      }
    }
    return std::move(out_);
  }

 private:
  void reserve(const Term& t) {
    std::vector<std::string> vars;
    collect_vars(t, vars);
    for (auto& v : vars) vars_.reserve(std::move(v));
  }

  std::optional<std::size_t> next_clause(const Node& node,
                                         const Term& goal) const {
    for (std::size_t i = node.cursor; i < program_.size(); ++i) {
      if (same_predicate(goal, program_[i].head)) return i;
    }
    return std::nullopt;
  }

  void end_branch(BranchEnd end) { out_.branches.push_back(end); }

  BranchEnd failure_end(const Node& node, SolveOutcome outcome) const {
    if (outcome == SolveOutcome::kWrong) return BranchEnd::kWrong;
    return node.goals.size() > 1 ? BranchEnd::kFalseWithRemaining
                                 : BranchEnd::kFalseFinal;
  }

  void record(const Node& node, const Term& goal, int clause,
              SolveOutcome outcome, std::optional<BranchEnd> end) {
    if (end) end_branch(*end);
    if (trace_) out_.trace.push_back({node.depth, goal, clause, outcome, end});
  }

  // Solves the new constraints together with the types found so far.
  SolveResult solve_with(const Node& node, ConstraintState constraints) {
    std::vector<TypeConstraint> types = as_constraints(node.mu);
    types.insert(types.end(), constraints.types.begin(),
                 constraints.types.end());
    constraints.types = std::move(types);
    return solve(std::move(constraints));
  }

  std::optional<Node> advance(const Node& parent, const SolveResult& r,
                              std::vector<Term> body, Context context) {
    Node child;
    for (auto& b : body) child.goals.push_back(apply_subst(r.theta, b));
    for (std::size_t i = 1; i < parent.goals.size(); ++i) {
      child.goals.push_back(apply_subst(r.theta, parent.goals[i]));
    }
    child.theta = compose(parent.theta, r.theta);
    child.mu = r.mu;
    child.context = std::move(context);
    child.depth = parent.depth + 1;
    return child;
  }

  std::optional<Node> resolve_equation(const Node& node, const Term& goal) {
    ++out_.steps;
    Generated g = gen_equation(node.context, sig_, goal.args()[0],
                               goal.args()[1], types_);
    SolveResult r = solve_with(node, std::move(g.constraints));
    if (r.outcome != SolveOutcome::kSolved) {
      record(node, goal, -1, r.outcome, failure_end(node, r.outcome));
      return std::nullopt;
    }
    record(node, goal, -1, r.outcome, std::nullopt);
    return advance(node, r, {}, node.context);
  }

  std::optional<Node> resolve_clause(const Node& node, const Term& goal,
                                     std::size_t index) {
    ++out_.steps;
    Clause c = rename_clause(program_[index], vars_);
    Context context = node.context;
    extend_generic_context(context, c.head);
    for (const auto& b : c.body) extend_generic_context(context, b);

    Generated g = gen_atom_equation(context, sig_, goal, c.head, types_);
    SolveResult r = solve_with(node, std::move(g.constraints));
    const int clause = static_cast<int>(index);
    if (r.outcome != SolveOutcome::kSolved) {
      record(node, goal, clause, r.outcome, failure_end(node, r.outcome));
      return std::nullopt;
    }
    record(node, goal, clause, r.outcome, std::nullopt);
    return advance(node, r, c.body, std::move(context));
  }

  void no_clause(const Node& node, const Term& goal) {
    Generated g = gen_atom(node.context, sig_, goal, types_);
    g.constraints.terms.clear();
    SolveResult r = solve_with(node, std::move(g.constraints));
    SolveOutcome outcome = r.outcome == SolveOutcome::kWrong
                               ? SolveOutcome::kWrong
                               : SolveOutcome::kFalse;
    record(node, goal, -1, outcome, failure_end(node, outcome));
  }

  const std::vector<Clause>& program_;
  const SignatureEnv& sig_;
  ResolutionBudget budget_;
  bool trace_;
  FreshSupply vars_{"_G"};
  FreshSupply types_;
  Outcome out_;
};

}  // namespace

Outcome resolve(const std::vector<Clause>& program,
                const std::vector<Term>& query, const SignatureEnv& sig,
                const ResolutionBudget& budget, bool trace) {
  return Engine(program, sig, budget, trace).run(query);
}

}  // namespace regunify
