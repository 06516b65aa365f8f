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

#include <gtest/gtest.h>

#include "../support/oracles.h"
#include "regunify/parser.h"
#include "regunify/print.h"
#include "regunify/solver.h"

namespace regunify {
namespace {

TypeExpr Ty(const char* text) { return parse_type(text); }

Unification U(const char* lhs, const char* rhs, SolveOptions options = {}) {
  return typed_unify(parse_term(lhs), parse_term(rhs), TypeDefSet::builtin(),
                     options);
}

std::vector<int> rules(const SolveResult& r) {
  std::vector<int> out;
  for (const auto& s : r.trace) out.push_back(s.rule);
  return out;
}

TEST(Solve, ListWithVariableAndLiteral) {
  Unification u = U("cons(X, [])", "cons(1, Y)", {.trace = true});
  ASSERT_EQ(u.result.outcome, SolveOutcome::kSolved);
  Subst theta = oracle::resolved(u.result.theta);
  EXPECT_EQ(theta.at("X"), parse_term("1"));
  EXPECT_EQ(theta.at("Y"), parse_term("[]"));
  EXPECT_EQ(u.types.at("X"), Ty("int"));
  EXPECT_EQ(u.types.at("Y"), Ty("list(int)"));
  EXPECT_EQ(rules(u.result), (std::vector<int>{1, 1, 4, 5, 5, 7, 10}));
  EXPECT_EQ(u.result.steps, 7u);
  // The normal form is the solved form itself.
  EXPECT_EQ(u.result.final_state.terms.size(), 2u);
  EXPECT_TRUE(oracle::unifies(u.result.mu, u.constraints.types));
}

TEST(Solve, TraceStatesChain) {
  Unification u = U("cons(X, [])", "cons(1, Y)", {.trace = true});
  ConstraintState state = u.constraints;
  for (const auto& s : u.result.trace) {
    Step st = step(state);
    EXPECT_EQ(st.rule, s.rule);
    EXPECT_EQ(state, s.state);
  }
  EXPECT_EQ(step(state).kind, StepKind::kDone);
}

TEST(Solve, DisjointDomainsAreWrong) {
  Unification u = U("cons(1, X)", "cons(Y, 2)");
  EXPECT_EQ(u.result.outcome, SolveOutcome::kWrong);
  ASSERT_TRUE(u.result.witness.has_value());
  EXPECT_TRUE(std::holds_alternative<TypeConstraint>(*u.result.witness));
  EXPECT_TRUE(u.types.empty());
}

TEST(Solve, Simple) {
  EXPECT_EQ(U("1", "1").result.outcome, SolveOutcome::kSolved);
  EXPECT_EQ(U("a", "b").result.outcome, SolveOutcome::kFalse);
  EXPECT_EQ(U("1", "a").result.outcome, SolveOutcome::kWrong);
  EXPECT_EQ(U("1", "2").result.outcome, SolveOutcome::kFalse);
  EXPECT_EQ(U("1", "0.5").result.outcome, SolveOutcome::kWrong);
  EXPECT_EQ(U("[]", "[a]").result.outcome, SolveOutcome::kFalse);
  EXPECT_EQ(U("f(X)", "g(X, Y)").result.outcome, SolveOutcome::kWrong);
  EXPECT_EQ(U("f(1)", "f(X)").result.outcome, SolveOutcome::kSolved);
}

TEST(Solve, TermOccursCheckIsFalse) {
  Unification u = U("X", "cons(1, X)");
  EXPECT_EQ(u.result.outcome, SolveOutcome::kFalse);
  EXPECT_EQ(u.types.at("X"), Ty("list(int)"));
}

TEST(Solve, TypeOccursCheckIsWrong) {
  EXPECT_EQ(U("X", "f(X)").result.outcome, SolveOutcome::kWrong);
  EXPECT_EQ(U("X", "[X]").result.outcome, SolveOutcome::kWrong);
}

TEST(Solve, WrongDominatesFalse) {
  // The term part clashes first; the type part is still inconsistent.
  EXPECT_EQ(U("g(a, 1)", "g(b, a)").result.outcome, SolveOutcome::kWrong);
}

TEST(Solve, Budget) {
  Unification u = U("cons(X, [])", "cons(1, Y)", {.max_steps = 3});
  EXPECT_EQ(u.result.outcome, SolveOutcome::kBudgetExceeded);
  EXPECT_EQ(u.result.steps, 3u);
}

TEST(Solve, EmptyState) {
  SolveResult r = solve({});
  EXPECT_EQ(r.outcome, SolveOutcome::kSolved);
  EXPECT_EQ(r.steps, 0u);
}

TEST(Solve, StepLeavesStateOnFailure) {
  ConstraintState s;
  s.types.push_back({Ty("int"), Ty("atom")});
  ConstraintState before = s;
  Step st = step(s);
  EXPECT_EQ(st.kind, StepKind::kWrong);
  EXPECT_EQ(st.rule, 3);
  EXPECT_EQ(s, before);
}

TEST(Solve, VariableEliminationNeedsOtherOccurrence) {
  // A lone binding is already solved, so no rule fires.
  ConstraintState s;
  s.terms.push_back({parse_term("X"), parse_term("1")});
  EXPECT_EQ(step(s).kind, StepKind::kDone);
}

TEST(Sizes, InputSizeAndBudget) {
  ConstraintState s;
  s.terms.push_back({parse_term("f(X)"), parse_term("1")});
  s.types.push_back({Ty("list(A)"), Ty("int")});
  EXPECT_EQ(input_size(s), 6u);
  EXPECT_EQ(step_budget(s), 36u * 64u);
  EXPECT_EQ(step_budget(s, 2), 72u);
}

TEST(Principal, ListPair) {
  PrincipalTyping p = principal_typing(parse_term("cons(X, Y)"));
  ASSERT_TRUE(p.typing.has_value());
  Typing c = canonical(*p.typing);
  EXPECT_EQ(c.context.at("X"), Ty("A"));
  EXPECT_EQ(c.context.at("Y"), Ty("list(A)"));
  EXPECT_EQ(c.type, Ty("list(A)"));
}

TEST(Principal, Examples) {
  auto show = [](const char* text) {
    PrincipalTyping p = principal_typing(parse_term(text));
    return p.typing ? to_string(canonical(*p.typing)) : std::string("none");
  };
  EXPECT_EQ(show("cons(1, 2)"), "none");
  EXPECT_EQ(show("cons(X, X)"), "none");
  EXPECT_EQ(principal_typing(parse_term("f(X, a)")).typing->type.name(), "f'");
}

TEST(Canonical, RenamesInOrder) {
  Typing t{{{"X", Ty("Q")}, {"Y", Ty("list(P)")}}, Ty("f'(P, Q)")};
  Typing c = canonical(t);
  EXPECT_EQ(c.context.at("X"), Ty("A"));
  EXPECT_EQ(c.context.at("Y"), Ty("list(B)"));
  EXPECT_EQ(c.type, Ty("f'(B, A)"));
}

TEST(Solve, AgreesWithRobinsonOnSolvedAndFalse) {
  oracle::TermGenerator gen(7);
  for (int i = 0; i < 300; ++i) {
    auto [l, r] = gen.pair(3);
    Unification u = typed_unify(l, r);
    auto untyped = oracle::robinson({{l, r}});
    if (u.result.outcome == SolveOutcome::kSolved) {
      ASSERT_TRUE(untyped.has_value()) << to_string(l) << " = " << to_string(r);
      Subst theta = oracle::resolved(u.result.theta);
      EXPECT_EQ(apply_subst(theta, l), apply_subst(theta, r));
    } else if (u.result.outcome == SolveOutcome::kFalse) {
      EXPECT_FALSE(untyped.has_value()) << to_string(l) << " = " << to_string(r);
    }
  }
}

}  // namespace
}  // namespace regunify
