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

#include "regunify/solver.h"

#include <algorithm>
#include <utility>

#include "regunify/print.h"

namespace regunify {

std::string_view to_string(SolveOutcome outcome) {
  switch (outcome) {
    case SolveOutcome::kSolved:
      return "solved";
    case SolveOutcome::kFalse:
      return "false";
    case SolveOutcome::kWrong:
      return "wrong";
    case SolveOutcome::kBudgetExceeded:
      return "budget-exceeded";
  }
  return "?";
}

std::string to_string(const AnyConstraint& constraint) {
  return std::visit([](const auto& c) { return to_string(c); }, constraint);
}

std::string to_string(const TraceStep& step) {
  std::string out = "rule" + std::to_string(step.rule) + ": " +
                    to_string(step.constraint) + " ==> ";
  if (step.is_failure()) return out + (step.rule <= 6 ? "wrong" : "false");
  return out + to_string(step.state);
}

namespace {

// The rewriting rules are the same for both constraint kinds; the traits
// below give the per-kind vocabulary.
struct TypeSide {
  using Expr = TypeExpr;
  using Constraint = TypeConstraint;
  static std::vector<Constraint>& of(ConstraintState& s) { return s.types; }
  static bool rigid_pair(const Expr& a, const Expr& b) {
    return !a.is_var() && !b.is_var();
  }
  static Expr subst(const std::string& v, const Expr& by, const Expr& in) {
    return apply_type_subst(TypeSubst{{v, by}}, in);
  }
};

struct TermSide {
  using Expr = Term;
  using Constraint = TermConstraint;
  static std::vector<Constraint>& of(ConstraintState& s) { return s.terms; }
  static bool rigid_pair(const Expr& a, const Expr& b) {
    return !a.is_var() && !b.is_var();
  }
  static Expr subst(const std::string& v, const Expr& by, const Expr& in) {
    return apply_subst(Subst{{v, by}}, in);
  }
};

template <typename Side>
bool occurs_elsewhere(const std::vector<typename Side::Constraint>& cs,
                      std::size_t skip, const std::string& v) {
  for (std::size_t j = 0; j < cs.size(); ++j) {
    if (j == skip) continue;
    if (occurs_in(v, cs[j].lhs) || occurs_in(v, cs[j].rhs)) return true;
  }
  return false;
}

// Rules first..first+5 over one side. Returns the rule applied, or 0.
template <typename Side>
Step step_side(ConstraintState& state, int first) {
  auto& cs = Side::of(state);
  auto found = [&](int rule) {
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const auto& c = cs[i];
      bool match = false;
      switch (rule) {
        case 1:
          match = Side::rigid_pair(c.lhs, c.rhs) && c.lhs.same_head(c.rhs);
          break;
        case 2:
          match = c.lhs == c.rhs;
          break;
        case 3:
          match = Side::rigid_pair(c.lhs, c.rhs) && !c.lhs.same_head(c.rhs);
          break;
        case 4:
          match = !c.lhs.is_var() && c.rhs.is_var();
          break;
        case 5:
          match = c.lhs.is_var() && !occurs_in(c.lhs.name(), c.rhs) &&
                  occurs_elsewhere<Side>(cs, i, c.lhs.name());
          break;
        case 6:
          match = c.lhs.is_var() && c.lhs != c.rhs &&
                  occurs_in(c.lhs.name(), c.rhs);
          break;
      }
      if (match) return static_cast<std::ptrdiff_t>(i);
    }
    return std::ptrdiff_t{-1};
  };

  for (int rule = 1; rule <= 6; ++rule) {
    std::ptrdiff_t at = found(rule);
    if (at < 0) continue;
    const auto i = static_cast<std::size_t>(at);
    const typename Side::Constraint c = cs[i];
    Step result{StepKind::kRewritten, first + rule - 1, AnyConstraint(c)};
    switch (rule) {
      case 1: {
        std::vector<typename Side::Constraint> parts;
        for (std::size_t k = 0; k < c.lhs.arity(); ++k) {
          parts.push_back({c.lhs.args()[k], c.rhs.args()[k]});
        }
        cs.erase(cs.begin() + at);
        cs.insert(cs.begin() + at, parts.begin(), parts.end());
        break;
      }
      case 2:
        cs.erase(cs.begin() + at);
        break;
      case 3:
      case 6:
        result.kind = first == 1 ? StepKind::kWrong : StepKind::kFalse;
        break;
      case 4:
        cs[i] = {c.rhs, c.lhs};
        break;
      case 5:
        for (std::size_t j = 0; j < cs.size(); ++j) {
          if (j == i) continue;
          cs[j] = {Side::subst(c.lhs.name(), c.rhs, cs[j].lhs),
                   Side::subst(c.lhs.name(), c.rhs, cs[j].rhs)};
        }
        break;
    }
    return result;
  }
  return Step{StepKind::kDone, 0, std::nullopt};
}

}  // namespace

Step step(ConstraintState& state) {
  Step s = step_side<TypeSide>(state, 1);
  if (s.kind != StepKind::kDone) return s;
  return step_side<TermSide>(state, 7);
}

std::size_t input_size(const ConstraintState& state) {
  std::size_t n = 0;
  for (const auto& c : state.terms) n += c.lhs.size() + c.rhs.size();
  for (const auto& c : state.types) n += c.lhs.size() + c.rhs.size();
  return n;
}

std::size_t step_budget(const ConstraintState& state, std::size_t k) {
  std::size_t n = input_size(state);
  return n * n * k;
}

SolveResult solve(ConstraintState state, const SolveOptions& options) {
  SolveResult out;
  for (;;) {
    if (options.max_steps != 0 && out.steps >= options.max_steps) {
      out.outcome = SolveOutcome::kBudgetExceeded;
      break;
    }
    Step s = step(state);
    if (s.kind == StepKind::kDone) break;
    ++out.steps;
    if (options.trace) out.trace.push_back({s.rule, *s.constraint, state});
    if (s.kind == StepKind::kWrong) {
      out.outcome = SolveOutcome::kWrong;
      out.witness = s.constraint;
      break;
    }
    if (s.kind == StepKind::kFalse) {
      out.outcome = SolveOutcome::kFalse;
      out.witness = s.constraint;
      break;
    }
  }
  if (out.outcome == SolveOutcome::kSolved ||
      out.outcome == SolveOutcome::kFalse) {
    for (const auto& c : state.types) out.mu.emplace(c.lhs.name(), c.rhs);
  }
  if (out.outcome == SolveOutcome::kSolved) {
    for (const auto& c : state.terms) out.theta.emplace(c.lhs.name(), c.rhs);
  }
  out.final_state = std::move(state);
  return out;
}

std::string to_string(const Typing& typing) {
  return "(" + context_to_string(typing.context) + ", " + to_string(typing.type) + ")";
}

namespace {

std::string letter_name(std::size_t i) {
  std::string name(1, static_cast<char>('A' + i % 26));
  if (i >= 26) name += std::to_string(i / 26);
  return name;
}

}  // namespace

Typing canonical(const Typing& typing) {
  std::vector<std::string> vars;
  for (const auto& [name, type] : typing.context) collect_vars(type, vars);
  collect_vars(typing.type, vars);
  TypeSubst renaming;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    renaming.emplace(vars[i], TypeExpr::var(letter_name(i)));
  }
  Typing out{{}, apply_type_subst(renaming, typing.type)};
  for (const auto& [name, type] : typing.context) {
    out.context.emplace(name, apply_type_subst(renaming, type));
  }
  return out;
}

namespace {

Context apply_to_context(const TypeSubst& mu, const Context& context) {
  Context out;
  for (const auto& [name, type] : context) {
    out.emplace(name, apply_type_subst(mu, type));
  }
  return out;
}

}  // namespace

Unification typed_unify(const Term& lhs, const Term& rhs,
                        const SignatureEnv& sig, const SolveOptions& options) {
  Unification out;
  out.context = generic_context({lhs, rhs});
  FreshSupply fresh;
  out.lhs = gen_term(out.context, sig, lhs, fresh);
  out.rhs = gen_term(out.context, sig, rhs, fresh);
  out.constraints.terms.push_back({lhs, rhs});
  out.constraints.types = out.lhs.constraints.types;
  out.constraints.types.insert(out.constraints.types.end(),
                               out.rhs.constraints.types.begin(),
                               out.rhs.constraints.types.end());
  out.constraints.types.push_back({out.lhs.type, out.rhs.type});
  out.result = solve(out.constraints, options);
  if (out.result.outcome == SolveOutcome::kSolved ||
      out.result.outcome == SolveOutcome::kFalse) {
    out.types = apply_to_context(out.result.mu, out.context);
  }
  return out;
}

Unification typed_unify(const Term& lhs, const Term& rhs,
                        const TypeDefSet& defs, const SolveOptions& options) {
  return typed_unify(lhs, rhs, derive_signatures(defs), options);
}

PrincipalTyping principal_typing(const Term& term, const SignatureEnv& sig) {
  PrincipalTyping out;
  out.context = generic_context({term});
  FreshSupply fresh;
  out.generated = gen_term(out.context, sig, term, fresh);
  out.result = solve(out.generated.constraints);
  if (out.result.outcome == SolveOutcome::kSolved) {
    out.typing = Typing{apply_to_context(out.result.mu, out.context),
                        apply_type_subst(out.result.mu, out.generated.type)};
  }
  return out;
}

PrincipalTyping principal_typing(const Term& term, const TypeDefSet& defs) {
  return principal_typing(term, derive_signatures(defs));
}

}  // namespace regunify
