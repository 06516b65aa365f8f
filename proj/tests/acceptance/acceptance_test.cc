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

// Acceptance checks. Prints one PASS or FAIL line per criterion and exits
// nonzero if any fails.

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../support/oracles.h"
#include "regunify/cli.h"
#include "regunify/parser.h"
#include "regunify/print.h"
#include "regunify/semantics.h"
#include "regunify/solver.h"
#include "regunify/type_system.h"

namespace regunify {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

struct Invocation {
  int code;
  std::string out;
};

Invocation cli(std::vector<std::string> args) {
  std::istringstream in;
  std::ostringstream out, err;
  int code = run_cli(args, in, out, err);
  return {code, out.str() + err.str()};
}

std::string data(const char* name) {
  return std::string(REGUNIFY_TEST_DATA) + "/" + name;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::pair<std::string, std::string> split_equation(const std::string& text) {
  auto at = text.find(" = ");
  return {text.substr(0, at), text.substr(at + 3)};
}

ConstraintState state_from_json(const json& c, const json& t) {
  ConstraintState s;
  for (const auto& e : c) {
    auto [l, r] = parse_equation(e.get<std::string>());
    s.terms.push_back({l, r});
  }
  for (const auto& e : t) {
    auto [l, r] = split_equation(e.get<std::string>());
    s.types.push_back({parse_type(l), parse_type(r)});
  }
  return s;
}

ConstraintState state(std::vector<std::pair<const char*, const char*>> terms,
                      std::vector<std::pair<const char*, const char*>> types) {
  ConstraintState s;
  for (auto [l, r] : terms) s.terms.push_back({parse_term(l), parse_term(r)});
  for (auto [l, r] : types) s.types.push_back({parse_type(l), parse_type(r)});
  return s;
}

Verdict golden_trace() {
  Verdict v;
  auto start = Clock::now();
  Invocation r = cli({"--json", "--trace", "unify", "cons(X,[])", "cons(1,Y)"});
  double elapsed = seconds_since(start);
  v.expect(r.code == kExitSolved, "exit code " + std::to_string(r.code));
  json j = json::parse(r.out);
  const json& res = j["result"];

  // Type variables: X and Y get AX and AY; N, G, E are the fresh ones.
  ConstraintState t1 = state({}, {{"AX", "N"}, {"list(G)", "list(N)"}});
  ConstraintState t2 = state({}, {{"int", "E"}, {"AY", "list(E)"}});
  v.expect(oracle::same_up_to_renaming(
               state_from_json(json::array(), res["constraints"]["T1"]), t1),
           "T1 differs");
  v.expect(oracle::same_up_to_renaming(
               state_from_json(json::array(), res["constraints"]["T2"]), t2),
           "T2 differs");

  const std::pair<const char*, const char*> c0{"cons(X, [])", "cons(1, Y)"};
  // The reference sequence stops rewriting AX = N after N is bound; running
  // to a normal form binds AX = int in the same step.
  std::vector<ConstraintState> expected = {
      state({c0}, {{"AX", "N"}, {"G", "N"}, {"int", "E"}, {"AY", "list(E)"},
                   {"list(N)", "list(E)"}}),
      state({c0}, {{"AX", "N"}, {"G", "N"}, {"int", "E"}, {"AY", "list(E)"},
                   {"N", "E"}}),
      state({c0}, {{"AX", "N"}, {"G", "N"}, {"E", "int"}, {"AY", "list(E)"},
                   {"N", "E"}}),
      state({c0}, {{"AX", "N"}, {"G", "N"}, {"E", "int"}, {"AY", "list(int)"},
                   {"N", "int"}}),
      state({c0}, {{"AX", "int"}, {"G", "int"}, {"E", "int"},
                   {"AY", "list(int)"}, {"N", "int"}}),
      state({{"X", "1"}, {"[]", "Y"}},
            {{"AX", "int"}, {"G", "int"}, {"E", "int"}, {"AY", "list(int)"},
             {"N", "int"}}),
      state({{"X", "1"}, {"Y", "[]"}},
            {{"AX", "int"}, {"G", "int"}, {"E", "int"}, {"AY", "list(int)"},
             {"N", "int"}}),
  };
  const json& trace = j["trace"];
  v.expect(trace.size() == expected.size(),
           "trace has " + std::to_string(trace.size()) + " steps");
  for (std::size_t i = 0; i < std::min(trace.size(), expected.size()); ++i) {
    ConstraintState got =
        state_from_json(trace[i]["state"]["C"], trace[i]["state"]["T"]);
    v.expect(oracle::same_up_to_renaming(got, expected[i]),
             "step " + std::to_string(i + 1) + " differs: " + to_string(got));
  }
  v.expect(res["outcome"] == "solved", "outcome");
  v.expect(res["theta"] == json({{"X", "1"}, {"Y", "[]"}}), "theta");
  v.expect(res["types"] == json({{"X", "int"}, {"Y", "list(int)"}}), "types");
  v.expect(res["mu"]["A_X"] == "int" && res["mu"]["A_Y"] == "list(int)", "mu");
  v.expect(elapsed < 1.0, "took " + std::to_string(elapsed) + " s");
  if (v.ok) v.detail = "7 steps, solved, " + std::to_string(elapsed) + " s";
  return v;
}

Verdict disjoint_lists() {
  Verdict v;
  Invocation r = cli({"unify", "cons(1,X)", "cons(Y,2)"});
  v.expect(r.code == kExitWrong, "exit code " + std::to_string(r.code));
  v.expect(r.out.rfind("wrong\n", 0) == 0, "output: " + r.out);
  if (v.ok) v.detail = "wrong, exit 2";
  return v;
}

Verdict principal_of_cons() {
  Verdict v;
  Invocation r = cli({"--json", "infer", "cons(X,Y)"});
  v.expect(r.code == kExitSolved, "exit code " + std::to_string(r.code));
  json p = json::parse(r.out)["result"]["principal"];
  Typing got{{{"X", parse_type(p["context"]["X"].get<std::string>())},
              {"Y", parse_type(p["context"]["Y"].get<std::string>())}},
             parse_type(p["type"].get<std::string>())};
  Typing want{{{"X", parse_type("Alpha")}, {"Y", parse_type("list(Alpha)")}},
              parse_type("list(Alpha)")};
  v.expect(p["context"].size() == 2, "context size");
  v.expect(is_instance(got, want) && is_instance(want, got),
           "got " + to_string(got));
  if (v.ok) v.detail = to_string(got);
  return v;
}

Verdict checker() {
  Verdict v;
  SignatureEnv sig = derive_signatures(TypeDefSet::builtin());
  Term l = parse_term("cons(X,[])");
  Term r = parse_term("cons(1,Y)");
  Context ground{{"X", parse_type("int")}, {"Y", parse_type("list(int)")}};
  Context open{{"X", parse_type("Alpha")}, {"Y", parse_type("list(int)")}};
  v.expect(check_equation(ground, sig, l, r).derivable, "rejected ground");
  v.expect(!check_equation(open, sig, l, r).derivable, "accepted open");
  if (v.ok) v.detail = "accepts {X:int, Y:list(int)}, rejects {X:A, Y:list(int)}";
  return v;
}

Verdict early_false() {
  Verdict v;
  std::string query;
  for (int i = 1; i <= 20; ++i) query += "p(" + std::to_string(i) + "), ";
  query += "p(a)";
  Invocation r = cli({"--json", "run", data("p0.pl"), "-q", query});
  v.expect(r.code == kExitUnknown, "exit code " + std::to_string(r.code));
  json res = json::parse(r.out)["result"];
  v.expect(res["outcome"] == "no(?)", "outcome " + res["outcome"].dump());
  v.expect(res["steps"] == 1, "steps " + res["steps"].dump());
  if (v.ok) v.detail = "no(?) after 1 step";
  return v;
}

Verdict swapped_arguments() {
  Verdict v;
  Invocation r = cli({"--json", "--trace", "run", data("length.pl"), "--sig",
                      data("length.sig"), "-q", "length(3,[a,b,c])"});
  v.expect(r.code == kExitWrong, "exit code " + std::to_string(r.code));
  json j = json::parse(r.out);
  v.expect(j["result"]["outcome"] == "no(wrong)", "outcome");
  std::vector<int> wrong_clauses;
  for (const auto& e : j["trace"]) {
    if (e["outcome"] == "wrong" && e["branch"] == "wrong") {
      wrong_clauses.push_back(e["clause"].get<int>());
    }
  }
  v.expect(wrong_clauses == std::vector<int>({1, 2}),
           "wrong branches: " + std::to_string(wrong_clauses.size()));
  if (v.ok) v.detail = "no(wrong), clauses 1 and 2 wrong";
  return v;
}

SolveOutcome expected_outcome(const Term& l, const Term& r) {
  Value eq = eq_values(eval(l), eval(r));
  if (eq.is_wrong()) return SolveOutcome::kWrong;
  return eq.truth() ? SolveOutcome::kSolved : SolveOutcome::kFalse;
}

Verdict oracle_equivalence() {
  Verdict v;
  auto start = Clock::now();
  Alphabet alphabet{{Term::integer(0), Term::integer(1), Term::atom("a"),
                     Term::nil()},
                    {{"cons", 2}, {"f", 1}}};
  std::size_t pairs = 0, mismatches = 0;
  std::map<SolveOutcome, std::size_t> seen;
  auto compare = [&](const Term& l, const Term& r) {
    SolveOutcome got = typed_unify(l, r).result.outcome;
    ++pairs;
    ++seen[got];
    if (got != expected_outcome(l, r)) {
      if (mismatches++ == 0) {
        v.fail("mismatch on " + to_string(l) + " = " + to_string(r));
      }
    }
  };
  // Every pair up to depth 2.
  std::vector<Term> small = enumerate_ground_terms(alphabet, 2);
  for (const auto& l : small) {
    for (const auto& r : small) compare(l, r);
  }
  // Depth 3 has too many pairs to enumerate; draw seeded samples from the
  // whole space and from its well-typed part.
  std::vector<Term> deep = enumerate_ground_terms(alphabet, 3);
  std::vector<Term> typed;
  for (const auto& t : deep) {
    if (!eval(t).is_wrong()) typed.push_back(t);
  }
  std::mt19937_64 rng(2026);
  auto draw = [&](const std::vector<Term>& from) -> const Term& {
    return from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(
        rng)];
  };
  for (int i = 0; i < 150000; ++i) compare(draw(deep), draw(deep));
  for (int i = 0; i < 100000; ++i) compare(draw(typed), draw(typed));
  for (int i = 0; i < 50000; ++i) {
    const Term& t = draw(typed);
    compare(t, t);
  }
  double elapsed = seconds_since(start);
  v.expect(elapsed < 60.0, "took " + std::to_string(elapsed) + " s");
  std::ostringstream d;
  d << pairs << " pairs (" << small.size() << " terms to depth 2, all pairs; "
    << deep.size() << " at depth 3, sampled), " << mismatches
    << " mismatches, solved/false/wrong = " << seen[SolveOutcome::kSolved]
    << "/" << seen[SolveOutcome::kFalse] << "/" << seen[SolveOutcome::kWrong]
    << ", " << elapsed << " s";
  if (v.ok) v.detail = d.str();
  else v.detail += "; " + d.str();
  return v;
}

std::vector<std::pair<Term, Term>> random_instances() {
  oracle::TermGenerator gen(20261016);
  std::vector<std::pair<Term, Term>> out;
  // Half arbitrary, half built for one type so that solved and false
  // outcomes are common too.
  for (int i = 0; i < 1000; ++i) {
    out.push_back(i % 2 == 0 ? gen.pair(3) : gen.typed_pair(4));
  }
  return out;
}

std::vector<std::pair<TypeExpr, TypeExpr>> type_pairs(
    const std::vector<TypeConstraint>& cs) {
  std::vector<std::pair<TypeExpr, TypeExpr>> out;
  for (const auto& c : cs) out.emplace_back(c.lhs, c.rhs);
  return out;
}

Verdict soundness() {
  Verdict v;
  std::size_t counts[3] = {0, 0, 0};
  std::size_t violations = 0;
  for (const auto& [l, r] : random_instances()) {
    Unification u = typed_unify(l, r);
    std::string where = to_string(l) + " = " + to_string(r);
    bool ok = true;
    switch (u.result.outcome) {
      case SolveOutcome::kSolved:
        ++counts[0];
        ok = oracle::unifies(oracle::resolved(u.result.theta),
                             u.constraints.terms) &&
             oracle::unifies(u.result.mu, u.constraints.types);
        break;
      case SolveOutcome::kFalse:
        ++counts[1];
        ok = !oracle::robinson({{l, r}}).has_value() &&
             oracle::unify_types(type_pairs(u.constraints.types)).has_value();
        break;
      case SolveOutcome::kWrong:
        ++counts[2];
        ok = !oracle::unify_types(type_pairs(u.constraints.types)).has_value();
        break;
      case SolveOutcome::kBudgetExceeded:
        ok = false;
        break;
    }
    if (!ok && violations++ == 0) v.fail("violation on " + where);
  }
  std::ostringstream d;
  d << "1000 instances, solved/false/wrong = " << counts[0] << "/" << counts[1]
    << "/" << counts[2] << ", " << violations << " violations";
  if (v.ok) v.detail = d.str();
  else v.detail += "; " + d.str();
  return v;
}

Verdict termination() {
  Verdict v;
  std::size_t hit = 0, max_ratio_steps = 0, max_ratio_budget = 1;
  std::size_t longest = 0;
  for (const auto& [l, r] : random_instances()) {
    Unification plan = typed_unify(l, r);
    std::size_t budget = step_budget(plan.constraints, 64);
    Unification u =
        typed_unify(l, r, TypeDefSet::builtin(), {.max_steps = budget});
    if (u.result.outcome == SolveOutcome::kBudgetExceeded ||
        u.result.steps > budget) {
      if (hit++ == 0) v.fail("budget hit on " + to_string(l) + " = " + to_string(r));
    }
    longest = std::max(longest, u.result.steps);
    if (u.result.steps * max_ratio_budget > max_ratio_steps * budget) {
      max_ratio_steps = u.result.steps;
      max_ratio_budget = budget;
    }
  }
  std::ostringstream d;
  d << "1000 instances, " << hit << " over budget, longest run " << longest
    << " steps, closest to budget " << max_ratio_steps << " of "
    << max_ratio_budget;
  if (v.ok) v.detail = d.str();
  else v.detail += "; " + d.str();
  return v;
}

std::vector<Term> golden_terms() {
  std::ifstream in(data("golden.terms"));
  std::vector<Term> out;
  for (std::string line; std::getline(in, line);) {
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '%') continue;
    out.push_back(parse_term(line));
  }
  return out;
}

void collect_functors(const Term& t,
                      std::set<std::pair<std::string, std::size_t>>& out) {
  if (!t.is_compound()) return;
  if (t.name() != "cons") out.emplace(t.name(), t.arity());
  for (const auto& a : t.args()) collect_functors(a, out);
}

// All tuples of length n over pool.
std::vector<std::vector<TypeExpr>> tuples(const std::vector<TypeExpr>& pool,
                                          std::size_t n) {
  std::vector<std::vector<TypeExpr>> out{{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<TypeExpr>> next;
    for (const auto& prefix : out) {
      for (const auto& p : pool) {
        next.push_back(prefix);
        next.back().push_back(p);
      }
    }
    out = std::move(next);
  }
  return out;
}

Verdict principality() {
  Verdict v;
  SignatureEnv sig = derive_signatures(TypeDefSet::builtin());
  std::vector<TypeExpr> pool = {parse_type("int"), parse_type("atom"),
                                parse_type("list(int)"),
                                parse_type("list(atom)")};
  std::vector<Term> corpus = golden_terms();
  v.expect(corpus.size() >= 20, "corpus has " + std::to_string(corpus.size()));
  std::size_t derivable = 0, counterexamples = 0, candidates = 0;
  for (const Term& t : corpus) {
    PrincipalTyping pt = principal_typing(t, sig);
    std::vector<std::string> vars;
    collect_vars(t, vars);

    std::vector<TypeExpr> types = pool;
    for (const auto& p : pool) types.push_back(TypeExpr::sym("list", {p}));
    std::set<std::pair<std::string, std::size_t>> functors;
    collect_functors(t, functors);
    for (const auto& [f, n] : functors) {
      for (auto& args : tuples(pool, n)) {
        types.push_back(TypeExpr::sym(implicit_type_symbol(f), args));
      }
    }
    if (pt.typing) {
      std::vector<std::string> tvars;
      for (const auto& [x, ty] : pt.typing->context) collect_vars(ty, tvars);
      collect_vars(pt.typing->type, tvars);
      for (auto& values : tuples(pool, tvars.size())) {
        TypeSubst s;
        for (std::size_t i = 0; i < tvars.size(); ++i) s.emplace(tvars[i], values[i]);
        types.push_back(apply_type_subst(s, pt.typing->type));
      }
    }

    // Whether some instance of the principal context lies in the pool.
    bool reachable = false;
    if (pt.typing) {
      std::vector<std::string> tvars;
      for (const auto& [x, ty] : pt.typing->context) collect_vars(ty, tvars);
      for (auto& values : tuples(pool, tvars.size())) {
        TypeSubst s;
        for (std::size_t i = 0; i < tvars.size(); ++i) s.emplace(tvars[i], values[i]);
        bool inside = true;
        for (const auto& [x, ty] : pt.typing->context) {
          TypeExpr g = apply_type_subst(s, ty);
          inside = inside && std::find(pool.begin(), pool.end(), g) != pool.end();
        }
        reachable = reachable || inside;
      }
    }

    std::size_t found = 0;
    for (auto& assignment : tuples(pool, vars.size())) {
      Context ctx;
      for (std::size_t i = 0; i < vars.size(); ++i) ctx.emplace(vars[i], assignment[i]);
      for (const auto& type : types) {
        ++candidates;
        if (!check(ctx, sig, t, type).derivable) continue;
        ++found;
        Typing candidate{ctx, type};
        if (!pt.typing || !is_instance(candidate, *pt.typing)) {
          if (counterexamples++ == 0) {
            v.fail(to_string(candidate) + " derivable for " + to_string(t) +
                   " but not an instance");
          }
        }
      }
    }
    derivable += found;
    if (reachable && found == 0) {
      v.fail("no derivable typing found for " + to_string(t));
    }
  }
  std::ostringstream d;
  d << corpus.size() << " terms, " << candidates << " candidates, "
    << derivable << " derivable, " << counterexamples << " counterexamples";
  if (v.ok) v.detail = d.str();
  else v.detail += "; " + d.str();
  return v;
}

}  // namespace
}  // namespace regunify

int main() {
  using regunify::Verdict;
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"golden trace", regunify::golden_trace},
      {"disjoint list domains are wrong", regunify::disjoint_lists},
      {"principal typing of cons(X,Y)", regunify::principal_of_cons},
      {"equation checker", regunify::checker},
      {"early false answers no(?)", regunify::early_false},
      {"swapped arguments answer no(wrong)", regunify::swapped_arguments},
      {"ground outcomes match evaluation", regunify::oracle_equivalence},
      {"unifier soundness", regunify::soundness},
      {"termination budget", regunify::termination},
      {"principality", regunify::principality},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    std::cout << (v.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": "
              << criteria[i].first << " (" << v.detail << ")" << std::endl;
    failed += v.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
