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

#include "regunify/cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "regunify/constraints.h"
#include "regunify/parser.h"
#include "regunify/print.h"
#include "regunify/semantics.h"
#include "regunify/solver.h"
#include "regunify/tsld.h"
#include "regunify/type_env.h"
#include "regunify/type_system.h"

namespace regunify {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "regunify/1";
constexpr const char* kDefaultAlphabet = "0, 1, a, [], cons/2, f/1";

struct Diagnostic {
  std::string kind;
  std::string message;
  std::optional<SourceSpan> span;
};

// Bad input: unreadable, unparsable or invalid.
struct InputError {
  int code;
  std::vector<Diagnostic> diagnostics;
};

struct Options {
  std::string types_file;
  std::string sig_file;
  bool json = false;
  bool trace = false;
  std::optional<int> depth;
  std::uint64_t seed = 1;
  std::size_t max_steps = 0;
};

struct Report {
  int code = kExitSolved;
  json input = json::object();
  json result = json::object();
  json trace = json::array();
  std::vector<std::string> lines;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    throw InputError{kExitUsage, {{"io", "cannot read " + path, std::nullopt}}};
  }
  std::stringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

SignatureEnv load_signatures(const Options& opts) {
  std::vector<TypeDef> defs;
  if (!opts.types_file.empty()) {
    defs = parse_typedefs(read_file(opts.types_file), opts.types_file);
  }
  auto validated = TypeDefSet::validate(std::move(defs));
  if (auto* errors = std::get_if<std::vector<ValidationError>>(&validated)) {
    InputError e{kExitInput, {}};
    for (const auto& v : *errors) {
      e.diagnostics.push_back({std::string(to_string(v.kind)), v.message, v.span});
    }
    throw e;
  }
  std::vector<SignatureDecl> overrides;
  if (!opts.sig_file.empty()) {
    overrides = parse_signatures(read_file(opts.sig_file), opts.sig_file);
  }
  return derive_signatures(std::get<TypeDefSet>(validated), overrides);
}

json subst_json(const Subst& s) {
  json j = json::object();
  for (const auto& [k, v] : s) j[k] = to_string(v);
  return j;
}

json type_subst_json(const TypeSubst& s) {
  json j = json::object();
  for (const auto& [k, v] : s) j[k] = to_string(v);
  return j;
}

json state_json(const ConstraintState& s) {
  json c = json::array();
  json t = json::array();
  for (const auto& x : s.terms) c.push_back(to_string(x));
  for (const auto& x : s.types) t.push_back(to_string(x));
  return {{"C", c}, {"T", t}};
}

json constraints_json(const std::vector<TypeConstraint>& cs) {
  json t = json::array();
  for (const auto& x : cs) t.push_back(to_string(x));
  return t;
}

std::string constraints_text(const std::vector<TypeConstraint>& cs) {
  std::string out = "{";
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(cs[i]);
  }
  return out + "}";
}

Context display_types(const Context& types) {
  return canonical(Typing{types, TypeExpr::boolean()}).context;
}

int outcome_code(SolveOutcome o) {
  switch (o) {
    case SolveOutcome::kSolved:
      return kExitSolved;
    case SolveOutcome::kFalse:
      return kExitFalse;
    case SolveOutcome::kWrong:
      return kExitWrong;
    case SolveOutcome::kBudgetExceeded:
      return kExitUnknown;
  }
  return kExitInternal;
}

Report cmd_unify(const Options& opts, const SignatureEnv& sig,
                 const std::string& lhs_text, const std::string& rhs_text) {
  Report r;
  r.input = {{"lhs", lhs_text}, {"rhs", rhs_text}};
  Term lhs = parse_term(lhs_text, "<lhs>");
  Term rhs = parse_term(rhs_text, "<rhs>");
  Unification u = typed_unify(lhs, rhs, sig, {opts.trace, opts.max_steps});
  const SolveResult& s = u.result;
  r.code = outcome_code(s.outcome);

  Context types = display_types(u.types);
  r.result = {{"outcome", to_string(s.outcome)},
              {"theta", subst_json(s.theta)},
              {"mu", type_subst_json(s.mu)},
              {"types", type_subst_json(types)},
              {"witness", s.witness ? json(to_string(*s.witness)) : json()},
              {"steps", s.steps},
              {"constraints",
               {{"T1", constraints_json(u.lhs.constraints.types)},
                {"T2", constraints_json(u.rhs.constraints.types)},
                {"initial", state_json(u.constraints)}}}};

  if (opts.trace) {
    r.lines.push_back("T1: " + constraints_text(u.lhs.constraints.types));
    r.lines.push_back("T2: " + constraints_text(u.rhs.constraints.types));
    r.lines.push_back("start: " + to_string(u.constraints));
    for (const auto& step : s.trace) {
      r.lines.push_back(to_string(step));
      r.trace.push_back({{"rule", step.rule},
                         {"constraint", to_string(step.constraint)},
                         {"state", step.is_failure() ? json() : state_json(step.state)}});
    }
  }
  r.lines.emplace_back(to_string(s.outcome));
  if (s.outcome == SolveOutcome::kSolved) {
    r.lines.push_back("theta: " + to_string(s.theta));
  }
  if (s.outcome == SolveOutcome::kSolved || s.outcome == SolveOutcome::kFalse) {
    r.lines.push_back("mu: " + to_string(s.mu));
    r.lines.push_back("types: " + context_to_string(types));
  }
  if (s.witness) r.lines.push_back("witness: " + to_string(*s.witness));
  return r;
}

Report cmd_infer(const SignatureEnv& sig, const std::string& text,
                 bool emit_constraints) {
  Report r;
  r.input = {{"term", text}};
  Term term = parse_term(text, "<term>");
  PrincipalTyping p = principal_typing(term, sig);
  r.code = outcome_code(p.result.outcome);
  r.result["outcome"] = to_string(p.result.outcome);
  if (emit_constraints) {
    const auto& g = p.generated;
    r.result["constraints"] = {{"type", to_string(g.type)},
                               {"C", state_json(g.constraints)["C"]},
                               {"T", state_json(g.constraints)["T"]}};
    r.lines.push_back("type: " + to_string(g.type));
    r.lines.push_back("C: {}");
    r.lines.push_back("T: " + constraints_text(g.constraints.types));
  }
  if (p.typing) {
    Typing shown = canonical(*p.typing);
    json ctx = json::object();
    for (const auto& [k, v] : shown.context) ctx[k] = to_string(v);
    r.result["principal"] = {{"context", ctx}, {"type", to_string(shown.type)}};
    r.lines.push_back(to_string(shown));
  } else {
    r.result["witness"] = p.result.witness ? json(to_string(*p.result.witness))
                                           : json();
    r.lines.emplace_back("wrong");
    if (p.result.witness) {
      r.lines.push_back("witness: " + to_string(*p.result.witness));
    }
  }
  return r;
}

Report cmd_check(const SignatureEnv& sig, const std::string& goal_text,
                 const std::optional<std::string>& type_text,
                 const Context& context) {
  Report r;
  r.input = {{"goal", goal_text}};
  if (type_text) r.input["type"] = *type_text;
  Term goal = parse_goal(goal_text, "<goal>");
  CheckResult c;
  if (goal.is_compound() && goal.name() == "=" && goal.arity() == 2) {
    if (type_text && parse_type(*type_text, "<type>") != TypeExpr::boolean()) {
      c = {false, "an equation has type bool"};
    } else {
      c = check_equation(context, sig, goal.args()[0], goal.args()[1]);
    }
  } else {
    if (!type_text) {
      throw InputError{kExitUsage,
                       {{"usage", "check needs a type unless the goal is an equation",
                         std::nullopt}}};
    }
    c = check(context, sig, goal, parse_type(*type_text, "<type>"));
  }
  r.code = c.derivable ? kExitSolved : kExitFalse;
  r.result = {{"outcome", c.derivable ? "yes" : "no"},
              {"failure", c.derivable ? json() : json(c.failure)}};
  r.lines.push_back(c.derivable ? "yes" : "no: " + c.failure);
  return r;
}

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::kYes:
      return kExitSolved;
    case Verdict::kNoFalse:
      return kExitFalse;
    case Verdict::kNoWrong:
      return kExitWrong;
    case Verdict::kNoUnknown:
      return kExitUnknown;
  }
  return kExitInternal;
}

Report cmd_run(const Options& opts, const SignatureEnv& sig,
               const std::vector<Clause>& program,
               const std::string& query_text) {
  Report r;
  r.input = {{"query", query_text}};
  std::vector<Term> query = parse_query(query_text, "<query>");
  ResolutionBudget budget;
  if (opts.depth) budget.max_depth = static_cast<std::size_t>(*opts.depth);
  if (opts.max_steps != 0) budget.max_steps = opts.max_steps;
  Outcome o = resolve(program, query, sig, budget, opts.trace);
  r.code = verdict_code(o.verdict);

  Context types = display_types(o.types);
  json branches = json::array();
  for (auto b : o.branches) branches.push_back(to_string(b));
  r.result = {{"outcome", to_string(o.verdict)},
              {"theta", subst_json(o.theta)},
              {"types", type_subst_json(types)},
              {"steps", o.steps},
              {"budget_exceeded", o.budget_exceeded},
              {"branches", branches}};
  for (const auto& e : o.trace) {
    r.lines.push_back(to_string(e));
    r.trace.push_back({{"depth", e.depth},
                       {"goal", goal_to_string(e.goal)},
                       {"clause", e.clause >= 0 ? json(e.clause + 1) : json()},
                       {"outcome", to_string(e.outcome)},
                       {"branch", e.end ? json(to_string(*e.end)) : json()}});
  }
  if (o.verdict == Verdict::kYes) {
    r.lines.push_back("yes " + to_string(o.theta));
    r.lines.push_back("types: " + context_to_string(types));
  } else {
    r.lines.emplace_back(to_string(o.verdict));
  }
  if (o.budget_exceeded) r.lines.emplace_back("note: resolution budget exceeded");
  return r;
}

Alphabet parse_alphabet(const std::string& text) {
  Alphabet a;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    item = item.substr(b, e - b + 1);
    auto slash = item.rfind('/');
    if (slash != std::string::npos && slash + 1 < item.size() &&
        item.find_first_not_of("0123456789", slash + 1) == std::string::npos) {
      a.functors.emplace_back(item.substr(0, slash),
                              std::stoul(item.substr(slash + 1)));
      continue;
    }
    Term t = parse_term(item, "<alphabet>");
    if (!t.is_const()) {
      throw InputError{kExitUsage,
                       {{"usage", "alphabet items are constants or name/arity",
                         std::nullopt}}};
    }
    a.constants.push_back(t);
  }
  return a;
}

std::string eq_name(const Value& v) {
  return v.is_wrong() ? "wrong" : (v.truth() ? "true" : "false");
}

std::string expected_outcome(const Value& eq) {
  if (eq.is_wrong()) return "wrong";
  return eq.truth() ? "solved" : "false";
}

Report cmd_oracle(const Options& opts, const SignatureEnv& sig,
                  const std::vector<std::string>& terms,
                  const std::string& alphabet_text, std::size_t samples) {
  Report r;
  const TypeDefSet& defs = sig.defs();
  if (terms.size() == 1) {
    r.input = {{"term", terms[0]}};
    Value v = eval(parse_term(terms[0], "<term>"), {}, defs);
    r.result = {{"outcome", "value"},
                {"value", to_string(v)},
                {"domain", to_string(dom(v))}};
    r.lines.push_back(to_string(v));
    r.lines.push_back("domain: " + to_string(dom(v)));
    return r;
  }
  if (terms.size() == 2) {
    r.input = {{"lhs", terms[0]}, {"rhs", terms[1]}};
    Term lhs = parse_term(terms[0], "<lhs>");
    Term rhs = parse_term(terms[1], "<rhs>");
    Value a = eval(lhs, {}, defs);
    Value b = eval(rhs, {}, defs);
    Value eq = eq_values(a, b);
    SolveOutcome o = typed_unify(lhs, rhs, sig).result.outcome;
    bool agree = expected_outcome(eq) == to_string(o);
    r.code = agree ? kExitSolved : kExitInternal;
    r.result = {{"outcome", agree ? "agree" : "mismatch"},
                {"values", {to_string(a), to_string(b)}},
                {"eq", eq_name(eq)},
                {"solver", to_string(o)}};
    r.lines.push_back("values: " + to_string(a) + ", " + to_string(b));
    r.lines.push_back("eq: " + eq_name(eq));
    r.lines.push_back("solver: " + std::string(to_string(o)));
    r.lines.emplace_back(agree ? "agree" : "mismatch");
    return r;
  }

  const int depth = opts.depth.value_or(1);
  r.input = {{"alphabet", alphabet_text}, {"depth", depth},
             {"samples", samples}, {"seed", opts.seed}};
  std::vector<Term> space;
  try {
    space = enumerate_ground_terms(parse_alphabet(alphabet_text), depth);
  } catch (const BudgetExceeded& e) {
    throw InputError{kExitInput, {{"budget", e.what(), std::nullopt}}};
  }
  std::map<std::string, std::size_t> counts;
  std::size_t checked = 0;
  json mismatches = json::array();
  auto check_pair = [&](const Term& lhs, const Term& rhs) {
    Value eq = eq_values(eval(lhs, {}, defs), eval(rhs, {}, defs));
    SolveOutcome o = typed_unify(lhs, rhs, sig).result.outcome;
    ++checked;
    ++counts[std::string(to_string(o))];
    if (expected_outcome(eq) != to_string(o)) {
      mismatches.push_back({{"lhs", to_string(lhs)},
                            {"rhs", to_string(rhs)},
                            {"eq", eq_name(eq)},
                            {"solver", to_string(o)}});
    }
  };
  if (samples == 0) {
    for (const auto& lhs : space) {
      for (const auto& rhs : space) check_pair(lhs, rhs);
    }
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::size_t> pick(0, space.size() - 1);
    for (std::size_t i = 0; i < samples; ++i) {
      check_pair(space[pick(rng)], space[pick(rng)]);
    }
  }
  r.code = mismatches.empty() ? kExitSolved : kExitInternal;
  r.result = {{"outcome", mismatches.empty() ? "agree" : "mismatch"},
              {"terms", space.size()},
              {"pairs", checked},
              {"counts", counts},
              {"mismatches", mismatches}};
  r.lines.push_back("terms: " + std::to_string(space.size()));
  r.lines.push_back("pairs: " + std::to_string(checked));
  for (const auto& [k, n] : counts) {
    r.lines.push_back(k + ": " + std::to_string(n));
  }
  for (const auto& m : mismatches) {
    r.lines.push_back("mismatch: " + m["lhs"].get<std::string>() + " = " +
                      m["rhs"].get<std::string>() + " eq " +
                      m["eq"].get<std::string>() + ", solver " +
                      m["solver"].get<std::string>());
  }
  r.lines.emplace_back(mismatches.empty() ? "agree" : "mismatch");
  return r;
}

Report cmd_validate(const SignatureEnv& sig, const std::string& file) {
  Report r;
  r.input = {{"file", file}};
  json defs = json::array();
  for (const auto& [head, def] : sig.defs().defs()) defs.push_back(head);
  json schemes = json::object();
  std::vector<std::string> lines;
  for (const auto& [name, s] : sig.constants()) {
    schemes[name] = to_string(s);
    lines.push_back(quote_atom(name) + " : " + to_string(s));
  }
  for (const auto& [key, s] : sig.functions()) {
    std::string name = key.first + "/" + std::to_string(key.second);
    schemes[name] = to_string(s);
    lines.push_back(quote_atom(key.first) + " : " + to_string(s));
  }
  for (const auto& [key, s] : sig.predicates()) {
    std::string name = key.first + "/" + std::to_string(key.second);
    schemes[name] = to_string(s);
    lines.push_back(quote_atom(key.first) + " : " + to_string(s));
  }
  r.result = {{"outcome", "ok"}, {"definitions", defs}, {"signatures", schemes}};
  r.lines.push_back("ok: " + std::to_string(defs.size()) + " definitions");
  for (auto& l : lines) r.lines.push_back(std::move(l));
  return r;
}

json diagnostics_json(const std::vector<Diagnostic>& ds) {
  json out = json::array();
  for (const auto& d : ds) {
    json j = {{"kind", d.kind}, {"message", d.message}};
    if (d.span) {
      j["file"] = d.span->file;
      j["line"] = d.span->line;
      j["column"] = d.span->column;
    }
    out.push_back(j);
  }
  return out;
}

void emit(const Options& opts, const std::string& command, const Report& r,
          std::ostream& out) {
  if (opts.json) {
    json doc = {{"schema", kSchema},
                {"command", command},
                {"input", r.input},
                {"result", r.result},
                {"trace", r.trace},
                {"diagnostics", json::array()}};
    out << doc.dump(2) << "\n";
    return;
  }
  for (const auto& line : r.lines) out << line << "\n";
}

int emit_error(const Options& opts, const std::string& command,
               const InputError& e, std::ostream& out, std::ostream& err) {
  if (opts.json) {
    json doc = {{"schema", kSchema},
                {"command", command},
                {"input", json::object()},
                {"result", {{"outcome", "error"}}},
                {"trace", json::array()},
                {"diagnostics", diagnostics_json(e.diagnostics)}};
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& d : e.diagnostics) {
      if (d.span) err << d.span->to_string() << ": ";
      err << d.kind << ": " << d.message << "\n";
    }
  }
  return e.code;
}

// Runs body, turning library errors into diagnostics.
template <typename Body>
int guarded(const Options& opts, const std::string& command, Body body,
            std::ostream& out, std::ostream& err) {
  try {
    return body();
  } catch (const InputError& e) {
    return emit_error(opts, command, e, out, err);
  } catch (const SyntaxError& e) {
    std::string what = e.what();
    std::string message = what.substr(what.find(": ") + 2);
    return emit_error(opts, command,
                      {kExitInput, {{"syntax", message, e.span()}}}, out, err);
  } catch (const SignatureError& e) {
    return emit_error(opts, command,
                      {kExitInput, {{"signature", e.what(), e.span()}}}, out,
                      err);
  } catch (const TypingError& e) {
    return emit_error(opts, command,
                      {kExitInput, {{"typing", e.what(), std::nullopt}}}, out,
                      err);
  } catch (const UnboundVariable& e) {
    return emit_error(opts, command,
                      {kExitInput, {{"oracle", e.what(), std::nullopt}}}, out,
                      err);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

int run_repl(Options opts, const SignatureEnv& sig,
             const std::vector<Clause>& program, std::istream& in,
             std::ostream& out, std::ostream& err) {
  std::string line;
  while (out << "?- " << std::flush, std::getline(in, line)) {
    auto b = line.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    line = line.substr(b);
    if (line == ":q" || line == ":quit") break;
    guarded(
        opts, "repl",
        [&] {
          Report r;
          if (line.rfind("?-", 0) == 0) {
            r = cmd_run(opts, sig, program, line);
          } else {
            Term goal = parse_goal(line, "<repl>");
            if (goal.is_compound() && goal.name() == "=" && goal.arity() == 2) {
              r = cmd_unify(opts, sig, to_string(goal.args()[0]),
                            to_string(goal.args()[1]));
            } else {
              r = cmd_infer(sig, line, false);
            }
          }
          emit(opts, "repl", r, out);
          return r.code;
        },
        out, err);
  }
  return kExitSolved;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"Typed unification over deterministic regular types",
               "regunify"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_option("--types", opts.types_file, "Type definitions file")
      ->envname("REGUNIFY_TYPES");
  app.add_option("--sig", opts.sig_file, "Signature declarations file");
  app.add_flag("--json", opts.json, "Structured output");
  app.add_flag("--trace", opts.trace, "Show every rewriting or resolution step");
  app.add_option("--depth", opts.depth, "Enumeration or resolution depth")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", opts.seed, "Random seed for sampling");
  app.add_option("--max-steps", opts.max_steps, "Step budget, 0 for none");

  std::string file;
  std::string first;
  std::string second;
  std::string query;
  std::string context_file;
  std::string gamma;
  std::string alphabet = kDefaultAlphabet;
  std::size_t samples = 0;
  bool emit_constraints = false;
  std::string program_file;

  auto* validate = app.add_subcommand("validate", "Check a type definitions file");
  validate->add_option("file", file, "Type definitions file");

  auto* infer = app.add_subcommand("infer", "Principal typing of a term");
  infer->add_option("term", first, "Term")->required();
  infer->add_flag("--emit-constraints", emit_constraints,
                  "Print the generated constraints");

  auto* check_cmd = app.add_subcommand(
      "check", "Decide whether a term or equation has a type in a context");
  check_cmd->add_option("goal", first, "Term or equation")->required();
  auto* check_type = check_cmd->add_option("type", second, "Type of a term");
  check_cmd->add_option("--context", context_file, "Context file (X : type, ...)");
  check_cmd->add_option("--gamma", gamma, "Inline context, e.g. \"X : int\"");

  auto* unify = app.add_subcommand("unify", "Typed unification of two terms");
  unify->add_option("lhs", first, "Left term")->required();
  unify->add_option("rhs", second, "Right term")->required();

  auto* run = app.add_subcommand("run", "Answer a query against a program");
  run->add_option("program", file, "Program file")->required();
  run->add_option("-q,--query", query, "Comma-separated goals")->required();

  auto* oracle = app.add_subcommand(
      "oracle", "Evaluate ground terms, or compare the solver with evaluation");
  auto* oracle_lhs =
      oracle->add_option("lhs", first, "Ground term to evaluate");
  auto* oracle_rhs =
      oracle->add_option("rhs", second, "Ground term to compare with");
  oracle->add_option("--alphabet", alphabet,
                     "Constants and name/arity functors to enumerate");
  oracle->add_option("--samples", samples,
                     "Random pairs to check, 0 for all pairs");

  auto* repl = app.add_subcommand("repl", "Read equations and queries from input");
  repl->add_option("--program", program_file, "Program for ?- queries");

  std::vector<std::string> argv_store = {"regunify"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  return guarded(
      opts, command,
      [&]() -> int {
        if (command == "validate") {
          if (file.empty() && opts.types_file.empty()) {
            throw InputError{kExitUsage,
                             {{"usage", "validate needs a file", std::nullopt}}};
          }
          if (!file.empty()) opts.types_file = file;
          Report r = cmd_validate(load_signatures(opts), opts.types_file);
          emit(opts, command, r, out);
          return r.code;
        }
        SignatureEnv sig = load_signatures(opts);
        Report r;
        if (command == "infer") {
          r = cmd_infer(sig, first, emit_constraints);
        } else if (command == "check") {
          Context context;
          std::string text = gamma;
          std::string source = "<gamma>";
          if (!context_file.empty()) {
            text = read_file(context_file);
            source = context_file;
          }
          for (auto& [name, type] : parse_context(text, source)) {
            context.insert_or_assign(name, type);
          }
          std::optional<std::string> type;
          if (check_type->count() > 0) type = second;
          r = cmd_check(sig, first, type, context);
        } else if (command == "unify") {
          r = cmd_unify(opts, sig, first, second);
        } else if (command == "run") {
          r = cmd_run(opts, sig, parse_program(read_file(file), file), query);
        } else if (command == "oracle") {
          std::vector<std::string> terms;
          if (oracle_lhs->count() > 0) terms.push_back(first);
          if (oracle_rhs->count() > 0) terms.push_back(second);
          r = cmd_oracle(opts, sig, terms, alphabet, samples);
        } else {
          std::vector<Clause> program;
          if (!program_file.empty()) {
            program = parse_program(read_file(program_file), program_file);
          }
          return run_repl(opts, sig, program, in, out, err);
        }
        emit(opts, command, r, out);
        return r.code;
      },
      out, err);
}

}  // namespace regunify
