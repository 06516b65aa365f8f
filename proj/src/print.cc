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

#include "regunify/print.h"

#include <cctype>

namespace regunify {

namespace {

bool is_plain_atom(std::string_view name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0]))) {
    return false;
  }
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

bool is_infix(const Term& t) {
  return t.is_compound() && t.arity() == 2 && t.name() == "+";
}

void print_term(const Term& t, std::string& out);

void print_args(const std::vector<Term>& args, std::string& out) {
  out += '(';
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) out += ", ";
    print_term(args[i], out);
  }
  out += ')';
}

void print_term(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      out += t.name();
      return;
    case Term::Kind::kConst:
      switch (t.literal_kind()) {
        case LiteralKind::kInt:
        case LiteralKind::kFloat:
          out += t.name();
          return;
        case LiteralKind::kString:
          out += '"';
          for (char c : t.name()) {
            if (c == '"' || c == '\\') out += '\\';
            if (c == '\n') {
              out += "\\n";
              continue;
            }
            out += c;
          }
          out += '"';
          return;
        case LiteralKind::kAtom:
          out += quote_atom(t.name());
          return;
      }
      return;
    case Term::Kind::kCompound:
      break;
  }
  if (t.is_cons()) {
    out += '[';
    Term cur = t;
    bool first = true;
    while (cur.is_cons()) {
      if (!first) out += ", ";
      first = false;
      print_term(cur.args()[0], out);
      cur = cur.args()[1];
    }
    if (!cur.is_nil()) {
      out += " | ";
      print_term(cur, out);
    }
    out += ']';
    return;
  }
  if (is_infix(t)) {
    print_term(t.args()[0], out);
    out += " + ";
    const Term& rhs = t.args()[1];
    if (is_infix(rhs)) out += '(';
    print_term(rhs, out);
    if (is_infix(rhs)) out += ')';
    return;
  }
  out += quote_atom(t.name());
  print_args(t.args(), out);
}

void print_type(const TypeExpr& t, std::string& out) {
  if (t.kind() == TypeExpr::Kind::kCtor && t.arity() == 0) {
    out += quote_atom(t.name());
    return;
  }
  if (t.kind() == TypeExpr::Kind::kSym || t.kind() == TypeExpr::Kind::kCtor) {
    if (is_implicit_type_symbol(t.name())) {
      std::string_view base(t.name());
      base.remove_suffix(1);
      out += quote_atom(base);
      out += '\'';
    } else {
      out += quote_atom(t.name());
    }
  } else {
    out += t.name();
  }
  if (t.arity() == 0) return;
  out += '(';
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i > 0) out += ", ";
    print_type(t.args()[i], out);
  }
  out += ')';
}

}  // namespace

std::string quote_atom(std::string_view name) {
  if (is_plain_atom(name) || name == "[]") return std::string(name);
  std::string out = "'";
  for (char c : name) {
    if (c == '\'' || c == '\\') out += '\\';
    out += c;
  }
  out += '\'';
  return out;
}

std::string to_string(const Term& term) {
  std::string out;
  print_term(term, out);
  return out;
}

std::string goal_to_string(const Term& goal) {
  if (goal.is_compound() && goal.arity() == 2 &&
      (goal.name() == "=" || goal.name() == "is")) {
    return to_string(goal.args()[0]) + " " + goal.name() + " " +
           to_string(goal.args()[1]);
  }
  return to_string(goal);
}

std::string to_string(const TypeExpr& type) {
  std::string out;
  print_type(type, out);
  return out;
}

std::string to_string(const FuncType& type) {
  std::string out;
  for (std::size_t i = 0; i < type.domain.size(); ++i) {
    if (i > 0) out += " * ";
    print_type(type.domain[i], out);
  }
  out += " -> ";
  print_type(type.codomain, out);
  return out;
}

std::string to_string(const TypeScheme& scheme) {
  return scheme.is_function() ? to_string(scheme.func())
                              : to_string(scheme.type());
}

std::string to_string(const Subst& subst) {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, value] : subst) {
    if (!first) out += ", ";
    first = false;
    out += name + " = " + to_string(value);
  }
  return out + "}";
}

std::string to_string(const TypeSubst& subst) {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, value] : subst) {
    if (!first) out += ", ";
    first = false;
    out += name + " = " + to_string(value);
  }
  return out + "}";
}

std::ostream& operator<<(std::ostream& os, const Term& term) {
  return os << to_string(term);
}

std::ostream& operator<<(std::ostream& os, const TypeExpr& type) {
  return os << to_string(type);
}

}  // namespace regunify
