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

#ifndef REGUNIFY_TERM_H_
#define REGUNIFY_TERM_H_

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace regunify {

// Literal kind of a constant. Drives the default typing of constants that
// have no declaration: integers are int, floats float, strings string and
// everything else atom.
enum class LiteralKind { kInt, kFloat, kString, kAtom };

inline constexpr std::string_view kNilSymbol = "[]";
inline constexpr std::string_view kConsSymbol = "cons";

// Immutable first-order term: a variable, a constant or a compound term
// f(t1,...,tn) with n >= 1. Copies share structure.
class Term {
 public:
  enum class Kind { kVar, kConst, kCompound };

  static Term var(std::string name);
  static Term constant(std::string symbol, LiteralKind kind);
  static Term atom(std::string symbol) {
    return constant(std::move(symbol), LiteralKind::kAtom);
  }
  static Term integer(long long value);
  static Term nil() { return atom(std::string(kNilSymbol)); }
  // Throws std::invalid_argument when args is empty.
  static Term compound(std::string functor, std::vector<Term> args);
  static Term cons(Term head, Term tail);

  Kind kind() const;
  bool is_var() const { return kind() == Kind::kVar; }
  bool is_const() const { return kind() == Kind::kConst; }
  bool is_compound() const { return kind() == Kind::kCompound; }
  bool is_nil() const {
    return is_const() && literal_kind() == LiteralKind::kAtom &&
           name() == kNilSymbol;
  }
  bool is_cons() const {
    return is_compound() && arity() == 2 && name() == kConsSymbol;
  }

  // Variable name, constant symbol or functor.
  const std::string& name() const;
  // Only meaningful for constants.
  LiteralKind literal_kind() const;
  const std::vector<Term>& args() const;
  std::size_t arity() const { return args().size(); }
  // Number of nodes.
  std::size_t size() const;
  bool is_ground() const;

  // Same rigid head: both constants with equal symbol and kind, or both
  // compounds with equal functor and arity.
  bool same_head(const Term& other) const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Rep;
  explicit Term(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

// Finite map from variable names to terms.
using Subst = std::map<std::string, Term>;

// Simultaneous substitution.
Term apply_subst(const Subst& subst, const Term& term);
bool occurs_in(std::string_view var, const Term& term);
std::set<std::string> free_vars(const Term& term);
// Variables of term appended to out in order of first occurrence, skipping
// names already present.
void collect_vars(const Term& term, std::vector<std::string>& out);

// Composition: applying the result equals applying first then second.
Subst compose(const Subst& first, const Subst& second);

}  // namespace regunify

#endif  // REGUNIFY_TERM_H_
