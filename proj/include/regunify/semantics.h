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

#ifndef REGUNIFY_SEMANTICS_H_
#define REGUNIFY_SEMANTICS_H_

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "regunify/term.h"
#include "regunify/type_env.h"
#include "regunify/type_expr.h"

namespace regunify {

// A domain is described by a type pattern. Pattern variables stand for any
// domain, so the pattern list(V) is the set of all list domains, which is
// where the empty list lives.
struct DomainTag {
  bool wrong = false;
  TypeExpr pattern = TypeExpr::boolean();

  static DomainTag of(TypeExpr pattern) { return {false, std::move(pattern)}; }
  static DomainTag wrong_domain() { return {true, TypeExpr::boolean()}; }
  // The empty list is the only value with more than one domain.
  bool is_multiple() const { return !wrong && !pattern.is_ground(); }
};

bool intersects(const DomainTag& a, const DomainTag& b);
std::string to_string(const DomainTag& tag);

class Value {
 public:
  enum class Kind { kInt, kFloat, kString, kAtom, kTree, kNil, kCons, kBool,
                    kWrong };

  static Value integer(std::string text);
  static Value floating(std::string text);
  static Value string(std::string text);
  static Value atom(std::string name);
  static Value boolean(bool value);
  static Value wrong();
  static Value nil();

  // Applies the fixed interpretation of the symbol. Yields wrong when any
  // child is wrong or when a defined constructor gets arguments from no
  // common instance of its declared argument types.
  static Value apply(const std::string& symbol, std::vector<Value> children,
                     const TypeDefSet& defs);
  // A constant; constructor constants of defined types become leaf trees.
  static Value constant(const std::string& symbol, const TypeDefSet& defs);

  Kind kind() const;
  bool is_wrong() const { return kind() == Kind::kWrong; }
  // Leaf text, tree root or "cons".
  const std::string& label() const;
  const std::vector<Value>& children() const;
  bool truth() const;
  const DomainTag& domain() const;

  friend bool operator==(const Value& a, const Value& b);
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

 private:
  struct Rep;
  explicit Value(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

std::string to_string(const Value& value);

using GroundState = std::map<std::string, Value>;

class UnboundVariable : public std::runtime_error {
 public:
  explicit UnboundVariable(const std::string& name)
      : std::runtime_error("unbound variable " + name) {}
};

class NonGroundType : public std::invalid_argument {
 public:
  explicit NonGroundType(const std::string& type)
      : std::invalid_argument("type is not ground: " + type) {}
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Value eval(const Term& term, const GroundState& state = {},
           const TypeDefSet& defs = TypeDefSet::builtin());
const DomainTag& dom(const Value& value);
// Three-valued equality: a boolean value or wrong.
Value eq_values(const Value& a, const Value& b);
bool member(const Value& value, const TypeExpr& type,
            const TypeDefSet& defs = TypeDefSet::builtin());

struct LiteralPool {
  std::vector<std::string> ints = {"0", "1"};
  std::vector<std::string> floats = {"0.5"};
  std::vector<std::string> strings = {"a"};
};

struct Alphabet {
  std::vector<Term> constants;
  std::vector<std::pair<std::string, std::size_t>> functors;

  // Declared constants and constructors of sig plus the literals of pool.
  static Alphabet from(const SignatureEnv& sig, const LiteralPool& pool = {});
};

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

// Ground terms of depth at most depth, where constants have depth 0. Throws
// BudgetExceeded before building more than cap terms.
std::vector<Term> enumerate_ground_terms(
    const Alphabet& alphabet, int depth,
    std::size_t cap = kDefaultEnumerationCap);

}  // namespace regunify

#endif  // REGUNIFY_SEMANTICS_H_
