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

#ifndef REGUNIFY_TYPE_ENV_H_
#define REGUNIFY_TYPE_ENV_H_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "regunify/source_span.h"
#include "regunify/term.h"
#include "regunify/type_expr.h"

namespace regunify {

// tsym(A1,...,An) --> summand_1 + ... + summand_m.
struct TypeDef {
  std::string head;
  std::vector<std::string> params;
  // Constructor applications. Anything else is rejected by validation.
  std::vector<TypeExpr> summands;
  SourceSpan span;

  TypeExpr head_type() const;
};

enum class ValidationErrorKind {
  kDuplicateConstructor,
  kUnboundTypeVar,
  kUnusedParam,
  kDuplicateParam,
  kIllegalSummand,
  kDuplicateTypeSymbol,
  kUnknownTypeSymbol,
  kArityMismatch,
  kReservedName,
};

std::string_view to_string(ValidationErrorKind kind);

struct ValidationError {
  ValidationErrorKind kind;
  std::string message;
  SourceSpan span;
};

// A validated, deterministic set of type definitions. Always contains the
// list definition list(A) --> [] + cons(A, list(A)).
class TypeDefSet {
 public:
  // Validates defs together with the built-in list definition. Returns every
  // violation found when the set is not well-formed or not deterministic.
  static std::variant<TypeDefSet, std::vector<ValidationError>> validate(
      std::vector<TypeDef> defs);
  static const TypeDefSet& builtin();

  const TypeDef* find(std::string_view head) const;

  struct Constructor {
    const TypeDef* def;
    std::size_t summand;
    const TypeExpr& type() const { return def->summands[summand]; }
  };
  std::optional<Constructor> find_constructor(std::string_view name) const;

  const std::map<std::string, TypeDef, std::less<>>& defs() const {
    return defs_;
  }

  // Checks that every type symbol in type is defined with the right arity
  // (implicit f' symbols are always accepted). Returns a message otherwise.
  std::optional<std::string> check_type(const TypeExpr& type) const;

 private:
  TypeDefSet() = default;
  void index();

  std::map<std::string, TypeDef, std::less<>> defs_;
  std::map<std::string, std::pair<std::string, std::size_t>, std::less<>>
      constructors_;
};

// One line of a signature override file, e.g. length : list(A) * int -> bool.
struct SignatureDecl {
  std::string name;
  // Kind of the declared symbol; anything but kAtom is rejected.
  LiteralKind name_kind = LiteralKind::kAtom;
  TypeScheme scheme;
  SourceSpan span;

  std::size_t arity() const {
    return scheme.is_function() ? scheme.func().domain.size() : 0;
  }
  bool is_predicate() const {
    return scheme.is_function() &&
           scheme.func().codomain.kind() == TypeExpr::Kind::kBool;
  }
};

class SignatureError : public std::runtime_error {
 public:
  enum class Kind { kConflictingOverride, kLiteralOverride, kBadType };
  SignatureError(Kind kind, const std::string& message, SourceSpan span)
      : std::runtime_error(message), kind_(kind), span_(std::move(span)) {}
  Kind kind() const { return kind_; }
  const SourceSpan& span() const { return span_; }

 private:
  Kind kind_;
  SourceSpan span_;
};

// Raised while typing a term against a signature environment.
class TypingError : public std::runtime_error {
 public:
  enum class Kind { kUnknownSymbol, kArityMismatch };
  TypingError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Type schemes for constants, function symbols and predicates. Symbols that
// are neither derived from definitions nor overridden get defaults: literals
// their base type, atoms atom, f/n the free-constructor scheme
// A1 x ... x An -> f'(A1,...,An) and predicates p/n A1 x ... x An -> bool.
class SignatureEnv {
 public:
  TypeScheme constant(const Term& constant) const;
  TypeScheme function(std::string_view functor, std::size_t arity) const;
  TypeScheme predicate(std::string_view name, std::size_t arity) const;

  // With defaults disabled, undeclared atoms, functors and predicates raise
  // TypingError::kUnknownSymbol. Literals are always typed.
  void set_defaults_enabled(bool enabled) { defaults_enabled_ = enabled; }
  bool defaults_enabled() const { return defaults_enabled_; }

  const TypeDefSet& defs() const { return *defs_; }
  const std::map<std::string, TypeScheme, std::less<>>& constants() const {
    return constants_;
  }
  const std::map<std::pair<std::string, std::size_t>, TypeScheme>& functions()
      const {
    return functions_;
  }
  const std::map<std::pair<std::string, std::size_t>, TypeScheme>& predicates()
      const {
    return predicates_;
  }

 private:
  friend SignatureEnv derive_signatures(const TypeDefSet&,
                                        const std::vector<SignatureDecl>&);

  void check_declared_arity(std::string_view name, std::size_t arity) const;

  std::shared_ptr<const TypeDefSet> defs_;
  std::map<std::string, TypeScheme, std::less<>> constants_;
  std::map<std::pair<std::string, std::size_t>, TypeScheme> functions_;
  std::map<std::pair<std::string, std::size_t>, TypeScheme> predicates_;
  // Arities at which each constructor or overridden function is declared.
  std::map<std::string, std::set<std::size_t>, std::less<>> declared_arities_;
  bool defaults_enabled_ = true;
};

// Throws SignatureError when an override contradicts a derived constructor,
// names a numeric or string literal, or uses an unknown type symbol.
SignatureEnv derive_signatures(const TypeDefSet& defs,
                               const std::vector<SignatureDecl>& overrides = {});

// True iff a and b are equal up to a bijective renaming of type variables.
bool alpha_equivalent(const TypeScheme& a, const TypeScheme& b);

}  // namespace regunify

#endif  // REGUNIFY_TYPE_ENV_H_
