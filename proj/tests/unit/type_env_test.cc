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

#include <algorithm>

#include "regunify/parser.h"
#include "regunify/print.h"
#include "regunify/type_env.h"

namespace regunify {
namespace {

std::vector<ValidationErrorKind> kinds_of(const char* text) {
  auto r = TypeDefSet::validate(parse_typedefs(text));
  std::vector<ValidationErrorKind> out;
  if (auto* errors = std::get_if<std::vector<ValidationError>>(&r)) {
    for (const auto& e : *errors) out.push_back(e.kind);
  }
  return out;
}

bool has(const std::vector<ValidationErrorKind>& ks, ValidationErrorKind k) {
  return std::find(ks.begin(), ks.end(), k) != ks.end();
}

TypeDefSet valid(const char* text) {
  return std::get<TypeDefSet>(TypeDefSet::validate(parse_typedefs(text)));
}

TypeScheme scheme(const char* text) {
  return parse_signatures(std::string("x : ") + text + ".").front().scheme;
}

TEST(Validate, AcceptsListDefinition) {
  EXPECT_TRUE(kinds_of("list(A) --> [] + cons(A, list(A)).").empty());
  EXPECT_TRUE(kinds_of("list(B) --> cons(B, list(B)) + [].").empty());
}

TEST(Validate, BuiltinListAlwaysPresent) {
  TypeDefSet d = valid("");
  ASSERT_NE(d.find("list"), nullptr);
  EXPECT_TRUE(d.find_constructor("cons").has_value());
  EXPECT_TRUE(d.find_constructor("[]").has_value());
}

TEST(Validate, DuplicateConstructorAcrossDefinitions) {
  EXPECT_TRUE(has(kinds_of("t(A) --> f(A).\ns(B) --> f(B)."),
                  ValidationErrorKind::kDuplicateConstructor));
}

TEST(Validate, DuplicateConstructorAgainstList) {
  EXPECT_TRUE(has(kinds_of("t --> cons(int, t) + e."),
                  ValidationErrorKind::kDuplicateConstructor));
}

TEST(Validate, RepeatedParameter) {
  auto ks = kinds_of("t(A, A) --> f(A).");
  EXPECT_TRUE(has(ks, ValidationErrorKind::kDuplicateParam) ||
              has(ks, ValidationErrorKind::kUnusedParam));
}

TEST(Validate, UnusedParameter) {
  EXPECT_TRUE(has(kinds_of("t(A, B) --> f(A)."),
                  ValidationErrorKind::kUnusedParam));
}

TEST(Validate, UnboundVariable) {
  EXPECT_TRUE(has(kinds_of("t(A) --> f(A, B)."),
                  ValidationErrorKind::kUnboundTypeVar));
}

TEST(Validate, IllegalSummands) {
  EXPECT_TRUE(has(kinds_of("t(A) --> A + f(A)."),
                  ValidationErrorKind::kIllegalSummand));
  EXPECT_TRUE(has(kinds_of("t --> int + k."),
                  ValidationErrorKind::kIllegalSummand));
  EXPECT_TRUE(has(kinds_of("t --> bool + k."),
                  ValidationErrorKind::kIllegalSummand));
}

TEST(Validate, ReportsEveryViolation) {
  auto ks = kinds_of("t(A) --> f(A).\ns(B) --> f(B).\nu(C, D) --> g(C, E).");
  EXPECT_TRUE(has(ks, ValidationErrorKind::kDuplicateConstructor));
  EXPECT_TRUE(has(ks, ValidationErrorKind::kUnusedParam));
  EXPECT_TRUE(has(ks, ValidationErrorKind::kUnboundTypeVar));
}

TEST(Validate, UnknownTypeSymbolAndArity) {
  EXPECT_TRUE(has(kinds_of("t --> f(nosuch)."),
                  ValidationErrorKind::kUnknownTypeSymbol));
  EXPECT_TRUE(has(kinds_of("t --> f(list(int, int))."),
                  ValidationErrorKind::kArityMismatch));
}

TEST(Validate, MutualRecursionAllowed) {
  EXPECT_TRUE(kinds_of("even --> z + se(odd).\nodd --> so(even).").empty());
}

TEST(Validate, ConflictingListRedefinition) {
  EXPECT_FALSE(kinds_of("list(A) --> [] + cons(A, list(int)).").empty());
}

TEST(DeriveSignatures, ListSchemes) {
  SignatureEnv sig = derive_signatures(TypeDefSet::builtin());
  EXPECT_TRUE(alpha_equivalent(sig.constant(Term::nil()), scheme("list(A)")));
  EXPECT_TRUE(alpha_equivalent(sig.function("cons", 2),
                               scheme("A * list(A) -> list(A)")));
}

TEST(DeriveSignatures, Literals) {
  SignatureEnv sig = derive_signatures(TypeDefSet::builtin());
  EXPECT_EQ(sig.constant(Term::integer(1)).type(), TypeExpr::base(BaseType::kInt));
  EXPECT_EQ(sig.constant(Term::constant("0.5", LiteralKind::kFloat)).type(),
            TypeExpr::base(BaseType::kFloat));
  EXPECT_EQ(sig.constant(Term::constant("s", LiteralKind::kString)).type(),
            TypeExpr::base(BaseType::kString));
  EXPECT_EQ(sig.constant(Term::atom("a")).type(), TypeExpr::base(BaseType::kAtom));
}

TEST(DeriveSignatures, UndeclaredFunctorIsFreeConstructor) {
  SignatureEnv sig = derive_signatures(TypeDefSet::builtin());
  EXPECT_TRUE(alpha_equivalent(sig.function("g", 2),
                               scheme("A * B -> g'(A, B)")));
}

TEST(DeriveSignatures, UndeclaredPredicateIsGeneric) {
  SignatureEnv sig = derive_signatures(TypeDefSet::builtin());
  EXPECT_TRUE(alpha_equivalent(sig.predicate("p", 2), scheme("A * B -> bool")));
}

TEST(DeriveSignatures, UserDefinitions) {
  SignatureEnv sig = derive_signatures(
      valid("tree(A) --> leaf + node(tree(A), A, tree(A))."));
  EXPECT_TRUE(alpha_equivalent(sig.constant(Term::atom("leaf")),
                               scheme("tree(A)")));
  EXPECT_TRUE(alpha_equivalent(sig.function("node", 3),
                               scheme("tree(A) * A * tree(A) -> tree(A)")));
}

TEST(DeriveSignatures, GenericsAreBodyVariables) {
  SignatureEnv sig = derive_signatures(
      valid("tree(A) --> leaf + node(tree(A), A, tree(A))."));
  for (const auto& [key, s] : sig.functions()) {
    std::vector<std::string> body;
    collect_vars(s.func(), body);
    EXPECT_EQ(std::set<std::string>(body.begin(), body.end()),
              std::set<std::string>(s.generics.begin(), s.generics.end()));
  }
}

TEST(DeriveSignatures, PredicateOverride) {
  SignatureEnv sig = derive_signatures(
      TypeDefSet::builtin(),
      parse_signatures("length : list(A) * int -> bool."));
  EXPECT_TRUE(alpha_equivalent(sig.predicate("length", 2),
                               scheme("list(A) * int -> bool")));
}

TEST(DeriveSignatures, ConflictingConstructorOverride) {
  EXPECT_THROW(derive_signatures(TypeDefSet::builtin(),
                                 parse_signatures("cons : A * A * A -> list(A).")),
               SignatureError);
  EXPECT_THROW(derive_signatures(TypeDefSet::builtin(),
                                 parse_signatures("cons : int * list(int) -> list(int).")),
               SignatureError);
}

TEST(DeriveSignatures, LiteralOverrideRejected) {
  try {
    derive_signatures(TypeDefSet::builtin(), parse_signatures("1 : atom."));
    FAIL() << "expected a SignatureError";
  } catch (const SignatureError& e) {
    EXPECT_EQ(e.kind(), SignatureError::Kind::kLiteralOverride);
  }
}

TEST(DeriveSignatures, Deterministic) {
  auto a = derive_signatures(valid("nat --> zero + s(nat)."));
  auto b = derive_signatures(valid("nat --> zero + s(nat)."));
  EXPECT_EQ(to_string(a.function("s", 1)), to_string(b.function("s", 1)));
  EXPECT_EQ(a.functions().size(), b.functions().size());
}

TEST(SignatureEnv, DefaultsCanBeDisabled) {
  SignatureEnv sig = derive_signatures(TypeDefSet::builtin());
  sig.set_defaults_enabled(false);
  EXPECT_THROW(sig.function("g", 2), TypingError);
  EXPECT_THROW(sig.constant(Term::atom("a")), TypingError);
  EXPECT_NO_THROW(sig.constant(Term::integer(3)));
  EXPECT_NO_THROW(sig.function("cons", 2));
}

TEST(SignatureEnv, ConstructorAtWrongArity) {
  SignatureEnv sig = derive_signatures(TypeDefSet::builtin());
  try {
    sig.function("cons", 3);
    FAIL() << "expected a TypingError";
  } catch (const TypingError& e) {
    EXPECT_EQ(e.kind(), TypingError::Kind::kArityMismatch);
  }
}

}  // namespace
}  // namespace regunify
