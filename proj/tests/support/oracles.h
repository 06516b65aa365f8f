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

#ifndef REGUNIFY_TESTS_SUPPORT_ORACLES_H_
#define REGUNIFY_TESTS_SUPPORT_ORACLES_H_

#include <cstdint>
#include <map>
#include <string>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "regunify/constraints.h"
#include "regunify/term.h"
#include "regunify/type_expr.h"

namespace regunify::oracle {

// Textbook recursive Robinson unification with occurs check, no types.
std::optional<Subst> robinson(std::vector<std::pair<Term, Term>> pairs);

// The same algorithm over type expressions; every non-variable node is rigid.
std::optional<TypeSubst> unify_types(
    std::vector<std::pair<TypeExpr, TypeExpr>> pairs);

bool unifies(const Subst& theta, const std::vector<TermConstraint>& cs);
bool unifies(const TypeSubst& mu, const std::vector<TypeConstraint>& cs);

// Fully applies a triangular substitution until no bound variable remains.
Subst resolved(const Subst& theta);

// Multiset equality of two states when type variables may be renamed by one
// bijection. Term constraints must match exactly.
bool same_up_to_renaming(const ConstraintState& a, const ConstraintState& b);

// Random terms over 0, 1, a, [], 2.5, "s", X, Y, Z, W, cons/2, f/1, g/2.
class TermGenerator {
 public:
  explicit TermGenerator(std::uint64_t seed) : rng_(seed) {}

  Term term(int depth);
  // Replaces random subterms of t with variables.
  Term generalize(const Term& t);
  // A pair that is sometimes unifiable and sometimes not.
  std::pair<Term, Term> pair(int depth);
  // A pair of terms built for one random type, so most pairs are well typed
  // and either unify or clash on values.
  std::pair<Term, Term> typed_pair(int depth);

 private:
  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }
  std::size_t pick(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }
  Term of_type(const TypeExpr& type, int depth);
  Term typed_var(const TypeExpr& type);
  Term generalize_typed(const Term& t, const TypeExpr& type);
  TypeExpr random_type(int depth);

  std::mt19937_64 rng_;
};

}  // namespace regunify::oracle

#endif  // REGUNIFY_TESTS_SUPPORT_ORACLES_H_
