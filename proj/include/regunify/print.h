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

#ifndef REGUNIFY_PRINT_H_
#define REGUNIFY_PRINT_H_

#include <ostream>
#include <string>
#include <string_view>

#include "regunify/term.h"
#include "regunify/type_expr.h"

namespace regunify {

// Concrete syntax accepted back by the parser. cons/[] chains print as list
// sugar, +/2 infix.
std::string to_string(const Term& term);
// Like to_string, but =/2 and is/2 at the root print infix.
std::string goal_to_string(const Term& goal);
std::string to_string(const TypeExpr& type);
std::string to_string(const FuncType& type);
// Quantifiers are implicit: every variable of the body is generic.
std::string to_string(const TypeScheme& scheme);
// {X = 1, Y = []}
std::string to_string(const Subst& subst);
std::string to_string(const TypeSubst& subst);

// Quotes an atom when it is not a plain lowercase identifier or [].
std::string quote_atom(std::string_view name);

std::ostream& operator<<(std::ostream& os, const Term& term);
std::ostream& operator<<(std::ostream& os, const TypeExpr& type);

}  // namespace regunify

#endif  // REGUNIFY_PRINT_H_
