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

#ifndef REGUNIFY_PARSER_H_
#define REGUNIFY_PARSER_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "regunify/program.h"
#include "regunify/source_span.h"
#include "regunify/term.h"
#include "regunify/type_env.h"
#include "regunify/type_expr.h"

namespace regunify {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& message, SourceSpan span)
      : std::runtime_error(span.to_string() + ": " + message),
        span_(std::move(span)) {}
  const SourceSpan& span() const { return span_; }

 private:
  SourceSpan span_;
};

// Prolog-like terms: variables start uppercase or with _, atoms lowercase or
// quoted, integers, floats, "strings", [a, b | T] list sugar and left
// associative +. '.'/2 is read as cons. = is only allowed at goal level.
Term parse_term(std::string_view text, std::string_view file = "<input>");
// t1 = t2
std::pair<Term, Term> parse_equation(std::string_view text,
                                     std::string_view file = "<input>");
// A single goal; X = Y and N is E are read as =/2 and is/2.
Term parse_goal(std::string_view text, std::string_view file = "<input>");

// A type: variables, int/float/string/atom, bool, symbol applications such
// as list(A), and implicit free-constructor symbols written f'(A).
TypeExpr parse_type(std::string_view text, std::string_view file = "<input>");

// tsym(A, B) --> summand_1 + ... + summand_m.
std::vector<TypeDef> parse_typedefs(std::string_view text,
                                    std::string_view file = "<input>");
// name : type.   name : t1 * ... * tn -> t.
std::vector<SignatureDecl> parse_signatures(std::string_view text,
                                            std::string_view file = "<input>");
// X : type, Y : type   (entries separated by , or .)
std::vector<std::pair<std::string, TypeExpr>> parse_context(
    std::string_view text, std::string_view file = "<input>");

std::vector<Clause> parse_program(std::string_view text,
                                  std::string_view file = "<input>");
// [?-] g1, ..., gn [.]
std::vector<Term> parse_query(std::string_view text,
                              std::string_view file = "<input>");

}  // namespace regunify

#endif  // REGUNIFY_PARSER_H_
