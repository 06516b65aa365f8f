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

#ifndef REGUNIFY_PROGRAM_H_
#define REGUNIFY_PROGRAM_H_

#include <vector>

#include "regunify/source_span.h"
#include "regunify/term.h"

namespace regunify {

// head :- body_1, ..., body_n.   Facts have an empty body. Atoms are
// constants or compound terms; X = Y and N is E are goals like any other.
struct Clause {
  Term head;
  std::vector<Term> body;
  SourceSpan span;
};

}  // namespace regunify

#endif  // REGUNIFY_PROGRAM_H_
