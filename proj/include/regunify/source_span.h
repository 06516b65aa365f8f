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

#ifndef REGUNIFY_SOURCE_SPAN_H_
#define REGUNIFY_SOURCE_SPAN_H_

#include <string>

namespace regunify {

// 1-based position of a parsed item.
struct SourceSpan {
  std::string file = "<input>";
  int line = 1;
  int column = 1;

  std::string to_string() const {
    return file + ":" + std::to_string(line) + ":" + std::to_string(column);
  }
};

}  // namespace regunify

#endif  // REGUNIFY_SOURCE_SPAN_H_
