// Copyright 2026 The redspec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "redspec/error.hpp"
#include "redspec/limits.hpp"

namespace redspec {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInput:
      return "input";
    case ErrorKind::kContract:
      return "contract";
    case ErrorKind::kResource:
      return "resource";
    case ErrorKind::kInconsistent:
      return "inconsistent-data";
    case ErrorKind::kPrecondition:
      return "precondition";
    case ErrorKind::kInvariant:
      return "invariant";
    case ErrorKind::kParse:
      return "parse";
  }
  return "unknown";
}

const Limits& Limits::defaults() {
  static const Limits limits{};
  return limits;
}

}  // namespace redspec
