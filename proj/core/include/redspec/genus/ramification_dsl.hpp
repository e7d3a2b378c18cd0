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

#pragma once

#include <map>
#include <string>
#include <string_view>

#include "redspec/genus/genus.hpp"

namespace redspec {

// Parameter bindings for ramification expressions.
using Bindings = std::map<std::string, long>;

// Parses "[l],[a,l-a],[1^{l-2},2] where l=21,a=1". Parts and multiplicities
// are expressions in the bound names with + - * / and parentheses, evaluated
// exactly and required to be integral. ParseError (with column) for
// syntax problems, InputError naming the expression when a value is not
// integral or out of range.
RamificationType parse_ramification(std::string_view text, const Bindings& extra = {});

// Evaluates an expression such as "(l-3)/2" under the bindings.
long evaluate_expression(std::string_view expr, const Bindings& bindings);

}  // namespace redspec
