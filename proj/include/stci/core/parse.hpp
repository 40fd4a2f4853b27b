// Copyright 2026 The stci Authors
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

#include <string_view>
#include <vector>

#include "stci/core/polynomial.hpp"

namespace stci {

/// Grammar (whitespace insignificant):
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := factor ('*' factor)*
///   factor  := primary ['^' nat]
///   primary := int ['/' int] | var | '(' expr ')'
/// Variables are single letters w x y z l m s t u v (l = lambda, m = mu) and
/// must belong to `ring`. Throws ParseError carrying the byte offset.
Polynomial parse_polynomial(std::string_view text, VariableSet ring, Field field);

/// Several polynomials separated by ',', ';' or newlines. Blank entries are skipped.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, VariableSet ring, Field field);

}  // namespace stci
