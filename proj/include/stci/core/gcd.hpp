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

#include "stci/core/polynomial.hpp"

namespace stci {

/// Greatest common divisor, normalized to leading coefficient 1 under grevlex.
/// gcd(a, 0) is a made monic; gcd(0, 0) is 0. Computed by primitive
/// polynomial remainder sequences, recursing on the first variable present.
Polynomial gcd_poly(const Polynomial& a, const Polynomial& b);

/// Content of f viewed as a polynomial in `main` with coefficients in the
/// remaining variables (a gcd of those coefficients, monic).
Polynomial content_in(const Polynomial& f, Var main);

}  // namespace stci
