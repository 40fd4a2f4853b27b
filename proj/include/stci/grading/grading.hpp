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

#include <cstdint>
#include <string>
#include <vector>

#include "stci/core/polynomial.hpp"

namespace stci {

/// The monomial curve [s^d : s^a t^b : s^b t^a : t^d] in P^3 over `field`.
/// Requires a + b = d, a > b >= 1 and gcd(a, b) = 1.
struct CurveSpec {
  std::uint32_t d = 4, a = 3, b = 1;
  Field field;

  /// Throws InvalidArgument naming the violated condition.
  static CurveSpec make(std::uint32_t d, std::uint32_t a, std::uint32_t b, Field field = {});
  /// Macaulay's quartic (4, 3, 1).
  static CurveSpec macaulay(Field field = {}) { return make(4, 3, 1, field); }
  /// Parses "d,a,b".
  static CurveSpec parse(const std::string& text, Field field = {});

  std::string str() const;
  bool operator==(const CurveSpec&) const = default;
};

struct BiDegree {
  std::uint32_t i = 0, j = 0;
  auto operator<=>(const BiDegree&) const = default;
};

/// Bidegree of a monomial in w, x, y, z under deg w = (d,0), x = (a,b),
/// y = (b,a), z = (0,d). Throws InvalidArgument if it mentions other variables.
BiDegree bidegree(const CurveSpec& curve, const Monomial& mono);

struct Component {
  BiDegree degree;
  Polynomial part;
};

/// Bihomogeneous components ordered by ascending first bidegree coordinate.
struct Decomposition {
  std::vector<Component> components;

  const Component& min() const { return components.front(); }
  const Component& max() const { return components.back(); }
  std::size_t count() const { return components.size(); }
};

/// Throws InvalidArgument on zero input or variables outside w, x, y, z.
Decomposition decompose_bihomogeneous(const CurveSpec& curve, const Polynomial& f);

struct Extremal {
  Polynomial f_min, f_max;
  std::uint32_t i_min = 0, i_max = 0;
  std::size_t count = 0;
};

Extremal extremal_components(const Decomposition& dec);

}  // namespace stci
