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

#include <array>
#include <cstdint>
#include <functional>

#include "stci/core/variables.hpp"
#include "stci/simd/monomial_kernels.hpp"

namespace stci {

/// A power product over the variable universe. Lanes for variables outside a
/// polynomial's VariableSet are zero, so the exponent vector always has the
/// universe's fixed width.
class Monomial {
 public:
  static constexpr std::uint32_t kMaxExponent = 0xFFFE;

  Monomial() = default;
  static Monomial of(Var v, std::uint32_t e = 1);

  std::uint16_t operator[](Var v) const { return e_[index(v)]; }
  std::uint16_t exponent(std::size_t i) const { return e_[i]; }
  /// Throws InvalidArgument if e exceeds kMaxExponent.
  void set(Var v, std::uint32_t e);

  std::uint32_t degree() const { return simd::kernels().degree(e_.data(), 0xFFFF); }
  std::uint32_t degree_in(VariableSet vars) const { return simd::kernels().degree(e_.data(), vars.mask()); }
  bool is_one() const { return degree() == 0; }
  VariableSet support() const;

  /// this | other
  bool divides(const Monomial& other) const { return simd::kernels().divides(e_.data(), other.e_.data()); }
  bool coprime(const Monomial& other) const { return simd::kernels().coprime(e_.data(), other.e_.data()); }
  /// this / d; requires d | this.
  Monomial quotient(const Monomial& d) const;
  Monomial lcm(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;
  /// Throws InvalidArgument on exponent overflow.
  Monomial operator*(const Monomial& o) const;
  Monomial pow(std::uint32_t n) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  const simd::Exp* data() const { return e_.data(); }

  std::size_t hash() const;

 private:
  alignas(32) std::array<simd::Exp, simd::kLanes> e_{};
};

/// Degree reverse lexicographic comparison with w > x > y > z > l > m > s > t > u > v.
/// Returns >0 if a > b, <0 if a < b, 0 if equal. This is the ambient order
/// polynomial terms are stored in.
int compare_grevlex(const Monomial& a, const Monomial& b);

}  // namespace stci

template <>
struct std::hash<stci::Monomial> {
  std::size_t operator()(const stci::Monomial& m) const { return m.hash(); }
};
