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

#include "stci/core/monomial.hpp"

#include <cstring>

#include "stci/core/errors.hpp"

namespace stci {

Monomial Monomial::of(Var v, std::uint32_t e) {
  Monomial m;
  m.set(v, e);
  return m;
}

void Monomial::set(Var v, std::uint32_t e) {
  if (e > kMaxExponent) throw InvalidArgument("exponent " + std::to_string(e) + " too large");
  e_[index(v)] = static_cast<simd::Exp>(e);
}

VariableSet Monomial::support() const {
  std::uint16_t mask = 0;
  for (std::size_t i = 0; i < kVarCount; ++i)
    if (e_[i]) mask |= static_cast<std::uint16_t>(1u << i);
  return VariableSet::from_mask(mask);
}

Monomial Monomial::quotient(const Monomial& d) const {
  Monomial out;
  simd::kernels().quotient(e_.data(), d.e_.data(), out.e_.data());
  return out;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial out;
  simd::kernels().lcm(e_.data(), o.e_.data(), out.e_.data());
  return out;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial out;
  simd::kernels().gcd(e_.data(), o.e_.data(), out.e_.data());
  return out;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  if (!simd::kernels().mul(e_.data(), o.e_.data(), out.e_.data()))
    throw InvalidArgument("exponent overflow in monomial product");
  return out;
}

Monomial Monomial::pow(std::uint32_t n) const {
  Monomial out;
  for (std::size_t i = 0; i < kVarCount; ++i) {
    std::uint64_t e = std::uint64_t{e_[i]} * n;
    if (e > kMaxExponent) throw InvalidArgument("exponent overflow in monomial power");
    out.e_[i] = static_cast<simd::Exp>(e);
  }
  return out;
}

std::size_t Monomial::hash() const {
  std::uint64_t words[4];
  std::memcpy(words, e_.data(), sizeof(words));
  std::uint64_t h = 0x9E3779B97F4A7C15ull;
  for (std::uint64_t w : words) h = (h ^ w) * 0xBF58476D1CE4E5B9ull;
  return static_cast<std::size_t>(h ^ (h >> 31));
}

int compare_grevlex(const Monomial& a, const Monomial& b) {
  const auto& k = simd::kernels();
  std::uint32_t da = k.degree(a.data(), 0xFFFF), db = k.degree(b.data(), 0xFFFF);
  if (da != db) return da > db ? 1 : -1;
  int i = k.last_diff(a.data(), b.data(), 0xFFFF);
  if (i < 0) return 0;
  return a.exponent(static_cast<std::size_t>(i)) < b.exponent(static_cast<std::size_t>(i)) ? 1 : -1;
}

}  // namespace stci
