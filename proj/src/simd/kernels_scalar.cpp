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

#include "stci/simd/monomial_kernels.hpp"

namespace stci::simd {
namespace {

bool mul(const Exp* a, const Exp* b, Exp* out) {
  bool ok = true;
  for (int i = 0; i < kLanes; ++i) {
    std::uint32_t s = std::uint32_t{a[i]} + b[i];
    if (s >= 0xFFFF) {
      ok = false;
      s = 0xFFFF;
    }
    out[i] = static_cast<Exp>(s);
  }
  return ok;
}

bool divides(const Exp* a, const Exp* b) {
  for (int i = 0; i < kLanes; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

void quotient(const Exp* b, const Exp* a, Exp* out) {
  for (int i = 0; i < kLanes; ++i) out[i] = static_cast<Exp>(b[i] - a[i]);
}

void lcm(const Exp* a, const Exp* b, Exp* out) {
  for (int i = 0; i < kLanes; ++i) out[i] = a[i] > b[i] ? a[i] : b[i];
}

void gcd(const Exp* a, const Exp* b, Exp* out) {
  for (int i = 0; i < kLanes; ++i) out[i] = a[i] < b[i] ? a[i] : b[i];
}

bool coprime(const Exp* a, const Exp* b) {
  for (int i = 0; i < kLanes; ++i)
    if (a[i] && b[i]) return false;
  return true;
}

std::uint32_t degree(const Exp* a, std::uint16_t mask) {
  std::uint32_t d = 0;
  for (int i = 0; i < kLanes; ++i)
    if (mask & (1u << i)) d += a[i];
  return d;
}

int first_diff(const Exp* a, const Exp* b, std::uint16_t mask) {
  for (int i = 0; i < kLanes; ++i)
    if ((mask & (1u << i)) && a[i] != b[i]) return i;
  return -1;
}

int last_diff(const Exp* a, const Exp* b, std::uint16_t mask) {
  for (int i = kLanes - 1; i >= 0; --i)
    if ((mask & (1u << i)) && a[i] != b[i]) return i;
  return -1;
}

constexpr MonomialKernels kScalar{"scalar", mul,    divides,    quotient,  lcm,
                                  gcd,      coprime, degree, first_diff, last_diff};

}  // namespace

const MonomialKernels& scalar_kernels() { return kScalar; }

}  // namespace stci::simd
