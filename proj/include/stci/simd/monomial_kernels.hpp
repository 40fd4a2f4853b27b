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
#include <span>

namespace stci::simd {

/// Exponent vectors are 16 lanes of uint16_t (no alignment required). Lanes past the
/// variable universe are always zero. 0xFFFF is reserved as the overflow marker,
/// so the largest legal exponent is 65534.
inline constexpr int kLanes = 16;
using Exp = std::uint16_t;

/// One implementation of the exponent-vector primitives the polynomial and
/// Groebner layers are built on. Every variant must agree bit-for-bit with the
/// scalar reference.
struct MonomialKernels {
  const char* name;
  /// out = a + b; returns false if any lane reaches 0xFFFF.
  bool (*mul)(const Exp* a, const Exp* b, Exp* out);
  /// a | b, i.e. a <= b lane-wise.
  bool (*divides)(const Exp* a, const Exp* b);
  /// out = b - a; requires divides(a, b).
  void (*quotient)(const Exp* b, const Exp* a, Exp* out);
  void (*lcm)(const Exp* a, const Exp* b, Exp* out);
  void (*gcd)(const Exp* a, const Exp* b, Exp* out);
  /// No lane is nonzero in both.
  bool (*coprime)(const Exp* a, const Exp* b);
  /// Sum of the lanes selected by `mask` (bit i selects lane i).
  std::uint32_t (*degree)(const Exp* a, std::uint16_t mask);
  /// Lowest / highest selected lane where a and b differ, or -1.
  int (*first_diff)(const Exp* a, const Exp* b, std::uint16_t mask);
  int (*last_diff)(const Exp* a, const Exp* b, std::uint16_t mask);
};

const MonomialKernels& scalar_kernels();

/// nullptr when the variant was not compiled in or the CPU lacks support.
const MonomialKernels* avx2_kernels();

/// Chosen once per process: the best supported variant, unless the
/// STCI_SIMD environment variable is set to "scalar".
const MonomialKernels& kernels();

/// Every variant usable on this machine, scalar first.
std::span<const MonomialKernels* const> available_kernels();

}  // namespace stci::simd
