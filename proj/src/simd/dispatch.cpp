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

#include <cstdlib>
#include <string_view>
#include <vector>

#include "stci/simd/monomial_kernels.hpp"

namespace stci::simd {

#if defined(STCI_HAVE_AVX2)
namespace avx2 {
extern const MonomialKernels kKernels;
}
#endif

const MonomialKernels* avx2_kernels() {
#if defined(STCI_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &avx2::kKernels : nullptr;
#else
  return nullptr;
#endif
}

namespace {

const MonomialKernels& select() {
  const char* forced = std::getenv("STCI_SIMD");
  if (forced && std::string_view(forced) == "scalar") return scalar_kernels();
  if (const MonomialKernels* k = avx2_kernels()) return *k;
  return scalar_kernels();
}

}  // namespace

const MonomialKernels& kernels() {
  static const MonomialKernels& chosen = select();
  return chosen;
}

std::span<const MonomialKernels* const> available_kernels() {
  static const std::vector<const MonomialKernels*> all = [] {
    std::vector<const MonomialKernels*> v{&scalar_kernels()};
    if (const MonomialKernels* k = avx2_kernels()) v.push_back(k);
    return v;
  }();
  return all;
}

}  // namespace stci::simd
