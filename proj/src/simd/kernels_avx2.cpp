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

// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "stci/simd/monomial_kernels.hpp"

namespace stci::simd::avx2 {
namespace {

inline __m256i load(const Exp* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Exp* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

// Expands bit i of mask into an all-ones lane i.
inline __m256i lane_mask(std::uint16_t mask) {
  const __m256i bits = _mm256_setr_epi16(1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048, 4096,
                                         8192, 16384, static_cast<short>(0x8000));
  __m256i m = _mm256_and_si256(_mm256_set1_epi16(static_cast<short>(mask)), bits);
  return _mm256_cmpeq_epi16(m, bits);
}

// Two movemask bits per 16-bit lane.
inline std::uint32_t eq_bits(__m256i a, __m256i b) {
  return static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi16(a, b)));
}

bool mul(const Exp* a, const Exp* b, Exp* out) {
  __m256i s = _mm256_adds_epu16(load(a), load(b));
  store(out, s);
  return eq_bits(s, _mm256_set1_epi16(-1)) == 0;
}

bool divides(const Exp* a, const Exp* b) {
  __m256i vb = load(b);
  return eq_bits(_mm256_max_epu16(load(a), vb), vb) == 0xFFFFFFFFu;
}

void quotient(const Exp* b, const Exp* a, Exp* out) { store(out, _mm256_sub_epi16(load(b), load(a))); }

void lcm(const Exp* a, const Exp* b, Exp* out) { store(out, _mm256_max_epu16(load(a), load(b))); }

void gcd(const Exp* a, const Exp* b, Exp* out) { store(out, _mm256_min_epu16(load(a), load(b))); }

bool coprime(const Exp* a, const Exp* b) {
  return eq_bits(_mm256_min_epu16(load(a), load(b)), _mm256_setzero_si256()) == 0xFFFFFFFFu;
}

std::uint32_t degree(const Exp* a, std::uint16_t mask) {
  __m256i v = _mm256_and_si256(load(a), lane_mask(mask));
  __m256i lo = _mm256_cvtepu16_epi32(_mm256_castsi256_si128(v));
  __m256i hi = _mm256_cvtepu16_epi32(_mm256_extracti128_si256(v, 1));
  __m256i s = _mm256_add_epi32(lo, hi);
  __m128i t = _mm_add_epi32(_mm256_castsi256_si128(s), _mm256_extracti128_si256(s, 1));
  t = _mm_add_epi32(t, _mm_shuffle_epi32(t, _MM_SHUFFLE(1, 0, 3, 2)));
  t = _mm_add_epi32(t, _mm_shuffle_epi32(t, _MM_SHUFFLE(2, 3, 0, 1)));
  return static_cast<std::uint32_t>(_mm_cvtsi128_si32(t));
}

inline std::uint32_t diff_bits(const Exp* a, const Exp* b, std::uint16_t mask) {
  __m256i neq = _mm256_andnot_si256(_mm256_cmpeq_epi16(load(a), load(b)), lane_mask(mask));
  return static_cast<std::uint32_t>(_mm256_movemask_epi8(neq));
}

int first_diff(const Exp* a, const Exp* b, std::uint16_t mask) {
  std::uint32_t bits = diff_bits(a, b, mask);
  return bits ? __builtin_ctz(bits) / 2 : -1;
}

int last_diff(const Exp* a, const Exp* b, std::uint16_t mask) {
  std::uint32_t bits = diff_bits(a, b, mask);
  return bits ? (31 - __builtin_clz(bits)) / 2 : -1;
}

}  // namespace

extern const MonomialKernels kKernels{"avx2", mul,    divides,    quotient,  lcm,
                                      gcd,    coprime, degree, first_diff, last_diff};

}  // namespace stci::simd::avx2
