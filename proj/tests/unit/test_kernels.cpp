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

#include <gtest/gtest.h>

#include <array>
#include <random>

#include "stci/core/errors.hpp"
#include "stci//core/variables.hpp"
#include "stci/simd/monomial_kernels.hpp"

namespace stci::simd {
namespace {

using Vec = std::array<Exp, kLanes>;

// Plain loops, written independently of the library's scalar variant.
struct Oracle {
  static bool mul(const Vec& a, const Vec& b, Vec& out) {
    bool ok = true;
    for (int i = 0; i < kLanes; ++i) {
      unsigned s = unsigned(a[i]) + b[i];
      out[i] = static_cast<Exp>(s >= 0xFFFF ? 0xFFFF : s);
      ok = ok && s < 0xFFFF;
    }
    return ok;
  }
  static std::uint32_t degree(const Vec& a, std::uint16_t mask) {
    std::uint32_t d = 0;
    for (int i = 0; i < kLanes; ++i)
      if (mask >> i & 1) d += a[i];
    return d;
  }
  static int first_diff(const Vec& a, const Vec& b, std::uint16_t mask) {
    for (int i = 0; i < kLanes; ++i)
      if ((mask >> i & 1) && a[i] != b[i]) return i;
    return -1;
  }
  static int last_diff(const Vec& a, const Vec& b, std::uint16_t mask) {
    for (int i = kLanes - 1; i >= 0; --i)
      if ((mask >> i & 1) && a[i] != b[i]) return i;
    return -1;
  }
};

class KernelEquivalence : public ::testing::Test {
 protected:
  Vec random_vec(int max_exp) {
    Vec v{};
    for (std::size_t i = 0; i < kVarCount; ++i) v[i] = static_cast<Exp>(std::uniform_int_distribution<int>(0, max_exp)(gen_));
    return v;
  }
  std::uint16_t random_mask() { return static_cast<std::uint16_t>(std::uniform_int_distribution<int>(0, 0xFFFF)(gen_)); }

  std::mt19937_64 gen_{20261015};
};

TEST_F(KernelEquivalence, ScalarMatchesPlainLoops) {
  const MonomialKernels& k = scalar_kernels();
  for (int trial = 0; trial < 2000; ++trial) {
    const int bound = trial % 3 == 0 ? 0xFFFE : 6;
    Vec a = random_vec(bound), b = random_vec(bound), got{}, want{};
    const std::uint16_t mask = random_mask();
    EXPECT_EQ(k.mul(a.data(), b.data(), got.data()), Oracle::mul(a, b, want));
    if (Oracle::mul(a, b, want)) EXPECT_EQ(got, want);
    EXPECT_EQ(k.degree(a.data(), mask), Oracle::degree(a, mask));
    EXPECT_EQ(k.first_diff(a.data(), b.data(), mask), Oracle::first_diff(a, b, mask));
    EXPECT_EQ(k.last_diff(a.data(), b.data(), mask), Oracle::last_diff(a, b, mask));
    bool div = true, cop = true;
    for (int i = 0; i < kLanes; ++i) {
      div = div && a[i] <= b[i];
      cop = cop && (a[i] == 0 || b[i] == 0);
    }
    EXPECT_EQ(k.divides(a.data(), b.data()), div);
    EXPECT_EQ(k.coprime(a.data(), b.data()), cop);
  }
}

TEST_F(KernelEquivalence, EveryVariantMatchesScalar) {
  const MonomialKernels& ref = scalar_kernels();
  for (const MonomialKernels* k : available_kernels()) {
    SCOPED_TRACE(k->name);
    for (int trial = 0; trial < 5000; ++trial) {
      const int bound = trial % 4 == 0 ? 0xFFFE : 4;
      Vec a = random_vec(bound), b = random_vec(bound);
      if (trial % 5 == 0) b = a;
      if (trial % 7 == 0)
        for (std::size_t i = 0; i < kVarCount; ++i) b[i] = static_cast<Exp>(a[i] + (b[i] & 1));
      const std::uint16_t mask = trial % 2 ? random_mask() : 0xFFFF;
      Vec x{}, y{};
      EXPECT_EQ(k->mul(a.data(), b.data(), x.data()), ref.mul(a.data(), b.data(), y.data()));
      EXPECT_EQ(x, y);
      EXPECT_EQ(k->divides(a.data(), b.data()), ref.divides(a.data(), b.data()));
      if (ref.divides(a.data(), b.data())) {
        k->quotient(b.data(), a.data(), x.data());
        ref.quotient(b.data(), a.data(), y.data());
        EXPECT_EQ(x, y);
      }
      k->lcm(a.data(), b.data(), x.data());
      ref.lcm(a.data(), b.data(), y.data());
      EXPECT_EQ(x, y);
      k->gcd(a.data(), b.data(), x.data());
      ref.gcd(a.data(), b.data(), y.data());
      EXPECT_EQ(x, y);
      EXPECT_EQ(k->coprime(a.data(), b.data()), ref.coprime(a.data(), b.data()));
      EXPECT_EQ(k->degree(a.data(), mask), ref.degree(a.data(), mask));
      EXPECT_EQ(k->first_diff(a.data(), b.data(), mask), ref.first_diff(a.data(), b.data(), mask));
      EXPECT_EQ(k->last_diff(a.data(), b.data(), mask), ref.last_diff(a.data(), b.data(), mask));
    }
  }
}

TEST_F(KernelEquivalence, UnalignedOperands) {
  alignas(32) std::array<Exp, kLanes * 2 + 1> buf{};
  for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = static_cast<Exp>(i % 5);
  const Exp* a = buf.data() + 1;
  const Exp* b = buf.data() + kLanes + 1;
  for (const MonomialKernels* k : available_kernels())
    EXPECT_EQ(k->degree(a, 0xFFFF), scalar_kernels().degree(a, 0xFFFF)) << k->name;
  Vec x{}, y{};
  for (const MonomialKernels* k : available_kernels()) {
    k->lcm(a, b, x.data());
    scalar_kernels().lcm(a, b, y.data());
    EXPECT_EQ(x, y) << k->name;
  }
}

TEST(KernelDispatch, SelectedVariantIsAvailable) {
  const MonomialKernels& chosen = kernels();
  bool found = false;
  for (const MonomialKernels* k : available_kernels()) found = found || k == &chosen;
  EXPECT_TRUE(found);
  EXPECT_EQ(available_kernels().front(), &scalar_kernels());
}

}  // namespace
}  // namespace stci::simd
