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

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace stci {

class Field;

/// An exact field element. In characteristic 0 it is a reduced rational; in
/// characteristic p it is the residue in [0, p) stored with denominator 1.
/// Scalars only carry meaning together with the Field that produced them.
class Scalar {
 public:
  Scalar() = default;

  const mpq_class& value() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool operator==(const Scalar& o) const { return v_ == o.v_; }

  std::string str() const { return v_.get_str(); }

 private:
  friend class Field;
  explicit Scalar(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_{0};
};

/// The coefficient field: Q (characteristic 0) or F_p for a prime p < 2^32.
class Field {
 public:
  static constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 32) - 1;

  Field() = default;  // Q
  static Field rationals() { return Field(); }
  /// Throws InvalidArgument unless p is a prime below 2^32.
  static Field prime(std::uint64_t p);
  /// Accepts "q" or "fp:P".
  static Field parse(std::string_view spec);

  std::uint64_t characteristic() const { return p_; }
  std::string name() const;

  Scalar zero() const { return Scalar(); }
  Scalar one() const { return Scalar(mpq_class(1)); }
  Scalar from_int(long long n) const { return from_integer(mpz_class(std::to_string(n))); }
  Scalar from_integer(const mpz_class& n) const;
  /// Throws InvalidArgument when den vanishes in the field.
  Scalar from_ratio(const mpz_class& num, const mpz_class& den) const;
  Scalar from_rational(const mpq_class& q) const {
    return from_ratio(q.get_num(), q.get_den());
  }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  /// Throws InvalidArgument on zero.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  /// Residue of a scalar as a machine word; characteristic p only.
  std::uint64_t residue(const Scalar& a) const { return a.v_.get_num().get_ui(); }
  Scalar from_residue(std::uint64_t r) const { return Scalar(mpq_class(mpz_class(r % p_))); }

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// Deterministic trial division up to sqrt(n).
bool is_prime(std::uint64_t n);

}  // namespace stci
