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

#include "stci/core/field.hpp"

#include <charconv>

#include "stci/core/errors.hpp"

namespace stci {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p > kMaxPrime) throw InvalidArgument("characteristic " + std::to_string(p) + " exceeds 2^32");
  if (!is_prime(p)) throw InvalidArgument("characteristic " + std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::parse(std::string_view spec) {
  if (spec == "q" || spec == "Q") return rationals();
  if (spec.starts_with("fp:")) {
    std::string_view digits = spec.substr(3);
    std::uint64_t p = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || end != digits.data() + digits.size() || digits.empty())
      throw InvalidArgument("bad field '" + std::string(spec) + "' (expected q or fp:P)");
    return prime(p);
  }
  throw InvalidArgument("bad field '" + std::string(spec) + "' (expected q or fp:P)");
}

std::string Field::name() const { return p_ == 0 ? "q" : "fp:" + std::to_string(p_); }

Scalar Field::from_integer(const mpz_class& n) const {
  if (p_ == 0) return Scalar(mpq_class(n));
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p_);
  return Scalar(mpq_class(r));
}

Scalar Field::from_ratio(const mpz_class& num, const mpz_class& den) const {
  if (p_ == 0) {
    if (den == 0) throw InvalidArgument("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
  }
  Scalar d = from_integer(den);
  if (d.is_zero())
    throw InvalidArgument("denominator " + den.get_str() + " vanishes in " + name());
  return mul(from_integer(num), inv(d));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return Scalar(a.v_ + b.v_);
  std::uint64_t s = residue(a) + residue(b);
  return Scalar(mpq_class(mpz_class(s >= p_ ? s - p_ : s)));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return Scalar(a.v_ - b.v_);
  std::uint64_t ra = residue(a), rb = residue(b);
  return Scalar(mpq_class(mpz_class(ra >= rb ? ra - rb : ra + p_ - rb)));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return Scalar(a.v_ * b.v_);
  return Scalar(mpq_class(mpz_class((residue(a) * residue(b)) % p_)));
}

Scalar Field::neg(const Scalar& a) const {
  if (p_ == 0) return Scalar(-a.v_);
  std::uint64_t r = residue(a);
  return Scalar(mpq_class(mpz_class(r == 0 ? 0 : p_ - r)));
}

Scalar Field::inv(const Scalar& a) const {
  if (a.is_zero()) throw InvalidArgument("inverse of zero");
  if (p_ == 0) return Scalar(1 / a.v_);
  // Fermat: a^(p-2)
  std::uint64_t base = residue(a), e = p_ - 2, acc = 1;
  while (e) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return Scalar(mpq_class(mpz_class(acc)));
}

}  // namespace stci
