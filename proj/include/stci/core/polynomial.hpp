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

#include <map>
#include <span>
#include <string>
#include <vector>

#include "stci/core/field.hpp"
#include "stci/core/monomial.hpp"
#include "stci/core/variables.hpp"

namespace stci {

/// A sparse polynomial with exact coefficients over a declared ring.
///
/// Terms are kept sorted by descending grevlex with no zero coefficients, so
/// two polynomials are equal exactly when their term lists are. All arithmetic
/// requires both operands to share the same VariableSet and Field; use
/// `in_ring` to move a polynomial into an extension ring first.
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    Scalar coeff;
    bool operator==(const Term&) const = default;
  };

  Polynomial(VariableSet ring, Field field) : ring_(ring), field_(field) {}
  Polynomial() : Polynomial(VariableSet::base(), Field()) {}

  static Polynomial constant(VariableSet ring, Field field, const Scalar& c);
  static Polynomial variable(VariableSet ring, Field field, Var v);
  static Polynomial monomial(VariableSet ring, Field field, const Monomial& m, const Scalar& c);
  /// Sorts, merges like terms, drops zeros. Throws InvalidArgument if a term
  /// mentions a variable outside `ring`.
  static Polynomial from_terms(VariableSet ring, Field field, std::vector<Term> terms);

  const VariableSet& ring() const { return ring_; }
  const Field& field() const { return field_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Leading term under grevlex; requires nonzero.
  const Term& leading() const { return terms_.front(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  /// Variables that actually occur.
  VariableSet support() const;
  /// Exponent of v in the monomial gcd of all terms.
  std::uint32_t min_exponent(Var v) const;
  std::uint32_t max_exponent(Var v) const;
  Scalar coefficient(const Monomial& m) const;

  /// The same polynomial viewed in another ring; throws InvalidArgument if a
  /// used variable is missing there.
  Polynomial in_ring(VariableSet target) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }

  Polynomial scaled(const Scalar& c) const;
  Polynomial times(const Monomial& m, const Scalar& c) const;
  Polynomial pow(std::uint32_t n) const;
  /// Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;

  bool operator==(const Polynomial& o) const {
    return ring_ == o.ring_ && field_ == o.field_ && terms_ == o.terms_;
  }

  /// Canonical text in the input grammar, e.g. "x*y-w*z" or "3/2*w^4".
  std::string str() const;

 private:
  void check_compatible(const Polynomial& o) const;

  VariableSet ring_;
  Field field_;
  std::vector<Term> terms_;
};

/// Exact quotient a / b. Throws InexactDivision on a nonzero remainder and
/// InvalidArgument if b is zero.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

/// Image of f under the ring homomorphism sending each variable of f to its
/// image. Every variable occurring in f must be mapped; all images must share
/// one ring and field.
using SubstitutionMap = std::map<Var, Polynomial>;
Polynomial substitute(const Polynomial& f, const SubstitutionMap& images);

}  // namespace stci
