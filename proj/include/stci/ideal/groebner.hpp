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

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "stci/core/polynomial.hpp"
#include "stci/ideal/order.hpp"

namespace stci {

struct GroebnerStats {
  std::size_t pairs_created = 0;
  std::size_t product_criterion = 0;
  std::size_t chain_criterion = 0;
  std::size_t zero_reductions = 0;
  std::size_t basis_growth = 0;
};

/// A reduced Groebner basis: monic elements, no leading monomial divides a
/// term of another element, sorted by descending leading monomial. The zero
/// ideal has an empty basis; the unit ideal has basis {1}.
///
/// Over Q the kernel works with primitive integer polynomials and converts
/// back to monic rationals; over F_p it works with machine residues.
class GroebnerBasis {
 public:
  const MonomialOrder& order() const;
  VariableSet ring() const;
  const Field& field() const;
  const std::vector<Polynomial>& elements() const;
  std::vector<Monomial> leading_monomials() const;
  const GroebnerStats& stats() const;

  bool is_unit() const;
  bool is_zero_ideal() const { return elements().empty(); }

  /// Unique remainder of f (which must live in a subring of ring()).
  Polynomial normal_form(const Polynomial& f) const;
  bool reduces_to_zero(const Polynomial& f) const;

  struct Impl;

 private:
  friend GroebnerBasis buchberger(VariableSet, Field, std::span<const Polynomial>, const MonomialOrder&);
  explicit GroebnerBasis(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Buchberger's algorithm with the coprime and chain criteria and the normal
/// selection strategy (least lcm first). Zero generators are dropped. Honors
/// the calling thread's DeadlineScope.
GroebnerBasis buchberger(VariableSet ring, Field field, std::span<const Polynomial> gens,
                         const MonomialOrder& order = MonomialOrder::grevlex());

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) { return basis.normal_form(f); }

}  // namespace stci
