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

// A deliberately naive reference for Groebner-basis facts: explicit term
// orders and textbook multivariate division over Polynomial arithmetic.

#include <optional>
#include <vector>

#include "stci/core/polynomial.hpp"

namespace stci::testing {

enum class NaiveOrder { grevlex, lex };

inline int naive_compare(const Monomial& a, const Monomial& b, NaiveOrder order) {
  if (order == NaiveOrder::grevlex) {
    std::uint32_t da = 0, db = 0;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      da += a.exponent(i);
      db += b.exponent(i);
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = kVarCount; i-- > 0;)
      if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i) ? 1 : -1;
    return 0;
  }
  for (std::size_t i = 0; i < kVarCount; ++i)
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i) ? 1 : -1;
  return 0;
}

inline Polynomial::Term naive_leading(const Polynomial& p, NaiveOrder order) {
  Polynomial::Term best = p.terms().front();
  for (const auto& t : p.terms())
    if (naive_compare(t.mono, best.mono, order) > 0) best = t;
  return best;
}

inline bool naive_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kVarCount; ++i)
    if (a.exponent(i) > b.exponent(i)) return false;
  return true;
}

/// Full reduction: the remainder has no term divisible by a leading monomial.
inline Polynomial naive_remainder(Polynomial f, const std::vector<Polynomial>& basis, NaiveOrder order) {
  const Field& k = f.field();
  Polynomial rem(f.ring(), k);
  while (!f.is_zero()) {
    const auto lt = naive_leading(f, order);
    bool reduced = false;
    for (const auto& g : basis) {
      const auto lg = naive_leading(g, order);
      if (!naive_divides(lg.mono, lt.mono)) continue;
      f -= g.times(lt.mono.quotient(lg.mono), k.div(lt.coeff, lg.coeff));
      reduced = true;
      break;
    }
    if (!reduced) {
      const Polynomial head = Polynomial::monomial(f.ring(), k, lt.mono, lt.coeff);
      rem += head;
      f -= head;
    }
  }
  return rem;
}

inline Polynomial naive_spoly(const Polynomial& a, const Polynomial& b, NaiveOrder order) {
  const auto la = naive_leading(a, order), lb = naive_leading(b, order);
  const Monomial l = la.mono.lcm(lb.mono);
  const Field& k = a.field();
  return a.times(l.quotient(la.mono), k.inv(la.coeff)) - b.times(l.quotient(lb.mono), k.inv(lb.coeff));
}

/// Why `basis` fails to be a reduced Groebner basis containing `gens`, if it does.
inline std::optional<std::string> naive_reduced_gb_defect(const std::vector<Polynomial>& basis,
                                                          const std::vector<Polynomial>& gens, NaiveOrder order) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero()) return "zero element";
    const auto li = naive_leading(basis[i], order);
    if (!li.coeff.is_one()) return "element " + basis[i].str() + " is not monic";
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : basis[j].terms())
        if (naive_divides(li.mono, t.mono)) return "leading term of " + basis[i].str() + " divides a term of " + basis[j].str();
      if (j > i && !naive_remainder(naive_spoly(basis[i], basis[j], order), basis, order).is_zero())
        return "S-polynomial of " + basis[i].str() + ", " + basis[j].str() + " does not reduce to zero";
    }
  }
  for (const auto& g : gens)
    if (!naive_remainder(g, basis, order).is_zero()) return "generator " + g.str() + " does not reduce to zero";
  return std::nullopt;
}

}  // namespace stci::testing
