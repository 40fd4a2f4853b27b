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

#include "stci/core/gcd.hpp"

#include <map>

#include "stci/core/errors.hpp"

namespace stci {

namespace {

// f = sum_k coeffs[k] * main^k
std::map<std::uint32_t, Polynomial> coefficients_in(const Polynomial& f, Var main) {
  std::map<std::uint32_t, std::vector<Polynomial::Term>> buckets;
  for (const auto& t : f.terms()) {
    Monomial m = t.mono;
    std::uint32_t k = m[main];
    m.set(main, 0);
    buckets[k].push_back({m, t.coeff});
  }
  std::map<std::uint32_t, Polynomial> out;
  for (auto& [k, terms] : buckets)
    out.emplace(k, Polynomial::from_terms(f.ring(), f.field(), std::move(terms)));
  return out;
}

Polynomial leading_coefficient_in(const Polynomial& f, Var main) {
  return coefficients_in(f, main).rbegin()->second;
}

Polynomial one_like(const Polynomial& f) {
  return Polynomial::constant(f.ring(), f.field(), f.field().one());
}

Polynomial gcd_nonzero(const Polynomial& a, const Polynomial& b);

Polynomial content_nonzero(const Polynomial& f, Var main) {
  auto coeffs = coefficients_in(f, main);
  auto it = coeffs.begin();
  Polynomial g = it->second;
  for (++it; it != coeffs.end() && !g.is_constant(); ++it) g = gcd_nonzero(g, it->second);
  return g.is_constant() ? one_like(f) : g.monic();
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, Var main) {
  const std::uint32_t db = b.max_exponent(main);
  const Polynomial lcb = leading_coefficient_in(b, main);
  Polynomial r = a;
  while (!r.is_zero() && r.max_exponent(main) >= db) {
    std::uint32_t dr = r.max_exponent(main);
    Polynomial lcr = leading_coefficient_in(r, main);
    Polynomial shift = lcr.times(Monomial::of(main, dr - db), r.field().one());
    r = lcb * r - shift * b;
  }
  return r;
}

Polynomial primitive_part(const Polynomial& f, Var main) {
  return exact_divide(f, content_nonzero(f, main)).monic();
}

// a and b are primitive in main and both involve it.
Polynomial primitive_prs(Polynomial a, Polynomial b, Var main) {
  if (a.max_exponent(main) < b.max_exponent(main)) std::swap(a, b);
  for (;;) {
    Polynomial r = pseudo_remainder(a, b, main);
    if (r.is_zero()) return b.monic();
    if (r.max_exponent(main) == 0) return one_like(a);
    a = std::move(b);
    b = primitive_part(r, main);
  }
}

Polynomial gcd_nonzero(const Polynomial& a, const Polynomial& b) {
  if (a.is_constant() || b.is_constant()) return one_like(a);
  const VariableSet vars = a.support() | b.support();
  const Var main = vars.vars().front();
  const bool in_a = a.support().contains(main), in_b = b.support().contains(main);
  if (!in_a) return gcd_nonzero(a, content_nonzero(b, main));
  if (!in_b) return gcd_nonzero(content_nonzero(a, main), b);

  Polynomial ca = content_nonzero(a, main), cb = content_nonzero(b, main);
  Polynomial c = gcd_nonzero(ca, cb);
  Polynomial pa = exact_divide(a, ca), pb = exact_divide(b, cb);
  return (c * primitive_prs(pa, pb, main)).monic();
}

}  // namespace

Polynomial content_in(const Polynomial& f, Var main) {
  if (f.is_zero()) return f;
  return content_nonzero(f, main);
}

Polynomial gcd_poly(const Polynomial& a, const Polynomial& b) {
  if (!(a.ring() == b.ring()) || !(a.field() == b.field())) throw RingMismatch("gcd_poly: ring mismatch");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  return gcd_nonzero(a, b).monic();
}

}  // namespace stci
