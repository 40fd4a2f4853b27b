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

#include "stci/ideal/groebner.hpp"

#include <algorithm>
#include <type_traits>
#include <variant>

#include "stci/core/errors.hpp"
#include "stci/ideal/deadline.hpp"

namespace stci {

namespace {

template <class C>
struct GTerm {
  Monomial m;
  C c;
};

template <class C>
using GPoly = std::vector<GTerm<C>>;

// F_p with machine residues; basis elements are kept monic.
struct PrimeDomain {
  using Coeff = std::uint64_t;
  std::uint64_t p;

  Coeff mul(Coeff a, Coeff b) const { return a * b % p; }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p - b; }
  Coeff inv(Coeff a) const {
    std::uint64_t base = a, e = p - 2, acc = 1;
    while (e) {
      if (e & 1) acc = acc * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return acc;
  }
  static bool is_zero(Coeff c) { return c == 0; }
  static bool is_one(Coeff c) { return c == 1; }

  void normalize(GPoly<Coeff>& f) const {
    if (f.empty() || f.front().c == 1) return;
    Coeff s = inv(f.front().c);
    for (auto& t : f) t.c = mul(t.c, s);
  }
  // (a, b) with a * lead - b * lc_g == 0; lc_g is 1 for basis elements but
  // S-polynomials call this with arbitrary leading coefficients.
  std::pair<Coeff, Coeff> factors(Coeff lead, Coeff lc_g) const {
    if (lc_g == 1) return {1, lead};
    return {1, mul(lead, inv(lc_g))};
  }
};

// Z with primitive representatives standing in for Q.
struct IntegerDomain {
  using Coeff = mpz_class;

  static bool is_zero(const Coeff& c) { return sgn(c) == 0; }
  static bool is_one(const Coeff& c) { return c == 1; }

  static mpz_class content(const GPoly<Coeff>& f) {
    mpz_class g = 0;
    for (const auto& t : f) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }
  void normalize(GPoly<Coeff>& f) const {
    if (f.empty()) return;
    mpz_class g = content(f);
    if (sgn(f.front().c) < 0) g = -g;
    if (g != 1)
      for (auto& t : f) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  }
  std::pair<Coeff, Coeff> factors(const Coeff& lead, const Coeff& lc_g) const {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lead.get_mpz_t(), lc_g.get_mpz_t());
    mpz_class a, b;
    mpz_divexact(a.get_mpz_t(), lc_g.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), lead.get_mpz_t(), g.get_mpz_t());
    if (sgn(a) < 0) {
      a = -a;
      b = -b;
    }
    return {a, b};
  }
};

template <class D>
using PolyOf = GPoly<typename D::Coeff>;

// out = a*P - b*q*G, with P and G sorted descending under ord.
template <class D>
PolyOf<D> combine(const D& dom, const MonomialOrder& ord, const typename D::Coeff& a,
                  std::span<const GTerm<typename D::Coeff>> P, const typename D::Coeff& b, const Monomial& q,
                  std::span<const GTerm<typename D::Coeff>> G) {
  using C = typename D::Coeff;
  PolyOf<D> out;
  out.reserve(P.size() + G.size());
  const bool scale_p = !D::is_one(a);
  auto scaled = [&](const C& c) -> C {
    if constexpr (std::is_same_v<D, PrimeDomain>)
      return scale_p ? dom.mul(a, c) : c;
    else
      return scale_p ? C(a * c) : c;
  };
  auto negprod = [&](const C& c) -> C {
    if constexpr (std::is_same_v<D, PrimeDomain>)
      return dom.sub(0, dom.mul(b, c));
    else
      return C(-(b * c));
  };
  std::size_t i = 0, j = 0;
  Monomial qm;
  if (j < G.size()) qm = q * G[j].m;
  while (i < P.size() && j < G.size()) {
    int cmp = ord.compare(P[i].m, qm);
    if (cmp > 0) {
      out.push_back({P[i].m, scaled(P[i].c)});
      ++i;
    } else if (cmp < 0) {
      out.push_back({qm, negprod(G[j].c)});
      if (++j < G.size()) qm = q * G[j].m;
    } else {
      C c;
      if constexpr (std::is_same_v<D, PrimeDomain>)
        c = dom.sub(scaled(P[i].c), dom.mul(b, G[j].c));
      else
        c = scaled(P[i].c) - b * G[j].c;
      if (!D::is_zero(c)) out.push_back({qm, std::move(c)});
      ++i;
      if (++j < G.size()) qm = q * G[j].m;
    }
  }
  for (; i < P.size(); ++i) out.push_back({P[i].m, scaled(P[i].c)});
  for (; j < G.size();) {
    out.push_back({qm, negprod(G[j].c)});
    if (++j < G.size()) qm = q * G[j].m;
  }
  return out;
}

template <class C>
const GPoly<C>* find_reducer(const Monomial& m, const std::vector<const GPoly<C>*>& basis) {
  for (const GPoly<C>* g : basis)
    if (g->front().m.divides(m)) return g;
  return nullptr;
}

// Full reduction of p. If `multiplier` is given it tracks M with
// (live part + result) == M * p_in modulo the basis.
template <class D>
PolyOf<D> reduce(const D& dom, const MonomialOrder& ord, PolyOf<D> p,
                 const std::vector<const PolyOf<D>*>& basis, mpq_class* multiplier) {
  using C = typename D::Coeff;
  PolyOf<D> r;
  std::size_t head = 0;
  unsigned steps = 0;
  while (head < p.size()) {
    check_deadline();
    const Monomial lead = p[head].m;
    const PolyOf<D>* g = find_reducer(lead, basis);
    if (!g) {
      r.push_back(std::move(p[head]));
      ++head;
      continue;
    }
    auto [a, b] = dom.factors(p[head].c, g->front().c);
    std::span<const GTerm<C>> tail(p.data() + head + 1, p.size() - head - 1);
    std::span<const GTerm<C>> gtail(g->data() + 1, g->size() - 1);
    p = combine(dom, ord, a, tail, b, lead.quotient(g->front().m), gtail);
    head = 0;
    if constexpr (std::is_same_v<D, IntegerDomain>) {
      if (!D::is_one(a)) {
        for (auto& t : r) t.c *= a;
        if (multiplier) *multiplier *= mpq_class(a);
      }
      if (++steps % 16 == 0 && !r.empty()) {
        // keep coefficient growth in check by removing the joint content
        mpz_class c = D::content(r);
        for (const auto& t : p) {
          if (c == 1) break;
          mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.c.get_mpz_t());
        }
        if (c > 1) {
          for (auto& t : r) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
          for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
          if (multiplier) *multiplier /= mpq_class(c);
        }
      }
    }
  }
  return r;
}

template <class D>
struct Engine {
  using C = typename D::Coeff;
  const D& dom;
  const MonomialOrder& ord;
  GroebnerStats& stats;

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };

  std::vector<PolyOf<D>> basis;
  std::vector<Pair> pairs;
  std::vector<std::vector<char>> pending;  // pending[j][i], i < j

  std::vector<const PolyOf<D>*> view() const {
    std::vector<const PolyOf<D>*> v;
    v.reserve(basis.size());
    for (const auto& g : basis) v.push_back(&g);
    return v;
  }

  bool is_pending(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return pending[j][i] != 0;
  }

  // Returns true once the unit ideal is detected.
  bool add(PolyOf<D> h) {
    dom.normalize(h);
    if (h.front().m.is_one()) {
      basis.assign(1, std::move(h));
      pairs.clear();
      return true;
    }
    const std::size_t k = basis.size();
    pending.emplace_back(k, 1);
    for (std::size_t i = 0; i < k; ++i) pairs.push_back({i, k, basis[i].front().m.lcm(h.front().m)});
    stats.pairs_created += k;
    basis.push_back(std::move(h));
    ++stats.basis_growth;
    return false;
  }

  bool chain_applies(const Pair& pr) const {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (basis[k].front().m.divides(pr.lcm) && !is_pending(pr.i, k) && !is_pending(pr.j, k)) return true;
    }
    return false;
  }

  PolyOf<D> s_polynomial(const Pair& pr) const {
    const PolyOf<D>& gi = basis[pr.i];
    const PolyOf<D>& gj = basis[pr.j];
    // first factor: (lcm / lm_i) * gi
    PolyOf<D> left;
    left.reserve(gi.size());
    const Monomial qi = pr.lcm.quotient(gi.front().m);
    for (const auto& t : gi) left.push_back({t.m * qi, t.c});
    auto [a, b] = dom.factors(left.front().c, gj.front().c);
    std::span<const GTerm<C>> tail(left.data() + 1, left.size() - 1);
    std::span<const GTerm<C>> gtail(gj.data() + 1, gj.size() - 1);
    return combine(dom, ord, a, tail, b, pr.lcm.quotient(gj.front().m), gtail);
  }

  // Least lcm first; ties broken by (j, i) so runs are reproducible.
  std::size_t select() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      int c = ord.compare(pairs[k].lcm, pairs[best].lcm);
      if (c < 0 || (c == 0 && std::tie(pairs[k].j, pairs[k].i) < std::tie(pairs[best].j, pairs[best].i)))
        best = k;
    }
    return best;
  }

  std::vector<PolyOf<D>> run(std::vector<PolyOf<D>> gens) {
    for (auto& g : gens) {
      if (g.empty()) continue;
      PolyOf<D> h = reduce(dom, ord, std::move(g), view(), nullptr);
      if (!h.empty() && add(std::move(h))) return basis;
    }
    while (!pairs.empty()) {
      check_deadline();
      std::size_t idx = select();
      Pair pr = pairs[idx];
      pairs[idx] = pairs.back();
      pairs.pop_back();
      pending[pr.j][pr.i] = 0;
      if (basis[pr.i].front().m.coprime(basis[pr.j].front().m)) {
        ++stats.product_criterion;
        continue;
      }
      if (chain_applies(pr)) {
        ++stats.chain_criterion;
        continue;
      }
      PolyOf<D> h = reduce(dom, ord, s_polynomial(pr), view(), nullptr);
      if (h.empty()) {
        ++stats.zero_reductions;
        continue;
      }
      if (add(std::move(h))) return basis;
    }
    return finalize();
  }

  std::vector<PolyOf<D>> finalize() {
    std::vector<PolyOf<D>> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Monomial& li = basis[i].front().m;
      bool redundant = false;
      for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
        if (j == i) continue;
        const Monomial& lj = basis[j].front().m;
        if (lj.divides(li) && (!(lj == li) || j < i)) redundant = true;
      }
      if (!redundant) minimal.push_back(basis[i]);
    }
    std::vector<PolyOf<D>> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<const PolyOf<D>*> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(&minimal[j]);
      PolyOf<D> g = reduce(dom, ord, minimal[i], others, nullptr);
      dom.normalize(g);
      reduced.push_back(std::move(g));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const PolyOf<D>& a, const PolyOf<D>& b) { return ord.greater(a.front().m, b.front().m); });
    return reduced;
  }
};

template <class D>
void sort_terms(PolyOf<D>& f, const MonomialOrder& ord) {
  std::sort(f.begin(), f.end(), [&](const auto& a, const auto& b) { return ord.greater(a.m, b.m); });
}

PolyOf<PrimeDomain> to_prime(const Polynomial& f, const MonomialOrder& ord) {
  PolyOf<PrimeDomain> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back({t.mono, f.field().residue(t.coeff)});
  sort_terms<PrimeDomain>(out, ord);
  return out;
}

// Clears denominators; `scale` receives k with out == k * f.
PolyOf<IntegerDomain> to_integer(const Polynomial& f, const MonomialOrder& ord, mpq_class* scale) {
  mpz_class l = 1;
  for (const auto& t : f.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.value().get_den_mpz_t());
  PolyOf<IntegerDomain> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    mpz_class c = t.coeff.value().get_num() * (l / t.coeff.value().get_den());
    out.push_back({t.mono, std::move(c)});
  }
  sort_terms<IntegerDomain>(out, ord);
  mpz_class g = IntegerDomain::content(out);
  if (g > 1)
    for (auto& t : out) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  if (scale) *scale = mpq_class(l, g == 0 ? mpz_class(1) : g);
  if (scale) scale->canonicalize();
  return out;
}

Polynomial from_prime(const PolyOf<PrimeDomain>& f, VariableSet ring, const Field& field) {
  std::vector<Polynomial::Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f) terms.push_back({t.m, field.from_residue(t.c)});
  return Polynomial::from_terms(ring, field, std::move(terms));
}

Polynomial from_integer(const PolyOf<IntegerDomain>& f, VariableSet ring, const Field& field,
                        const mpq_class& divisor) {
  std::vector<Polynomial::Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f) terms.push_back({t.m, field.from_rational(mpq_class(t.c) / divisor)});
  return Polynomial::from_terms(ring, field, std::move(terms));
}

}  // namespace

struct GroebnerBasis::Impl {
  MonomialOrder order = MonomialOrder::grevlex();
  VariableSet ring;
  Field field;
  std::vector<Polynomial> elements;
  std::vector<Monomial> leads;
  GroebnerStats stats;
  std::variant<std::vector<PolyOf<PrimeDomain>>, std::vector<PolyOf<IntegerDomain>>> internal;
};

const MonomialOrder& GroebnerBasis::order() const { return impl_->order; }
VariableSet GroebnerBasis::ring() const { return impl_->ring; }
const Field& GroebnerBasis::field() const { return impl_->field; }
const std::vector<Polynomial>& GroebnerBasis::elements() const { return impl_->elements; }
std::vector<Monomial> GroebnerBasis::leading_monomials() const { return impl_->leads; }
const GroebnerStats& GroebnerBasis::stats() const { return impl_->stats; }

bool GroebnerBasis::is_unit() const { return impl_->leads.size() == 1 && impl_->leads.front().is_one(); }

Polynomial GroebnerBasis::normal_form(const Polynomial& f_in) const {
  if (!(f_in.field() == impl_->field)) throw RingMismatch("normal_form: field mismatch");
  const Polynomial f = f_in.in_ring(impl_->ring);
  if (f.is_zero()) return f;
  if (impl_->field.characteristic() != 0) {
    PrimeDomain dom{impl_->field.characteristic()};
    const auto& basis = std::get<0>(impl_->internal);
    std::vector<const PolyOf<PrimeDomain>*> view;
    for (const auto& g : basis) view.push_back(&g);
    auto r = reduce(dom, impl_->order, to_prime(f, impl_->order), view, nullptr);
    return from_prime(r, impl_->ring, impl_->field);
  }
  IntegerDomain dom;
  const auto& basis = std::get<1>(impl_->internal);
  std::vector<const PolyOf<IntegerDomain>*> view;
  for (const auto& g : basis) view.push_back(&g);
  mpq_class multiplier;
  auto p = to_integer(f, impl_->order, &multiplier);
  auto r = reduce(dom, impl_->order, std::move(p), view, &multiplier);
  return from_integer(r, impl_->ring, impl_->field, multiplier);
}

bool GroebnerBasis::reduces_to_zero(const Polynomial& f) const { return normal_form(f).is_zero(); }

GroebnerBasis buchberger(VariableSet ring, Field field, std::span<const Polynomial> gens,
                         const MonomialOrder& order) {
  auto impl = std::make_shared<GroebnerBasis::Impl>();
  impl->order = order;
  impl->ring = ring;
  impl->field = field;
  for (const auto& g : gens)
    if (!(g.field() == field)) throw RingMismatch("buchberger: generator over " + g.field().name());

  auto finish = [&](auto&& reduced, auto&& convert) {
    for (const auto& g : reduced) {
      impl->leads.push_back(g.front().m);
      const Polynomial e = convert(g);
      impl->elements.push_back(e.scaled(field.inv(e.coefficient(g.front().m))));
    }
  };

  if (field.characteristic() != 0) {
    PrimeDomain dom{field.characteristic()};
    std::vector<PolyOf<PrimeDomain>> input;
    for (const auto& g : gens)
      if (!g.is_zero()) input.push_back(to_prime(g.in_ring(ring), order));
    Engine<PrimeDomain> engine{dom, order, impl->stats, {}, {}, {}};
    auto reduced = engine.run(std::move(input));
    finish(reduced, [&](const auto& g) { return from_prime(g, ring, field); });
    impl->internal = std::move(reduced);
  } else {
    IntegerDomain dom;
    std::vector<PolyOf<IntegerDomain>> input;
    for (const auto& g : gens)
      if (!g.is_zero()) input.push_back(to_integer(g.in_ring(ring), order, nullptr));
    Engine<IntegerDomain> engine{dom, order, impl->stats, {}, {}, {}};
    auto reduced = engine.run(std::move(input));
    finish(reduced, [&](const auto& g) { return from_integer(g, ring, field, mpq_class(1)); });
    impl->internal = std::move(reduced);
  }
  return GroebnerBasis(std::move(impl));
}

}  // namespace stci
