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

#include "stci/core/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "stci/core/errors.hpp"

namespace stci {

namespace {

bool term_greater(const Polynomial::Term& a, const Polynomial::Term& b) {
  return compare_grevlex(a.mono, b.mono) > 0;
}

// Merges two descending term lists; b's coefficients are negated when subtract.
std::vector<Polynomial::Term> merge(const Field& field, std::span<const Polynomial::Term> a,
                                    std::span<const Polynomial::Term> b, bool subtract) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = compare_grevlex(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, subtract ? field.neg(b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Scalar s = subtract ? field.sub(a[i].coeff, b[j].coeff) : field.add(a[i].coeff, b[j].coeff);
      if (!s.is_zero()) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mono, subtract ? field.neg(b[j].coeff) : b[j].coeff});
  return out;
}

}  // namespace

Polynomial Polynomial::constant(VariableSet ring, Field field, const Scalar& c) {
  return monomial(ring, field, Monomial(), c);
}

Polynomial Polynomial::variable(VariableSet ring, Field field, Var v) {
  return monomial(ring, field, Monomial::of(v), field.one());
}

Polynomial Polynomial::monomial(VariableSet ring, Field field, const Monomial& m, const Scalar& c) {
  return from_terms(ring, field, {{m, c}});
}

Polynomial Polynomial::from_terms(VariableSet ring, Field field, std::vector<Term> terms) {
  Polynomial p(ring, field);
  for (const Term& t : terms)
    if (!ring.contains(t.mono.support()))
      throw InvalidArgument("term uses variables outside ring {" + ring.str() + "}");
  std::sort(terms.begin(), terms.end(), term_greater);
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = field.add(p.terms_.back().coeff, t.coeff);
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  // grevlex is degree-compatible: first and last terms bound the degree range
  return terms_.front().mono.degree() == terms_.back().mono.degree();
}

VariableSet Polynomial::support() const {
  VariableSet s;
  for (const Term& t : terms_) s = s | t.mono.support();
  return s;
}

std::uint32_t Polynomial::min_exponent(Var v) const {
  if (terms_.empty()) return 0;
  std::uint32_t e = Monomial::kMaxExponent;
  for (const Term& t : terms_) e = std::min<std::uint32_t>(e, t.mono[v]);
  return e;
}

std::uint32_t Polynomial::max_exponent(Var v) const {
  std::uint32_t e = 0;
  for (const Term& t : terms_) e = std::max<std::uint32_t>(e, t.mono[v]);
  return e;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  for (const Term& t : terms_)
    if (t.mono == m) return t.coeff;
  return field_.zero();
}

Polynomial Polynomial::in_ring(VariableSet target) const {
  if (!target.contains(support()))
    throw InvalidArgument("polynomial " + str() + " does not live in {" + target.str() + "}");
  Polynomial p = *this;
  p.ring_ = target;
  return p;
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (!(ring_ == o.ring_))
    throw RingMismatch("ring mismatch: {" + ring_.str() + "} vs {" + o.ring_.str() + "}");
  if (!(field_ == o.field_))
    throw RingMismatch("field mismatch: " + field_.name() + " vs " + o.field_.name());
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (Term& t : p.terms_) t.coeff = field_.neg(t.coeff);
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  terms_ = merge(field_, terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(o);
  terms_ = merge(field_, terms_, o.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  check_compatible(o);
  std::unordered_map<Monomial, Scalar> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const Term& a : terms_)
    for (const Term& b : o.terms_) {
      Scalar c = field_.mul(a.coeff, b.coeff);
      auto [it, inserted] = acc.try_emplace(a.mono * b.mono, c);
      if (!inserted) it->second = field_.add(it->second, c);
    }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.push_back({m, std::move(c)});
  std::sort(out.begin(), out.end(), term_greater);
  terms_ = std::move(out);
  return *this;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ring_, field_);
  Polynomial p = *this;
  for (Term& t : p.terms_) t.coeff = field_.mul(t.coeff, c);
  return p;
}

Polynomial Polynomial::times(const Monomial& m, const Scalar& c) const {
  if (!ring_.contains(m.support())) throw InvalidArgument("monomial outside ring {" + ring_.str() + "}");
  if (c.is_zero()) return Polynomial(ring_, field_);
  Polynomial p = *this;
  // multiplication by a monomial preserves grevlex order
  for (Term& t : p.terms_) {
    t.mono = t.mono * m;
    t.coeff = field_.mul(t.coeff, c);
  }
  return p;
}

Polynomial Polynomial::pow(std::uint32_t n) const {
  Polynomial result = constant(ring_, field_, field_.one());
  Polynomial base = *this;
  while (n) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(field_.inv(terms_.front().coeff));
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const Term& t : terms_) {
    std::string piece;
    if (t.mono.is_one()) {
      piece = t.coeff.str();
    } else {
      std::string c = t.coeff.str();
      if (c == "-1")
        piece = "-";
      else if (c != "1")
        piece = c + "*";
      bool first = true;
      for (std::size_t i = 0; i < kVarCount; ++i) {
        std::uint32_t e = t.mono.exponent(i);
        if (!e) continue;
        if (!first) piece += '*';
        first = false;
        piece += var_name(static_cast<Var>(i));
        if (e > 1) piece += "^" + std::to_string(e);
      }
    }
    if (!out.empty() && piece.front() != '-') out += '+';
    out += piece;
  }
  return out;
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw InvalidArgument("division by zero polynomial");
  if (!(a.ring() == b.ring()) || !(a.field() == b.field())) throw RingMismatch("exact_divide: ring mismatch");
  const Field& k = a.field();
  const Polynomial::Term& lb = b.leading();
  Scalar lb_inv = k.inv(lb.coeff);
  Polynomial q(a.ring(), k), r = a;
  while (!r.is_zero()) {
    const Polynomial::Term& lr = r.leading();
    if (!lb.mono.divides(lr.mono)) throw InexactDivision(b.str() + " does not divide " + a.str());
    Monomial m = lr.mono.quotient(lb.mono);
    Scalar c = k.mul(lr.coeff, lb_inv);
    q += Polynomial::monomial(a.ring(), k, m, c);
    r -= b.times(m, c);
  }
  return q;
}

Polynomial substitute(const Polynomial& f, const SubstitutionMap& images) {
  if (images.empty()) {
    if (!f.is_constant()) throw InvalidArgument("substitute: no images for " + f.str());
    return f;
  }
  const VariableSet target = images.begin()->second.ring();
  const Field field = images.begin()->second.field();
  for (const auto& [v, img] : images)
    if (!(img.ring() == target) || !(img.field() == field))
      throw RingMismatch("substitute: images live in different rings");
  if (!(field == f.field())) throw RingMismatch("substitute: field mismatch");
  for (Var v : f.support().vars())
    if (!images.count(v)) throw InvalidArgument("substitute: variable " + std::string(var_name(v)) + " is unmapped");

  // powers are memoised per variable
  std::map<std::pair<Var, std::uint32_t>, Polynomial> powers;
  auto power = [&](Var v, std::uint32_t e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, images.at(v).pow(e)).first;
    return it->second;
  };
  Polynomial out(target, field);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, field, t.coeff);
    for (Var v : t.mono.support().vars()) term *= power(v, t.mono[v]);
    out += term;
  }
  return out;
}

}  // namespace stci
