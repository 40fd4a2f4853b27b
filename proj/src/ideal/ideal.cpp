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

#include "stci/ideal/ideal.hpp"

#include <map>
#include <tuple>

#include "stci/core/errors.hpp"

namespace stci {

namespace {

void require_same_ring(const Ideal& I, const Ideal& J, const char* op) {
  if (!(I.ring() == J.ring()) || !(I.field() == J.field()))
    throw RingMismatch(std::string(op) + ": ideals live in different rings");
}

Polynomial one(VariableSet ring, const Field& field) { return Polynomial::constant(ring, field, field.one()); }

// Elements of a reduced basis free of `front`, moved into ring \ front.
std::vector<Polynomial> free_of(const GroebnerBasis& gb, VariableSet front, VariableSet target) {
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements())
    if ((g.support() & front).empty()) out.push_back(g.in_ring(target));
  return out;
}

}  // namespace

Ideal::Ideal(VariableSet ring, Field field, std::vector<Polynomial> generators)
    : ring_(ring), field_(field) {
  generators_.reserve(generators.size());
  for (auto& g : generators) {
    if (!(g.field() == field)) throw RingMismatch("ideal generator over " + g.field().name());
    generators_.push_back(g.in_ring(ring));
  }
}

const GroebnerBasis& Ideal::groebner(const MonomialOrder& order) const {
  std::lock_guard lock(cache_->mu);
  for (const auto& [o, gb] : cache_->bases)
    if (o == order) return *gb;
  auto gb = std::make_shared<const GroebnerBasis>(buchberger(ring_, field_, generators_, order));
  cache_->bases.emplace_back(order, gb);
  return *gb;
}

Ideal Ideal::extended(VariableSet bigger) const {
  if (!bigger.contains(ring_)) throw InvalidArgument("extended: {" + bigger.str() + "} does not contain {" + ring_.str() + "}");
  return Ideal(bigger, field_, generators_);
}

Ideal Ideal::plus(const std::vector<Polynomial>& more) const {
  std::vector<Polynomial> gens = generators_;
  gens.insert(gens.end(), more.begin(), more.end());
  return Ideal(ring_, field_, std::move(gens));
}

std::string Ideal::str() const {
  if (generators_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ", ";
    out += generators_[i].str();
  }
  return out + ")";
}

bool in_ideal(const Polynomial& f, const Ideal& I) {
  if (f.is_zero()) return true;
  return I.groebner().reduces_to_zero(f.in_ring(I.ring()));
}

bool in_radical(const Polynomial& f, const Ideal& I) {
  if (in_ideal(f, I)) return true;
  if (I.ring().contains(Var::u)) throw InvalidArgument("in_radical: ring already uses the auxiliary variable u");
  const VariableSet ring = I.ring() | VariableSet{Var::u};
  const Polynomial u = Polynomial::variable(ring, I.field(), Var::u);
  // Start from the cached basis of I.
  std::vector<Polynomial> gens = I.groebner().elements();
  gens.push_back(one(ring, I.field()) - u * f.in_ring(ring));
  return Ideal(ring, I.field(), std::move(gens)).is_unit();
}

Ideal intersect_ideals(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J, "intersect");
  if (I.ring().contains(Var::v)) throw InvalidArgument("intersect: ring already uses the auxiliary variable v");
  const VariableSet ring = I.ring() | VariableSet{Var::v};
  const Polynomial v = Polynomial::variable(ring, I.field(), Var::v);
  const Polynomial one_minus_v = one(ring, I.field()) - v;
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(v * g.in_ring(ring));
  for (const auto& g : J.generators()) gens.push_back(one_minus_v * g.in_ring(ring));
  Ideal big(ring, I.field(), std::move(gens));
  const VariableSet front{Var::v};
  return Ideal(I.ring(), I.field(), free_of(big.groebner(MonomialOrder::block(front)), front, I.ring()));
}

Ideal saturate(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) throw InvalidArgument("saturate: cannot saturate by zero");
  if (I.ring().contains(Var::u)) throw InvalidArgument("saturate: ring already uses the auxiliary variable u");
  const VariableSet ring = I.ring() | VariableSet{Var::u};
  const Polynomial u = Polynomial::variable(ring, I.field(), Var::u);
  std::vector<Polynomial> gens = I.groebner().elements();
  gens.push_back(one(ring, I.field()) - u * f.in_ring(ring));
  Ideal big(ring, I.field(), std::move(gens));
  const VariableSet front{Var::u};
  return Ideal(I.ring(), I.field(), free_of(big.groebner(MonomialOrder::block(front)), front, I.ring()));
}

Ideal eliminate(const Ideal& I, VariableSet front) {
  if (!I.ring().contains(front)) throw InvalidArgument("eliminate: {" + front.str() + "} not in the ring");
  const VariableSet rest = I.ring().minus(front);
  return Ideal(rest, I.field(), free_of(I.groebner(MonomialOrder::block(front)), front, rest));
}

SubstitutionMap curve_parametrization(const CurveSpec& c) {
  const VariableSet st{Var::s, Var::t};
  auto mono = [&](std::uint32_t es, std::uint32_t et) {
    Monomial m;
    m.set(Var::s, es);
    m.set(Var::t, et);
    return Polynomial::monomial(st, c.field, m, c.field.one());
  };
  return {{Var::w, mono(c.d, 0)}, {Var::x, mono(c.a, c.b)}, {Var::y, mono(c.b, c.a)}, {Var::z, mono(0, c.d)}};
}

Ideal curve_ideal(const CurveSpec& c) {
  static std::mutex mu;
  static std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, std::uint64_t>, Ideal> memo;
  const auto key = std::make_tuple(c.d, c.a, c.b, c.field.characteristic());
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  CurveSpec checked = CurveSpec::make(c.d, c.a, c.b, c.field);
  const VariableSet ring = VariableSet::base() | VariableSet{Var::s, Var::t};
  std::vector<Polynomial> gens;
  for (const auto& [var, image] : curve_parametrization(checked))
    gens.push_back(Polynomial::variable(ring, c.field, var) - image.in_ring(ring));
  Ideal p = eliminate(Ideal(ring, c.field, std::move(gens)), VariableSet{Var::s, Var::t});
  std::lock_guard lock(mu);
  return memo.emplace(key, p).first->second;
}

bool radical_equal(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J, "radical_equal");
  for (const auto& g : I.generators())
    if (!in_radical(g, J)) return false;
  for (const auto& g : J.generators())
    if (!in_radical(g, I)) return false;
  return true;
}

std::size_t dimension(const Ideal& I) {
  const GroebnerBasis& gb = I.groebner();
  if (gb.is_unit()) throw InvalidArgument("dimension of the unit ideal is undefined");
  const std::vector<Var> vars = I.ring().vars();
  const std::vector<Monomial> leads = gb.leading_monomials();
  std::size_t best = 0;
  for (std::uint32_t subset = 0; subset < (1u << vars.size()); ++subset) {
    std::uint16_t mask = 0;
    std::size_t size = 0;
    for (std::size_t k = 0; k < vars.size(); ++k)
      if (subset & (1u << k)) {
        mask |= static_cast<std::uint16_t>(1u << index(vars[k]));
        ++size;
      }
    if (size <= best) continue;
    const VariableSet u = VariableSet::from_mask(mask);
    bool independent = true;
    for (const auto& m : leads)
      if (u.contains(m.support())) {
        independent = false;
        break;
      }
    if (independent) best = size;
  }
  return best;
}

}  // namespace stci
