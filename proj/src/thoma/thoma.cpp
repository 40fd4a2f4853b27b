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

#include "stci/thoma/thoma.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "stci/core/gcd.hpp"

namespace stci {

namespace {

Polynomial power_of(VariableSet ring, const Field& field, Var v, std::uint32_t e) {
  return Polynomial::monomial(ring, field, Monomial::of(v, e), field.one());
}

void require_base(const Polynomial& f) {
  if (f.is_zero()) throw InvalidArgument("cannot lift the zero polynomial");
  if (!VariableSet::base().contains(f.support()))
    throw InvalidArgument("polynomial " + f.str() + " is not in k[w,x,y,z]");
}

// Generators of the curve ideal read in `ring`.
std::vector<Polynomial> p_generators(const CurveSpec& curve, VariableSet ring) {
  const Ideal p = curve_ideal(curve);
  std::vector<Polynomial> out;
  for (const auto& g : p.generators()) out.push_back(g.in_ring(ring));
  return out;
}

Polynomial tilde_of(const Polynomial& f, const CurveSpec& curve, LiftMode mode) {
  return tilde_reduce(thoma_lift(f, curve, mode)).reduced;
}

struct Factor {
  std::string name;
  std::vector<Polynomial> gens;
};

// Products of one generator from each factor generate an ideal whose radical
// is the intersection of the factors' radicals. A repeated generator inside a
// product does not change its radical, and a product that is a multiple of
// another one is redundant, so only the minimal squarefree products are kept.
std::vector<Polynomial> product_generators(const std::vector<Factor>& factors) {
  std::vector<Polynomial> atoms;
  auto atom_of = [&](const Polynomial& p) {
    for (std::size_t k = 0; k < atoms.size(); ++k)
      if (atoms[k] == p) return k;
    atoms.push_back(p);
    return atoms.size() - 1;
  };
  std::vector<std::set<std::size_t>> sets{{}};
  for (const auto& fac : factors) {
    std::vector<std::set<std::size_t>> next;
    for (const auto& s : sets)
      for (const auto& g : fac.gens) {
        auto t = s;
        t.insert(atom_of(g));
        if (std::find(next.begin(), next.end(), t) == next.end()) next.push_back(std::move(t));
      }
    sets = std::move(next);
  }
  std::vector<Polynomial> out;
  for (const auto& s : sets) {
    bool redundant = false;
    for (const auto& t : sets)
      if (t != s && std::includes(s.begin(), s.end(), t.begin(), t.end())) redundant = true;
    if (redundant) continue;
    Polynomial p = atoms[*s.begin()];
    for (auto it = std::next(s.begin()); it != s.end(); ++it) p *= atoms[*it];
    if (!p.is_zero()) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

VariableSet lift_ring(LiftMode mode) {
  switch (mode) {
    case LiftMode::lambda_only:
      return VariableSet::with_lambda();
    case LiftMode::mu_only:
      return VariableSet::base() | VariableSet{Var::mu};
    case LiftMode::bivariate:
      return VariableSet::with_lambda_mu();
  }
  return VariableSet::with_lambda_mu();
}

Polynomial thoma_lift(const Polynomial& f, const CurveSpec& c, LiftMode mode) {
  require_base(f);
  const VariableSet ring = lift_ring(mode);
  const Field& k = f.field();
  const bool lam = mode != LiftMode::mu_only, mu = mode != LiftMode::lambda_only;
  auto image = [&](Var v, std::uint32_t el, std::uint32_t em) {
    Monomial m = Monomial::of(v);
    if (lam) m.set(Var::lambda, el);
    if (mu) m.set(Var::mu, em);
    return Polynomial::monomial(ring, k, m, k.one());
  };
  SubstitutionMap map{{Var::w, image(Var::w, c.d, 0)},
                      {Var::x, image(Var::x, c.a, c.b)},
                      {Var::y, image(Var::y, c.b, c.a)},
                      {Var::z, image(Var::z, 0, c.d)}};
  return substitute(f, map);
}

Polynomial lift_from_components(const Polynomial& f, const CurveSpec& c, LiftMode mode) {
  require_base(f);
  const VariableSet ring = lift_ring(mode);
  const Field& k = f.field();
  Polynomial out(ring, k);
  for (const auto& comp : decompose_bihomogeneous(c, f).components) {
    Polynomial weight = Polynomial::constant(ring, k, k.one());
    if (mode != LiftMode::mu_only) weight *= power_of(ring, k, Var::lambda, comp.degree.i);
    if (mode != LiftMode::lambda_only) weight *= power_of(ring, k, Var::mu, comp.degree.j);
    out += comp.part.in_ring(ring) * weight;
  }
  return out;
}

Tilde tilde_reduce(const Polynomial& F) {
  if (F.is_zero()) throw InvalidArgument("tilde_reduce: zero input");
  Tilde out{F, {}};
  Monomial strip;
  for (Var v : {Var::lambda, Var::mu}) {
    std::uint32_t e = F.min_exponent(v);
    if (e) {
      strip.set(v, e);
      out.stripped[v] = e;
    }
  }
  if (!strip.is_one()) {
    std::vector<Polynomial::Term> terms;
    for (const auto& t : F.terms()) terms.push_back({t.mono.quotient(strip), t.coeff});
    out.reduced = Polynomial::from_terms(F.ring(), F.field(), std::move(terms));
  }
  return out;
}

CandidatePair CandidatePair::make(const Polynomial& f, const Polynomial& g, const CurveSpec& curve) {
  auto check = [&](const Polynomial& p, const char* name) {
    if (p.is_zero()) throw InvalidArgument(std::string(name) + " is zero");
    if (!(p.field() == curve.field))
      throw InvalidArgument(std::string(name) + " is over " + p.field().name() + ", curve over " + curve.field.name());
    if (!VariableSet::base().contains(p.support()))
      throw InvalidArgument(std::string(name) + " = " + p.str() + " is not in k[w,x,y,z]");
    if (!p.is_homogeneous()) {
      std::string offending;
      const auto top = static_cast<std::uint32_t>(p.degree());
      for (const auto& t : p.terms())
        if (t.mono.degree() != top) {
          Polynomial single = Polynomial::monomial(p.ring(), p.field(), t.mono, t.coeff);
          offending += (offending.empty() ? "" : ", ") + single.str();
        }
      throw InvalidArgument(std::string(name) + " is not homogeneous; terms below degree " + std::to_string(top) +
                            ": " + offending);
    }
  };
  check(f, "f");
  check(g, "g");
  CandidatePair pair{f.in_ring(VariableSet::base()), g.in_ring(VariableSet::base()), curve, 0, 0};
  pair.d1 = static_cast<std::uint32_t>(f.degree());
  pair.d2 = static_cast<std::uint32_t>(g.degree());
  return pair;
}

ExtremalPair extremal_pair(const CandidatePair& pair) {
  return {extremal_components(decompose_bihomogeneous(pair.curve, pair.f)),
          extremal_components(decompose_bihomogeneous(pair.curve, pair.g))};
}

CommonDivisors compute_t(const CandidatePair& pair) {
  ExtremalPair e = extremal_pair(pair);
  return {gcd_poly(e.f.f_min, e.g.f_min), gcd_poly(e.f.f_max, e.g.f_max)};
}

bool is_stci(const CandidatePair& pair) {
  Ideal fg(VariableSet::base(), pair.curve.field, {pair.f, pair.g});
  return radical_equal(fg, curve_ideal(pair.curve));
}

ComponentConditions check_component_conditions(const CandidatePair& pair) {
  ComponentConditions c;
  c.count_f = decompose_bihomogeneous(pair.curve, pair.f).count();
  c.count_g = decompose_bihomogeneous(pair.curve, pair.g).count();
  c.neither_bihomogeneous = c.count_f >= 2 && c.count_g >= 2;
  c.three_for_one = c.count_f >= 3 || c.count_g >= 3;
  c.three_for_each = c.count_f >= 3 && c.count_g >= 3;
  return c;
}

Theorem1Check check_theorem1(const CandidatePair& pair) {
  const ExtremalPair e = extremal_pair(pair);
  const CommonDivisors t = compute_t(pair);
  const Ideal p = curve_ideal(pair.curve);
  const SubstitutionMap param = curve_parametrization(pair.curve);

  auto side = [&](const Polynomial& td, const Polynomial& fe, const Polynomial& ge) {
    SideCheck s;
    s.t = td;
    s.non_unit = !td.is_constant();
    s.in_radical_of_extremal = in_radical(td, Ideal(VariableSet::base(), pair.curve.field, {fe, ge}));
    s.in_p = in_ideal(td, p);
    s.vanishes_on_curve = substitute(td, param).is_zero();
    if (s.in_p != s.vanishes_on_curve)
      throw std::logic_error("curve-ideal membership and parametrization disagree on " + td.str());
    return s;
  };
  return {side(t.t_min, e.f.f_min, e.g.f_min), side(t.t_max, e.f.f_max, e.g.f_max)};
}

std::string identity_name(Identity which) {
  switch (which) {
    case Identity::mpd1:
      return "mpd1";
    case Identity::mpd3:
      return "mpd3";
    case Identity::mpd4:
      return "mpd4";
    case Identity::mpd5:
      return "mpd5";
  }
  return "?";
}

std::string strictness_name(Strictness s) {
  return s == Strictness::containment_only ? "containment" : "full";
}

IdentityCheck verify_identity(const CandidatePair& pair, Identity which, Strictness strictness) {
  const Ideal p = curve_ideal(pair.curve);
  if (!in_ideal(pair.f, p) || !in_ideal(pair.g, p))
    throw PairNotInCurveIdeal("identity " + identity_name(which) + " needs f and g in the curve ideal");

  const bool in_T = which == Identity::mpd1 || which == Identity::mpd3;
  const VariableSet ring = in_T ? VariableSet::with_lambda() : VariableSet::with_lambda_mu();
  const LiftMode mode = in_T ? LiftMode::lambda_only : LiftMode::bivariate;
  const Field& k = pair.curve.field;
  const Polynomial F = tilde_of(pair.f, pair.curve, mode).in_ring(ring);
  const Polynomial G = tilde_of(pair.g, pair.curve, mode).in_ring(ring);
  const ExtremalPair e = extremal_pair(pair);
  const Polynomial lam = Polynomial::variable(ring, k, Var::lambda);

  std::vector<Factor> factors;
  const std::string p_name = in_T ? "pT" : "pS";
  switch (which) {
    case Identity::mpd1:
      factors = {{"(l,f_min,g_min)", {lam, e.f.f_min.in_ring(ring), e.g.f_min.in_ring(ring)}}};
      break;
    case Identity::mpd3:
      factors = {{"(l,t_min)", {lam, compute_t(pair).t_min.in_ring(ring)}}};
      break;
    case Identity::mpd4:
    case Identity::mpd5: {
      const Polynomial mu = Polynomial::variable(ring, k, Var::mu);
      factors.push_back({"(l,m)", {lam, mu}});
      if (which == Identity::mpd4) {
        const CommonDivisors t = compute_t(pair);
        factors.push_back({"(l,t_min)", {lam, t.t_min.in_ring(ring)}});
        factors.push_back({"(m,t_max)", {mu, t.t_max.in_ring(ring)}});
      } else {
        factors.push_back({"(l,f_min,g_min)", {lam, e.f.f_min.in_ring(ring), e.g.f_min.in_ring(ring)}});
        factors.push_back({"(m,f_max,g_max)", {mu, e.f.f_max.in_ring(ring), e.g.f_max.in_ring(ring)}});
      }
      break;
    }
  }
  factors.push_back({p_name, p_generators(pair.curve, ring)});

  IdentityCheck out;
  out.which = which;
  out.strictness = strictness;
  out.containment = true;
  for (const auto& fac : factors) {
    Ideal I(ring, k, fac.gens);
    FactorVerdict v{fac.name, in_radical(F, I), in_radical(G, I)};
    out.containment = out.containment && v.holds();
    out.factors.push_back(std::move(v));
  }
  if (strictness == Strictness::full_equality) {
    Ideal lhs(ring, k, {F, G});
    out.reverse = true;
    for (const auto& h : product_generators(factors))
      if (!in_radical(h, lhs)) {
        out.reverse = false;
        out.reverse_failure = h.str();
        break;
      }
  }
  return out;
}

RadicalRemark verify_radical_remark(const CandidatePair& pair) {
  const VariableSet ring = VariableSet::with_lambda_mu();
  const Field& k = pair.curve.field;
  const Ideal lhs(ring, k,
                  {tilde_of(pair.f, pair.curve, LiftMode::bivariate).in_ring(ring),
                   tilde_of(pair.g, pair.curve, LiftMode::bivariate).in_ring(ring)});
  const CommonDivisors t = compute_t(pair);
  RadicalRemark r;
  r.lambda_t_max = in_radical(Polynomial::variable(ring, k, Var::lambda) * t.t_max.in_ring(ring), lhs);
  r.mu_t_min = in_radical(Polynomial::variable(ring, k, Var::mu) * t.t_min.in_ring(ring), lhs);
  return r;
}

SaturationProbe saturation_probe(const CandidatePair& pair) {
  const VariableSet ring = VariableSet::with_lambda();
  const Field& k = pair.curve.field;
  const Ideal lifted(ring, k,
                     {tilde_of(pair.f, pair.curve, LiftMode::lambda_only).in_ring(ring),
                      tilde_of(pair.g, pair.curve, LiftMode::lambda_only).in_ring(ring)});
  const Ideal sat = saturate(lifted, Polynomial::variable(ring, k, Var::lambda));
  const Ideal pT(ring, k, p_generators(pair.curve, ring));

  SaturationProbe out;
  out.saturation = sat.generators();
  out.saturation_in_p = true;
  for (const auto& h : sat.generators())
    if (!in_radical(h, pT)) {
      out.saturation_in_p = false;
      out.failure = "saturation generator " + h.str() + " not in sqrt(pT)";
      break;
    }
  out.p_in_saturation = true;
  for (const auto& h : pT.generators())
    if (!in_radical(h, sat)) {
      out.p_in_saturation = false;
      if (!out.failure) out.failure = "curve generator " + h.str() + " not in sqrt of the saturation";
      break;
    }
  return out;
}

}  // namespace stci
