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

// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "stci/cli/app.hpp"
#include "stci/cli/report.hpp"
#include "stci/core/parse.hpp"
#include "stci/ideal/deadline.hpp"
#include "stci/thoma/thoma.hpp"
#include "support/oracle.hpp"
#include "support/random.hpp"

namespace {

using namespace stci;
using Clock = std::chrono::steady_clock;

struct Failure {
  std::string why;
};

void require(bool ok, const std::string& why) {
  if (!ok) throw Failure{why};
}

Polynomial P(std::string_view text, Field k = {}) { return parse_polynomial(text, VariableSet::base(), k); }

// The char-3 fixture: f is the image of x^3 - w^2*y under the unipotent
// substitution w -> w+x+y+z, x -> x+z, y -> y+z, which preserves the curve;
// g is the image of w*z^3 - y^4 plus w*f.
const char* kFixtureF =
    "-w^2*y-w^2*z+w*x*y+w*x*z+w*y^2-w*y*z+w*z^2+x^3-x^2*y-x^2*z+x*y^2-x*y*z+x*z^2-y^3";
const char* kFixtureG = "w*z^3+x*z^3-y^4-y^3*z + w*(-w^2*y-w^2*z+w*x*y+w*x*z+w*y^2-w*y*z+w*z^2+x^3-x^2*y-x^2*z+x*y^2-x*y*z+x*z^2-y^3)";

void criterion_curve_ideal() {
  const CurveSpec c4 = CurveSpec::macaulay();
  const Ideal fixture(VariableSet::base(), Field(),
                      parse_polynomial_list("x*y-w*z, x^3-w^2*y, w*y^2-x^2*z, y^3-x*z^2", VariableSet::base(), Field()));
  require(radical_equal(curve_ideal(c4), fixture), "(4,3,1) curve ideal differs from the four binomials");
  for (const auto& g : fixture.generators())
    require(substitute(g, curve_parametrization(c4)).is_zero(), g.str() + " does not vanish on the curve");
  const CurveSpec c3 = CurveSpec::make(3, 2, 1);
  const Ideal cubic(VariableSet::base(), Field(),
                    parse_polynomial_list("x^2-w*y, x*y-w*z, y^2-x*z", VariableSet::base(), Field()));
  require(radical_equal(curve_ideal(c3), cubic), "(3,2,1) curve ideal differs from the three binomials");
  for (const auto& g : cubic.generators())
    require(substitute(g, curve_parametrization(c3)).is_zero(), g.str() + " does not vanish on the twisted cubic");
}

void criterion_decomposition() {
  const CurveSpec c = CurveSpec::macaulay();
  testing::Rng rng(2002);
  for (int trial = 0; trial < 200; ++trial) {
    const auto deg = static_cast<std::uint32_t>(rng.uniform(1, 5));
    const Polynomial f = rng.form(c.field, deg, 10);
    const Polynomial g = rng.form(c.field, static_cast<std::uint32_t>(rng.uniform(1, 5)), 10);
    const Decomposition d = decompose_bihomogeneous(c, f);
    Polynomial sum(VariableSet::base(), c.field);
    for (const auto& comp : d.components) {
      sum += comp.part;
      require(comp.degree.i + comp.degree.j == 4 * deg, "bidegree off the line i+j=4*deg");
    }
    require(sum == f, "components do not sum to " + f.str());
    const auto fg = extremal_components(decompose_bihomogeneous(c, f * g));
    require(fg.f_min == d.min().part * extremal_components(decompose_bihomogeneous(c, g)).f_min,
            "(fg)_min != f_min g_min for " + f.str());
  }
}

void criterion_lift_identity() {
  const CurveSpec c = CurveSpec::macaulay();
  testing::Rng rng(2003);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial f = rng.form(c.field, static_cast<std::uint32_t>(rng.uniform(1, 5)), 10);
    for (LiftMode mode : {LiftMode::lambda_only, LiftMode::mu_only, LiftMode::bivariate})
      require(thoma_lift(f, c, mode) == lift_from_components(f, c, mode), "lift mismatch on " + f.str());
  }
}

void criterion_curve_stability() {
  const CurveSpec c = CurveSpec::macaulay();
  testing::Rng rng(2004);
  const VariableSet lst{Var::lambda, Var::s, Var::t};
  SubstitutionMap param;
  for (const auto& [v, img] : curve_parametrization(c)) param[v] = img.in_ring(lst);
  param[Var::lambda] = Polynomial::variable(lst, c.field, Var::lambda);
  // f at the lambda-scaled point (l s)^4, (l s)^3 t, (l s) t^3, t^4
  SubstitutionMap scaled;
  auto img = [&](const char* text) { return parse_polynomial(text, lst, c.field); };
  scaled[Var::w] = img("l^4*s^4");
  scaled[Var::x] = img("l^3*s^3*t");
  scaled[Var::y] = img("l*s*t^3");
  scaled[Var::z] = img("t^4");
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial f = rng.in_curve_ideal(c, static_cast<std::uint32_t>(rng.uniform(2, 5)));
    const Polynomial F1 = thoma_lift(f, c, LiftMode::lambda_only);
    require(substitute(F1, param).is_zero(), "F1 does not vanish on the curve for " + f.str());
    require(substitute(f, scaled).is_zero(), "f does not vanish at the scaled point for " + f.str());
  }
}

void criterion_groebner() {
  using testing::NaiveOrder;
  const VariableSet ring{Var::x, Var::y, Var::z};
  testing::Rng rng(2005);
  for (const Field& k : {Field(), Field::prime(7)}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Polynomial> gens;
      for (int i = 0; i < rng.uniform(1, 3); ++i) gens.push_back(rng.polynomial(ring, k, 3, 3));
      const GroebnerBasis gb = buchberger(ring, k, gens);
      const auto defect = testing::naive_reduced_gb_defect(gb.elements(), gens, NaiveOrder::grevlex);
      require(!defect, defect.value_or(""));
      std::vector<Polynomial> perm(gens.rbegin(), gens.rend());
      require(buchberger(ring, k, perm).elements() == gb.elements(), "basis depends on generator order");
    }
  }
  const VariableSet R = VariableSet::base();
  auto I = [&](const char* text) { return Ideal(R, Field(), parse_polynomial_list(text, R, Field())); };
  require(in_radical(P("x"), I("x^2")), "x not in sqrt(x^2)");
  require(!in_radical(P("w"), I("x")), "w in sqrt(x)");
  require(intersect_ideals(I("x"), I("y")).generators() == std::vector<Polynomial>{P("x*y")}, "(x) cap (y) != (xy)");
  require(radical_equal(intersect_ideals(I("x, y"), I("x, z")), I("x, y*z")), "(x,y) cap (x,z) != (x,yz)");
  require(saturate(I("x^2*y, x*y^2"), P("x")).generators() == std::vector<Polynomial>{P("y")}, "saturation");
  require(dimension(curve_ideal(CurveSpec::macaulay())) == 2, "curve ideal dimension");
}

void criterion_containment() {
  const CurveSpec c = CurveSpec::macaulay();
  testing::Rng rng(2006);
  for (int trial = 0; trial < 50; ++trial) {
    const auto d1 = static_cast<std::uint32_t>(rng.uniform(2, 4)), d2 = static_cast<std::uint32_t>(rng.uniform(2, 4));
    const CandidatePair pair = CandidatePair::make(rng.in_curve_ideal(c, d1), rng.in_curve_ideal(c, d2), c);
    try {
      DeadlineScope guard(std::chrono::seconds(60));
      const IdentityCheck chk = verify_identity(pair, Identity::mpd1, Strictness::containment_only);
      require(!chk.factors.empty(), "no factors checked for " + pair.f.str());
      for (const auto& f : chk.factors)
        require(f.holds(), "factor " + f.factor + " fails for " + pair.f.str() + " / " + pair.g.str());
    } catch (const Timeout&) {
      throw Failure{"timeout guard fired on " + pair.f.str() + " / " + pair.g.str()};
    }
  }
}

void criterion_theorem1() {
  auto pair = [](const char* f, const char* g) { return CandidatePair::make(P(f), P(g), CurveSpec::macaulay()); };
  Theorem1Check c = check_theorem1(pair("y*(x*y-w*z) + x^3", "x*(x*y-w*z) + x^3"));
  require(c.min.t.str() == "x*y-w*z" && c.min.in_p && c.min.vanishes_on_curve, "constructed common factor");
  c = check_theorem1(pair("w*y", "w*x"));
  require(c.min.t.str() == "w" && !c.min.in_p && !c.min.vanishes_on_curve, "t_min = w");
  c = check_theorem1(pair("y^2", "x*y"));
  require(c.min.t.str() == "y" && c.min.in_radical_of_extremal, "y in sqrt(y^2, x*y)");
}

void criterion_stci_fixture() {
  const CurveSpec c = CurveSpec::macaulay(Field::prime(3));
  const CandidatePair pair = CandidatePair::make(P(kFixtureF, c.field), P(kFixtureG, c.field), c);
  require(is_stci(pair), "fixture is not a set-theoretic complete intersection");
  for (Identity which : {Identity::mpd1, Identity::mpd3, Identity::mpd4, Identity::mpd5}) {
    const IdentityCheck chk = verify_identity(pair, which, Strictness::full_equality);
    require(chk.holds(), identity_name(which) + " fails: " + chk.reverse_failure.value_or("containment"));
  }
  require(verify_radical_remark(pair).holds(), "radical remark");
  require(saturation_probe(pair).holds(), "saturation probe");
  const Theorem1Check t = check_theorem1(pair);
  require(t.min.theorem1a() && t.max.theorem1a() && t.min.theorem1b() && t.max.theorem1b(), "theorem 1 (a)/(b)");
}

int invoke(std::vector<std::string> args, std::string* out = nullptr) {
  args.insert(args.begin(), "stci");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  std::istringstream in;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), o, e, in);
  if (out) *out = o.str();
  return code;
}

void criterion_cli() {
  require(invoke({"curve-ideal"}) == 0, "curve-ideal exit");
  require(invoke({"curve-ideal", "--curve", "4,2,2"}) == 2, "bad curve exit");
  require(invoke({"check", "w+x^2", "x*y-w*z"}) == 2, "non-homogeneous exit");
  require(invoke({"check", "x*y-w*z", "x*y-w*z"}) == 1, "failing check exit");
  require(invoke({"check", "--only", "in_p", "x*y-w*z", "x^3-w^2*y"}) == 0, "passing check exit");
  std::string a, b;
  invoke({"check", "x*y-w*z", "x^3-w^2*y"}, &a);
  invoke({"check", "x*y-w*z", "x^3-w^2*y"}, &b);
  require(!a.empty() && a == b, "repeat runs differ");
  require(cli::serialize_report(cli::read_report(a)) == a, "report does not round-trip");
  std::string partial;
  const int code = invoke({"check", "--field", "fp:3", "--only", "mpd5,in_p", "--timeout-seconds", "1", "--", kFixtureF, kFixtureG},
                       &partial);
  require(code == 3, "timeout exit " + std::to_string(code));
  const cli::CheckReport rep = cli::read_report(partial);
  require(rep.find("mpd5")->verdict == cli::Verdict::undecided, "mpd5 not undecided");
  require(rep.find("in_p_f")->verdict == cli::Verdict::holds, "partial report lost in_p");
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0: no stated budget
  std::function<void()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "curve-ideal fixtures (4,3,1) and (3,2,1)", 5, criterion_curve_ideal},
      {2, "decomposition suite, 200 random forms", 10, criterion_decomposition},
      {3, "lift identity, 200 random forms x 3 modes", 10, criterion_lift_identity},
      {4, "curve stability, 100 random elements of p", 0, criterion_curve_stability},
      {5, "Groebner engine suite", 30, criterion_groebner},
      {6, "mpd1 containment, 50 random pairs in p", 300, criterion_containment},
      {7, "common-factor checker on engineered pairs", 0, criterion_theorem1},
      {8, "end-to-end STCI fixture over F_3", 600, criterion_stci_fixture},
      {9, "CLI contract: exit codes, determinism, timeout", 0, criterion_cli},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::string why;
    const auto start = Clock::now();
    try {
      c.body();
    } catch (const Failure& f) {
      why = f.why;
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double took = std::chrono::duration<double>(Clock::now() - start).count();
    if (why.empty() && c.limit_seconds > 0 && took > c.limit_seconds)
      why = "over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s budget";
    char timing[64];
    if (c.limit_seconds > 0)
      std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", took, c.limit_seconds);
    else
      std::snprintf(timing, sizeof timing, "%.2f s", took);
    std::printf("[%s] criterion %d: %s (%s)%s%s\n", why.empty() ? "PASS" : "FAIL", c.id, c.name, timing,
                why.empty() ? "" : ": ", why.c_str());
    std::fflush(stdout);
    failed += !why.empty();
  }
  return failed ? 1 : 0;
}
