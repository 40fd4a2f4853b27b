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

#include <gtest/gtest.h>

#include "stci/core/errors.hpp"
#include "stci//core/parse.hpp"
#include "support/random.hpp"

namespace stci {
namespace {

using testing::Rng;

const VariableSet kRing = VariableSet::with_lambda_mu();

Polynomial P(std::string_view text, VariableSet ring = kRing, Field k = {}) { return parse_polynomial(text, ring, k); }

// Evaluation at an integer point, straight from the term list.
mpq_class evaluate(const Polynomial& p, const std::map<Var, long>& point) {
  mpq_class sum = 0;
  for (const auto& t : p.terms()) {
    mpq_class term = t.coeff.value();
    for (Var v : t.mono.support().vars()) {
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), mpz_class(point.at(v)).get_mpz_t(), t.mono[v]);
      term *= pw;
    }
    sum += term;
  }
  return sum;
}

std::map<Var, long> random_point(Rng& rng) {
  std::map<Var, long> pt;
  for (Var v : kRing.vars()) pt[v] = rng.uniform(-4, 4);
  return pt;
}

TEST(Polynomial, CanonicalText) {
  EXPECT_EQ(P("y*x - z*w").str(), "x*y-w*z");
  EXPECT_EQ(P("-x").str(), "-x");
  EXPECT_EQ(P("3/2*w^4").str(), "3/2*w^4");
  EXPECT_EQ(P("0").str(), "0");
  EXPECT_EQ(P("x - x").str(), "0");
  EXPECT_EQ(P("(x+y)^2").str(), "x^2+2*x*y+y^2");
}

TEST(Polynomial, TermsSortedGrevlex) {
  // degree first, then the smallest last variable loses
  EXPECT_EQ(P("z^2 + w*z + x*y + w^3").str(), "w^3+x*y+w*z+z^2");
}

TEST(Polynomial, RingAxiomsOnRandomInputs) {
  Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial a = rng.polynomial(kRing, Field(), 5, 3);
    const Polynomial b = rng.polynomial(kRing, Field(), 5, 3);
    const Polynomial c = rng.polynomial(kRing, Field(), 5, 3);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(-(-a), a);
  }
}

TEST(Polynomial, ArithmeticCommutesWithEvaluation) {
  Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial a = rng.polynomial(kRing, Field(), 6, 4);
    const Polynomial b = rng.polynomial(kRing, Field(), 6, 4);
    const auto pt = random_point(rng);
    EXPECT_EQ(evaluate(a * b, pt), evaluate(a, pt) * evaluate(b, pt));
    EXPECT_EQ(evaluate(a - b, pt), evaluate(a, pt) - evaluate(b, pt));
    EXPECT_EQ(evaluate(a.pow(3), pt), evaluate(a, pt) * evaluate(a, pt) * evaluate(a, pt));
  }
}

TEST(Polynomial, ExactDivisionInvertsMultiplication) {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial a = rng.polynomial(kRing, Field(), 4, 3);
    const Polynomial b = rng.polynomial(kRing, Field(), 4, 3);
    if (b.is_zero()) {
      EXPECT_THROW(exact_divide(a, b), InvalidArgument);
      continue;
    }
    EXPECT_EQ(exact_divide(a * b, b), a);
  }
  EXPECT_THROW(exact_divide(P("x^2+1"), P("x")), InexactDivision);
}

TEST(Polynomial, SubstitutionIsAHomomorphism) {
  Rng rng(4);
  const VariableSet st{Var::s, Var::t};
  SubstitutionMap images;
  for (Var v : kRing.vars()) images[v] = rng.polynomial(st, Field(), 3, 2);
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial a = rng.polynomial(kRing, Field(), 4, 3);
    const Polynomial b = rng.polynomial(kRing, Field(), 4, 3);
    EXPECT_EQ(substitute(a * b, images), substitute(a, images) * substitute(b, images));
    EXPECT_EQ(substitute(a + b, images), substitute(a, images) + substitute(b, images));
  }
  SubstitutionMap partial{{Var::w, P("s", st)}};
  EXPECT_THROW(substitute(P("w+x"), partial), InvalidArgument);
}

TEST(Polynomial, RingAndFieldMismatchesAreRejected) {
  EXPECT_THROW(P("x", VariableSet::base()) + P("x"), RingMismatch);
  EXPECT_THROW(P("x", kRing, Field::prime(3)) * P("x"), RingMismatch);
  EXPECT_THROW(P("l*x").in_ring(VariableSet::base()), InvalidArgument);
  EXPECT_EQ(P("x", VariableSet::base()).in_ring(kRing), P("x"));
}

TEST(Polynomial, PrimeFieldReduction) {
  const Field k = Field::prime(3);
  EXPECT_EQ(P("(x+y)^3", kRing, k).str(), "x^3+y^3");
  EXPECT_EQ(P("4*x - x", kRing, k).str(), "0");
  EXPECT_EQ(P("-x", kRing, k).str(), "2*x");
}

TEST(Polynomial, Queries) {
  const Polynomial f = P("l^2*x^3 + l*m*y - 2");
  EXPECT_EQ(f.degree(), 5);
  EXPECT_FALSE(f.is_homogeneous());
  EXPECT_TRUE(P("x*y-w*z").is_homogeneous());
  EXPECT_EQ(f.support(), (VariableSet{Var::x, Var::y, Var::lambda, Var::mu}));
  EXPECT_EQ(f.max_exponent(Var::lambda), 2u);
  EXPECT_EQ(f.min_exponent(Var::lambda), 0u);
  EXPECT_EQ(P("2*x^2 + 4*y").monic().str(), "x^2+2*y");
  EXPECT_EQ(f.coefficient(Monomial()), Field().from_int(-2));
}

TEST(Monomial, OverflowIsRejected) {
  Monomial m = Monomial::of(Var::x, Monomial::kMaxExponent);
  EXPECT_THROW(m * Monomial::of(Var::x), InvalidArgument);
  EXPECT_THROW(Monomial::of(Var::x, Monomial::kMaxExponent + 1), InvalidArgument);
  EXPECT_NO_THROW(m * Monomial::of(Var::y));
}

}  // namespace
}  // namespace stci
