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

const VariableSet kAll = VariableSet::with_lambda_mu() | VariableSet{Var::s, Var::t};

TEST(Parse, RoundTripsCanonicalText) {
  testing::Rng rng(11);
  for (const Field& k : {Field(), Field::prime(3), Field::prime(65521)}) {
    for (int trial = 0; trial < 200; ++trial) {
      const Polynomial p = rng.polynomial(kAll, k, 6, 5);
      EXPECT_EQ(parse_polynomial(p.str(), kAll, k), p) << p.str();
    }
  }
}

TEST(Parse, GrammarCorners) {
  const Field q;
  EXPECT_EQ(parse_polynomial(" + x ", kAll, q).str(), "x");
  EXPECT_EQ(parse_polynomial("-(x-y)", kAll, q).str(), "-x+y");
  EXPECT_EQ(parse_polynomial("2/4*x", kAll, q).str(), "1/2*x");
  EXPECT_EQ(parse_polynomial("x^0", kAll, q).str(), "1");
  EXPECT_EQ(parse_polynomial("(l*m)^2*s", kAll, q).str(), "l^2*m^2*s");
  EXPECT_EQ(parse_polynomial("123456789012345678901234567890*w", kAll, q).str(),
            "123456789012345678901234567890*w");
}

TEST(Parse, ErrorsCarryPositions) {
  const Field q;
  auto position_of = [&](std::string_view text) -> long {
    try {
      parse_polynomial(text, VariableSet::base(), q);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  EXPECT_EQ(position_of("x+"), 2);
  EXPECT_EQ(position_of("x*q"), 2);
  EXPECT_EQ(position_of("l*x"), 0);  // outside k[w,x,y,z]
  EXPECT_EQ(position_of("(x+y"), 4);
  EXPECT_EQ(position_of("x y"), 2);
  EXPECT_NE(position_of("1/0"), -1);
  EXPECT_THROW(parse_polynomial("1/3", VariableSet::base(), Field::prime(3)), ParseError);
}

TEST(Parse, Lists) {
  const auto ps = parse_polynomial_list("x*y-w*z, x^3-w^2*y;\n\n y^3-x*z^2\n", VariableSet::base(), Field());
  ASSERT_EQ(ps.size(), 3u);
  EXPECT_EQ(ps[2].str(), "y^3-x*z^2");
}

TEST(Variables, ParseSets) {
  EXPECT_EQ(parse_variable_set("w, x,y,z"), VariableSet::base());
  EXPECT_EQ(parse_variable_set("l,m"), (VariableSet{Var::lambda, Var::mu}));
  EXPECT_THROW(parse_variable_set("w,q"), InvalidArgument);
}

}  // namespace
}  // namespace stci
