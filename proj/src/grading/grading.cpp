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

#include "stci/grading/grading.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "stci/core/errors.hpp"

namespace stci {

CurveSpec CurveSpec::make(std::uint32_t d, std::uint32_t a, std::uint32_t b, Field field) {
  if (a + b != d) throw InvalidArgument("curve (" + std::to_string(d) + "," + std::to_string(a) + "," +
                                        std::to_string(b) + "): a+b must equal d");
  if (std::gcd(a, b) != 1) throw InvalidArgument("gcd(a,b) must be 1");
  if (!(a > b && b >= 1)) throw InvalidArgument("curve parameters must satisfy a > b >= 1");
  return CurveSpec{d, a, b, field};
}

CurveSpec CurveSpec::parse(const std::string& text, Field field) {
  std::uint32_t v[3];
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> v[0] >> c1 >> v[1] >> c2 >> v[2]) || c1 != ',' || c2 != ',' || !in.eof())
    throw InvalidArgument("bad curve '" + text + "' (expected d,a,b)");
  return make(v[0], v[1], v[2], field);
}

std::string CurveSpec::str() const {
  return std::to_string(d) + "," + std::to_string(a) + "," + std::to_string(b);
}

BiDegree bidegree(const CurveSpec& curve, const Monomial& mono) {
  if (!VariableSet::base().contains(mono.support()))
    throw InvalidArgument("bidegree: monomial mentions variables outside w,x,y,z");
  std::uint32_t ew = mono[Var::w], ex = mono[Var::x], ey = mono[Var::y], ez = mono[Var::z];
  return {curve.d * ew + curve.a * ex + curve.b * ey, curve.b * ex + curve.a * ey + curve.d * ez};
}

Decomposition decompose_bihomogeneous(const CurveSpec& curve, const Polynomial& f) {
  if (f.is_zero()) throw InvalidArgument("cannot decompose the zero polynomial");
  if (!VariableSet::base().contains(f.support()))
    throw InvalidArgument("polynomial " + f.str() + " is not in k[w,x,y,z]");
  std::map<BiDegree, std::vector<Polynomial::Term>> groups;
  for (const auto& t : f.terms()) groups[bidegree(curve, t.mono)].push_back(t);
  Decomposition dec;
  for (auto& [deg, terms] : groups)
    dec.components.push_back({deg, Polynomial::from_terms(f.ring(), f.field(), std::move(terms))});
  return dec;
}

Extremal extremal_components(const Decomposition& dec) {
  if (dec.components.empty()) throw InvalidArgument("empty decomposition");
  return {dec.min().part, dec.max().part, dec.min().degree.i, dec.max().degree.i, dec.count()};
}

}  // namespace stci
