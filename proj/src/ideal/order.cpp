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

#include "stci/ideal/order.hpp"

#include "stci/core/errors.hpp"

namespace stci {

namespace {

// grevlex restricted to the lanes in mask
int grevlex_masked(const Monomial& a, const Monomial& b, std::uint16_t mask) {
  const auto& k = simd::kernels();
  std::uint32_t da = k.degree(a.data(), mask), db = k.degree(b.data(), mask);
  if (da != db) return da > db ? 1 : -1;
  int i = k.last_diff(a.data(), b.data(), mask);
  if (i < 0) return 0;
  return a.exponent(static_cast<std::size_t>(i)) < b.exponent(static_cast<std::size_t>(i)) ? 1 : -1;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::grevlex:
      return compare_grevlex(a, b);
    case Kind::lex: {
      int i = simd::kernels().first_diff(a.data(), b.data(), 0xFFFF);
      if (i < 0) return 0;
      return a.exponent(static_cast<std::size_t>(i)) > b.exponent(static_cast<std::size_t>(i)) ? 1 : -1;
    }
    case Kind::block: {
      const std::uint16_t front = front_.mask();
      if (int c = grevlex_masked(a, b, front)) return c;
      return grevlex_masked(a, b, static_cast<std::uint16_t>(~front));
    }
  }
  return 0;
}

const Polynomial::Term& MonomialOrder::leading(const Polynomial& p) const {
  if (p.is_zero()) throw InvalidArgument("leading term of zero polynomial");
  if (kind_ == Kind::grevlex) return p.leading();
  const Polynomial::Term* best = &p.terms().front();
  for (const auto& t : p.terms())
    if (compare(t.mono, best->mono) > 0) best = &t;
  return *best;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::grevlex:
      return "grevlex";
    case Kind::lex:
      return "lex";
    case Kind::block:
      return "block(" + front_.str() + ")";
  }
  return "?";
}

}  // namespace stci
