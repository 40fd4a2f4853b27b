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

#pragma once

#include <string>

#include "stci/core/polynomial.hpp"

namespace stci {

/// A monomial order over the variable universe (w > x > ... > v). The block
/// order compares the front block by grevlex first and breaks ties by grevlex
/// on the remaining variables, so it eliminates exactly the front block.
class MonomialOrder {
 public:
  enum class Kind { lex, grevlex, block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, {}); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, {}); }
  static MonomialOrder block(VariableSet front) { return MonomialOrder(Kind::block, front); }

  Kind kind() const { return kind_; }
  VariableSet front() const { return front_; }

  /// >0 if a > b, <0 if a < b, 0 if equal.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// Leading term of a nonzero polynomial under this order.
  const Polynomial::Term& leading(const Polynomial& p) const;

  std::string name() const;
  bool operator==(const MonomialOrder&) const = default;

 private:
  MonomialOrder(Kind k, VariableSet front) : kind_(k), front_(front) {}
  Kind kind_;
  VariableSet front_;
};

}  // namespace stci
