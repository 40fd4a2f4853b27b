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

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "stci/grading/grading.hpp"
#include "stci/ideal/groebner.hpp"

namespace stci {

/// Generators over a declared ring. Reduced Groebner bases are computed on
/// demand and cached per monomial order; copies of an Ideal share the cache,
/// which is safe to read from several threads.
class Ideal {
 public:
  /// Generators are moved into `ring` (throws if one does not fit).
  Ideal(VariableSet ring, Field field, std::vector<Polynomial> generators);

  const VariableSet& ring() const { return ring_; }
  const Field& field() const { return field_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  const GroebnerBasis& groebner(const MonomialOrder& order = MonomialOrder::grevlex()) const;

  /// The extension ideal: same generators read in a larger ring.
  Ideal extended(VariableSet bigger) const;
  /// Sum with extra generators (same ring).
  Ideal plus(const std::vector<Polynomial>& more) const;

  bool is_unit() const { return groebner().is_unit(); }
  std::string str() const;

 private:
  struct Cache {
    std::mutex mu;
    std::vector<std::pair<MonomialOrder, std::shared_ptr<const GroebnerBasis>>> bases;
  };

  VariableSet ring_;
  Field field_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

bool in_ideal(const Polynomial& f, const Ideal& I);

/// f in sqrt(I): true iff 1 lies in I + (1 - u*f) over the ring extended by u.
bool in_radical(const Polynomial& f, const Ideal& I);

/// I cap J via eliminating v from v*I + (1-v)*J.
Ideal intersect_ideals(const Ideal& I, const Ideal& J);

/// I : f^infinity via eliminating u from I + (1 - u*f). Throws InvalidArgument on f = 0.
Ideal saturate(const Ideal& I, const Polynomial& f);

/// I cap k[ring \ front], read off a reduced basis under the block order.
Ideal eliminate(const Ideal& I, VariableSet front);

/// The prime ideal of the monomial curve in k[w,x,y,z], obtained by
/// eliminating s, t from the parametrization. Memoised per curve.
Ideal curve_ideal(const CurveSpec& curve);

/// The parametrization images w -> s^d, x -> s^a t^b, y -> s^b t^a, z -> t^d in k[s,t].
SubstitutionMap curve_parametrization(const CurveSpec& curve);

/// Generator-wise double radical membership.
bool radical_equal(const Ideal& I, const Ideal& J);

/// Krull dimension of ring/I from the largest set of ring variables
/// independent modulo the leading-term ideal. Throws InvalidArgument on the
/// unit ideal.
std::size_t dimension(const Ideal& I);

}  // namespace stci
