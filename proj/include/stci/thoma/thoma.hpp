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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stci/core/errors.hpp"
#include "stci/grading/grading.hpp"
#include "stci/ideal/ideal.hpp"

namespace stci {

/// Which torus parameters a lift introduces:
///   lambda_only: f(l^d w, l^a x, l^b y, z)          in R[l]
///   mu_only:     f(w, m^b x, m^a y, m^d z)          in R[m]
///   bivariate:   f(l^d w, l^a m^b x, l^b m^a y, m^d z) in R[l,m]
enum class LiftMode { lambda_only, mu_only, bivariate };

VariableSet lift_ring(LiftMode mode);

/// The lift computed by substitution. Throws InvalidArgument if f is zero or
/// uses variables other than w, x, y, z.
Polynomial thoma_lift(const Polynomial& f, const CurveSpec& curve, LiftMode mode);

/// The same lift assembled from the bihomogeneous decomposition: the sum of
/// f^(i,j) * l^i (resp. m^j, resp. l^i m^j). Kept separate from thoma_lift so
/// the two routes can be checked against each other.
Polynomial lift_from_components(const Polynomial& f, const CurveSpec& curve, LiftMode mode);

struct Tilde {
  Polynomial reduced;
  std::map<Var, std::uint32_t> stripped;  // lambda and/or mu powers divided out
};

/// Divides out the largest power of lambda and of mu dividing every term.
Tilde tilde_reduce(const Polynomial& F);

/// Raised when an identity check needs f, g in the curve ideal and they are not.
class PairNotInCurveIdeal : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Two nonzero forms of k[w,x,y,z] (usual grading) together with the curve.
struct CandidatePair {
  Polynomial f, g;
  CurveSpec curve;
  std::uint32_t d1 = 0, d2 = 0;

  /// Throws InvalidArgument naming the offending input when f or g is zero,
  /// not homogeneous, outside k[w,x,y,z] or over another field.
  static CandidatePair make(const Polynomial& f, const Polynomial& g, const CurveSpec& curve);
};

struct ExtremalPair {
  Extremal f, g;
};
ExtremalPair extremal_pair(const CandidatePair& pair);

struct CommonDivisors {
  Polynomial t_min, t_max;
};
CommonDivisors compute_t(const CandidatePair& pair);

/// sqrt((f,g)R) == p
bool is_stci(const CandidatePair& pair);

struct ComponentConditions {
  std::size_t count_f = 0, count_g = 0;
  bool neither_bihomogeneous = false;  // both counts >= 2
  bool three_for_one = false;          // at least one count >= 3
  bool three_for_each = false;         // both counts >= 3
};
ComponentConditions check_component_conditions(const CandidatePair& pair);

struct SideCheck {
  Polynomial t;
  bool non_unit = false;
  bool in_radical_of_extremal = false;  // t in sqrt((f_ext, g_ext)R)
  bool in_p = false;                    // membership in the curve ideal
  bool vanishes_on_curve = false;       // parametrization substitution

  bool theorem1a() const { return non_unit && in_radical_of_extremal; }
  bool theorem1b() const { return in_p; }
};

struct Theorem1Check {
  SideCheck min, max;
};

/// Both membership routes for condition (b) must agree; a disagreement is an
/// engine fault and raises std::logic_error.
Theorem1Check check_theorem1(const CandidatePair& pair);

enum class Identity { mpd1, mpd3, mpd4, mpd5 };
enum class Strictness { containment_only, full_equality };

std::string identity_name(Identity which);
std::string strictness_name(Strictness s);

struct FactorVerdict {
  std::string factor;
  bool f_in = false;  // lifted f-tilde in the radical of this factor
  bool g_in = false;
  bool holds() const { return f_in && g_in; }
};

struct IdentityCheck {
  Identity which = Identity::mpd1;
  Strictness strictness = Strictness::full_equality;
  std::vector<FactorVerdict> factors;
  bool containment = false;
  std::optional<bool> reverse;              // only under full_equality
  std::optional<std::string> reverse_failure;  // first right-hand generator outside the left radical
  bool holds() const { return containment && reverse.value_or(true); }
};

/// Throws PairNotInCurveIdeal if f or g is not in the curve ideal.
IdentityCheck verify_identity(const CandidatePair& pair, Identity which, Strictness strictness);

struct RadicalRemark {
  bool lambda_t_max = false;  // l * t_max in sqrt((F~, G~)S)
  bool mu_t_min = false;      // m * t_min in sqrt((F~, G~)S)
  bool holds() const { return lambda_t_max && mu_t_min; }
};
RadicalRemark verify_radical_remark(const CandidatePair& pair);

struct SaturationProbe {
  std::vector<Polynomial> saturation;  // generators of (F1~, G1~)T : l^inf
  bool saturation_in_p = false;
  bool p_in_saturation = false;
  std::optional<std::string> failure;
  bool holds() const { return saturation_in_p && p_in_saturation; }
};
SaturationProbe saturation_probe(const CandidatePair& pair);

}  // namespace stci
