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

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stci {

// The fixed variable universe. Slot order is the variable order used by every
// monomial order in the library: w > x > y > z > lambda > mu > s > t > u > v.
// u is reserved for the Rabinowitsch construction, v for ideal intersection.
enum class Var : std::uint8_t { w = 0, x, y, z, lambda, mu, s, t, u, v };

inline constexpr std::size_t kVarCount = 10;

inline constexpr std::size_t index(Var v) { return static_cast<std::size_t>(v); }

/// Name used in polynomial text: `l` is lambda and `m` is mu.
std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

/// An ordered set of variables drawn from the universe; iteration follows the
/// universe order, so extensions R < T < S never reorder existing variables.
class VariableSet {
 public:
  constexpr VariableSet() = default;
  constexpr VariableSet(std::initializer_list<Var> vars) {
    for (Var v : vars) bits_ |= bit(v);
  }
  static constexpr VariableSet from_mask(std::uint16_t mask) {
    VariableSet s;
    s.bits_ = mask;
    return s;
  }

  /// R = k[w,x,y,z]
  static constexpr VariableSet base() { return {Var::w, Var::x, Var::y, Var::z}; }
  /// T = R[lambda]
  static constexpr VariableSet with_lambda() { return base() | VariableSet{Var::lambda}; }
  /// S = R[lambda, mu]
  static constexpr VariableSet with_lambda_mu() { return with_lambda() | VariableSet{Var::mu}; }

  constexpr bool contains(Var v) const { return (bits_ & bit(v)) != 0; }
  constexpr bool contains(VariableSet other) const { return (other.bits_ & ~bits_) == 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint16_t mask() const { return bits_; }
  std::size_t size() const;
  std::vector<Var> vars() const;
  std::string str() const;

  constexpr VariableSet operator|(VariableSet o) const { return from_mask(bits_ | o.bits_); }
  constexpr VariableSet operator&(VariableSet o) const { return from_mask(bits_ & o.bits_); }
  constexpr VariableSet minus(VariableSet o) const { return from_mask(bits_ & ~o.bits_); }
  constexpr bool operator==(const VariableSet&) const = default;

 private:
  static constexpr std::uint16_t bit(Var v) { return static_cast<std::uint16_t>(1u << index(v)); }
  std::uint16_t bits_ = 0;
};

/// Parses "w,x,y,z,l" into a VariableSet; throws InvalidArgument on unknown names.
VariableSet parse_variable_set(std::string_view text);

}  // namespace stci
