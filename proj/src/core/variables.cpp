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

#include "stci/core/variables.hpp"

#include <bit>

#include "stci/core/errors.hpp"

namespace stci {

namespace {
constexpr std::array<std::string_view, kVarCount> kNames = {"w", "x", "y", "z", "l",
                                                            "m", "s", "t", "u", "v"};
}

std::string_view var_name(Var v) { return kNames[index(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kVarCount; ++i)
    if (kNames[i] == name) return static_cast<Var>(i);
  return std::nullopt;
}

std::size_t VariableSet::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<Var> VariableSet::vars() const {
  std::vector<Var> out;
  for (std::size_t i = 0; i < kVarCount; ++i)
    if (bits_ & (1u << i)) out.push_back(static_cast<Var>(i));
  return out;
}

std::string VariableSet::str() const {
  std::string out;
  for (Var v : vars()) {
    if (!out.empty()) out += ',';
    out += var_name(v);
  }
  return out;
}

VariableSet parse_variable_set(std::string_view text) {
  VariableSet out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) {
      auto v = var_from_name(item);
      if (!v) throw InvalidArgument("unknown variable '" + std::string(item) + "'");
      out = out | VariableSet{*v};
    }
    pos = comma + 1;
  }
  return out;
}

}  // namespace stci
