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

#include <chrono>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "stci/thoma/thoma.hpp"

namespace stci::cli {

enum class Verdict { holds, fails, undecided, not_applicable, skipped };

/// JSON spelling: true, false, "undecided", "not_applicable", "skipped".
std::string verdict_name(Verdict v);
inline Verdict verdict_of(bool b) { return b ? Verdict::holds : Verdict::fails; }

struct FactorEntry {
  std::string factor;
  bool f_in = false, g_in = false;
  bool operator==(const FactorEntry&) const = default;
};

struct Entry {
  Verdict verdict = Verdict::skipped;
  std::string strictness = "exact";  // "exact" or, for identities, "containment"/"full"
  std::vector<std::pair<std::string, bool>> details;
  std::vector<FactorEntry> factors;
  std::vector<std::string> generators;
  std::optional<std::string> note;
  std::optional<double> seconds;
  bool operator==(const Entry&) const = default;
};

struct ComponentSummary {
  std::size_t count = 0;
  std::vector<BiDegree> bidegrees;
  bool operator==(const ComponentSummary&) const = default;
};

struct CheckReport {
  std::string curve, field, strictness;
  std::uint32_t d1 = 0, d2 = 0;
  std::string f, g;
  ComponentSummary f_components, g_components;
  std::string t_min, t_max;
  bool t_min_is_unit = false, t_max_is_unit = false;
  bool char_p_caveat = false;
  std::vector<std::pair<std::string, Entry>> verdicts;  // fixed order

  const Entry* find(const std::string& name) const;
  bool operator==(const CheckReport&) const = default;
};

/// Check groups selectable with --only.
inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"in_p",  "is_stci", "theorem1",       "mpd1",
                                              "mpd3",  "mpd4",    "mpd5",           "radical_remark",
                                              "saturation_probe", "component_conditions"};
  return names;
}

struct CheckOptions {
  Strictness strictness = Strictness::full_equality;
  std::set<std::string> only;  // empty: everything
  std::optional<std::chrono::seconds> timeout;
  bool timings = false;
};

/// Runs every requested check. A check whose Groebner computation overruns
/// the timeout is marked undecided; the rest of the report is still filled.
CheckReport run_check(const CandidatePair& pair, const CheckOptions& options);

/// 0 when every gating verdict holds (skipped and not_applicable are neutral),
/// 3 when any is undecided, otherwise 1.
int exit_code(const CheckReport& report);

std::string serialize_report(const CheckReport& report);
/// Inverse of serialize_report. Throws InvalidArgument on malformed input.
CheckReport read_report(const std::string& json);

}  // namespace stci::cli
