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

#include "stci/core/errors.hpp"

namespace stci {

/// Raised from inside a Groebner computation once the active deadline passes.
class Timeout : public Error {
 public:
  using Error::Error;
};

/// Installs a per-thread deadline for the lifetime of the scope. Scopes nest:
/// the earlier deadline wins, and the previous one is restored on exit. An
/// empty budget leaves the enclosing deadline in force.
class DeadlineScope {
 public:
  using Clock = std::chrono::steady_clock;

  explicit DeadlineScope(std::optional<Clock::duration> budget);
  ~DeadlineScope();
  DeadlineScope(const DeadlineScope&) = delete;
  DeadlineScope& operator=(const DeadlineScope&) = delete;

 private:
  std::optional<Clock::time_point> previous_;
};

/// Throws Timeout if the current thread's deadline has passed. Cheap enough to
/// call from inner loops: the clock is only read every few hundred calls.
void check_deadline();

}  // namespace stci
