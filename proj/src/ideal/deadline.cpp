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

#include "stci/ideal/deadline.hpp"

namespace stci {

namespace {
thread_local std::optional<DeadlineScope::Clock::time_point> t_deadline;
thread_local unsigned t_ticks = 0;
}  // namespace

DeadlineScope::DeadlineScope(std::optional<Clock::duration> budget) : previous_(t_deadline) {
  if (!budget) return;
  auto mine = Clock::now() + *budget;
  if (!t_deadline || mine < *t_deadline) t_deadline = mine;
}

DeadlineScope::~DeadlineScope() { t_deadline = previous_; }

void check_deadline() {
  if (!t_deadline) return;
  if (++t_ticks % 256 != 0) return;
  if (DeadlineScope::Clock::now() >= *t_deadline) throw Timeout("Groebner computation exceeded its time budget");
}

}  // namespace stci
