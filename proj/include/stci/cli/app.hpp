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

#include <iostream>

namespace stci::cli {

/// The `stci` command line. Exit codes: 0 success (for `check`: every
/// requested verdict holds), 1 a verdict fails, 2 bad input or flags,
/// 3 a Groebner computation exceeded --timeout-seconds.
int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr,
            std::istream& in = std::cin);

}  // namespace stci::cli
