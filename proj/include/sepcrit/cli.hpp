// Copyright 2026 The sepcrit Authors
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

#include <iosfwd>
#include <string>
#include <vector>

namespace sepcrit::cli {

enum ExitCode : int {
  kSeparable = 0,
  kEntangled = 1,
  kUsage = 2,
  kNumerical = 3,
};

/// Runs the command line `args` (program name excluded). The report goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct Grid {
  std::vector<double> points;
};

/// "start:stop:step" (inclusive of stop up to rounding), "a,b,c", or "x".
Grid parse_grid(const std::string& text);

}  // namespace sepcrit::cli
