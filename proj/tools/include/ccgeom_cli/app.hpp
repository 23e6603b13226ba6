// Copyright 2026 The ccgeom Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

namespace ccgeom::cli {

enum ExitCode : int { kExitOk = 0, kExitInput = 1, kExitBudget = 2, kExitInvariant = 3 };

struct CommandOptions {
  std::filesystem::path scenario;
  /// Overrides the scenario seed.
  std::optional<std::uint64_t> seed;
  std::filesystem::path out{"."};
  /// Overrides the scenario eps_list.
  std::vector<double> eps_list;
};

// Each command writes its CSV files and `<command>_report.txt` into
// options.out, echoes the report to `out` and returns kExitOk or
// kExitInvariant. Errors propagate as exceptions.
int cmd_ccdist(const CommandOptions& options, std::ostream& out);
int cmd_smooth(const CommandOptions& options, std::ostream& out);
int cmd_zigzag(const CommandOptions& options, std::ostream& out);
int cmd_flow(const CommandOptions& options, std::ostream& out);
int cmd_verify(const CommandOptions& options, std::ostream& out);
/// Writes the curve fixtures; needs no scenario.
int cmd_fixtures_regenerate(const CommandOptions& options, std::ostream& out);

/// Parses the command line, dispatches and maps exceptions to exit codes,
/// printing a one-line diagnostic on `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ccgeom::cli
