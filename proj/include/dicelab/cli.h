// Copyright 2026 The Dicelab Authors
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

#ifndef DICELAB_CLI_H_
#define DICELAB_CLI_H_

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace dicelab {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitFalsified = 3;

// Results of the bundled checks for one n. Checks that only make sense for
// n >= 4 are nullopt below that.
struct SuiteRow {
  int sides = 0;
  std::size_t space_size = 0;
  bool standard_neutrality = false;
  std::optional<bool> xi_characterization;
  std::optional<bool> counter_totality;
  std::optional<bool> one_step_counter_exists;
  bool connectivity = false;
  // Unique (S_n, S_n) for n >= 4; (S_n, S_n) among the equilibria below.
  bool nash = false;

  bool Passed() const;
};

struct VerificationSuiteReport {
  std::vector<SuiteRow> rows;
  bool Passed() const;
};

VerificationSuiteReport RunVerificationSuite(int max_sides, int workers = 1);

// Parses `args` (without the program name), runs the subcommand and writes
// its output to `out` (or to --output) and diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace dicelab

#endif  // DICELAB_CLI_H_
