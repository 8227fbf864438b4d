// Copyright 2026 The qftlogic Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Command-line surface of the toolkit. Kept out of main() so tests can drive
 * every subcommand in-process with captured streams.
 */

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qftlogic {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/**
 * Runs one invocation. `args` holds the arguments after the program name.
 * Returns the process exit code: 0 success, 1 verification mismatch or
 * non-deterministic readout, 2 usage error, 3 I/O error. Shotless commands
 * are byte-deterministic; sampling requires an explicit --seed.
 */
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qftlogic
