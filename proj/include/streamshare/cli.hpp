// Copyright 2026 The streamshare Authors
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
#include <ostream>
#include <string>
#include <vector>

namespace streamshare {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitData = 2,
  kExitMismatch = 3,
};

/// Environment variable that overrides the default audit seed.
inline constexpr const char* kSeedEnvVar = "STREAMSHARE_SEED";
inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr std::uint64_t kDefaultTrials = 500;

/// Entry point of the `streamshare` tool; args excludes the program name.
/// Reports go to `out` (or --output), diagnostics to `err`.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace streamshare
