// Copyright 2026 The qclink Authors
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

#ifndef QCLINK_CLI_H
#define QCLINK_CLI_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace qclink {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitConfig = 2,
    kExitNumericalGuard = 3,
    kExitMismatch = 4,
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view data);

std::string_view version_string();

struct ReproductionRow {
    std::string quantity;
    std::string computed;
    std::string expected;
    std::string tolerance;
    bool pass;
};

/// Recomputes each reference planner/detector figure and compares it with
/// the expected value.
std::vector<ReproductionRow> reproduction_table();

/// Entry point for the `qclink` tool. `args` excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qclink

#endif
