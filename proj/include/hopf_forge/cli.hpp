/* Copyright 2026 The hopf-forge Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#ifndef HOPF_FORGE_CLI_HPP
#define HOPF_FORGE_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hopf_forge/decomp.hpp"
#include "hopf_forge/graded.hpp"

namespace hopf {

enum ExitCode : int { kExitOk = 0, kExitCheckFailure = 1, kExitInputError = 2, kExitResourceLimit = 3 };

struct RunConfig {
    std::string command;
    std::optional<std::string> input;
    std::optional<std::uint32_t> p;
    std::optional<int> max_length;
    std::string format = "text";
    std::uint64_t seed = 1;
    std::optional<std::string> only;
    std::optional<std::string> matrix;
    int k = 2;
    int n = 6;
    int d = 2;
    std::string mode = "graded";
};

enum class CheckStatus { pass, fail, skip };
const char* to_string(CheckStatus s) noexcept;

struct SuiteCheck {
    std::string name;
    CheckStatus status;
    std::string detail;
    double seconds = 0;
};

// Names of the property checks run by `verify`, sorted.
std::vector<std::string> verify_check_names();

// Runs the named checks (all when `only` is empty) in name order. Failures
// and errors are collected per check. Throws PreconditionViolation for an
// unknown check name.
std::vector<SuiteCheck> run_verify_suite(const GradedModule& v, int max_length, std::uint64_t seed,
                                         const std::optional<std::string>& only = std::nullopt);

std::string decomposition_json(const DecompositionReport& report);

// Default truncation: p^2 for p = 3, p otherwise.
int default_max_length(std::uint32_t p);

// Executes one subcommand, writing the report to `out` and diagnostics and
// timings to `err`. Returns the process exit code.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace hopf

#endif  // HOPF_FORGE_CLI_HPP
