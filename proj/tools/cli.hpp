/*
 * Copyright 2026 The skewcodes Authors
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
 */

/// Command-line front end. `run_cli` is the whole program minus process setup,
/// so tests can drive it in-process.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace skewcodes::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kUsage = 2,
    kBudget = 3,
    kPrecondition = 4,
};

/// Fully resolved invocation.
struct JobConfig {
    std::string command;
    std::uint32_t p = 0;
    std::uint32_t s = 1;
    std::optional<std::vector<std::uint32_t>> modulus;
    std::uint32_t theta_t = 0;
    std::string beta = "0";
    std::map<std::string, std::string> params;  // command-specific flags
    std::string format = "pretty";
    std::string out;  // empty = stdout
    unsigned jobs = 1;
    std::uint64_t budget = 0;
};

nlohmann::json to_json(const JobConfig& c);
JobConfig config_from_json(const nlohmann::json& j);

/// Runs one command on an already parsed configuration, writing to `out`.
int execute(const JobConfig& cfg, std::ostream& out, std::ostream& err);

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewcodes::cli
