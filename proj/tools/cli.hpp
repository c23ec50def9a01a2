/*
 * Copyright 2026 The galmon Authors
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

// Batch front end: one command per invocation, a JSON (or DOT) report on
// standard output, exit code 0 on success, 1 on invalid input or a failed
// check, 2 when a sizing guard trips.

#ifndef GALMON_TOOLS_CLI_HPP
#define GALMON_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace galmon::cli {

inline constexpr int kExitOk         = 0;
inline constexpr int kExitInvalid    = 1;
inline constexpr int kExitSizing     = 2;
inline constexpr const char* kSchema = "galmon/1";

struct JobConfig {
  std::string              command;
  std::string              monoid;   // file path, or builtin:<name>
  std::vector<std::string> actions;  // file paths
  std::string              site = "default";
  std::string              sub;
  std::string              hom;
  std::string              out  = "json";
  std::uint64_t            seed = 1;
  std::size_t              max_families = 10'000'000;
};

const std::vector<std::string>& commands();

int run(const JobConfig& job, std::ostream& out, std::ostream& err);

/// Parses argv and runs the job.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace galmon::cli

#endif  // GALMON_TOOLS_CLI_HPP
