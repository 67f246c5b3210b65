// Copyright 2026 The lrcreal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The `lrcreal` subcommands as plain functions, so tests and bindings can
// run them without spawning a process.

#ifndef LRCREAL_COMMANDS_HPP
#define LRCREAL_COMMANDS_HPP

#include <cstddef>
#include <cstdint>
#include <string>

#include "lrcreal/affine.hpp"

namespace lrcreal {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kParse = 1;
inline constexpr int kDomain = 2;
inline constexpr int kSelftestFailed = 3;
} // namespace exit_code

struct CommandResult {
    int exit_code = exit_code::kOk;
    std::string out; // stdout text, newline-terminated lines
    std::string err; // stderr text
};

enum class OutputFormat { Digits, Interval, Decimal };

/// Parses "digits", "interval" or "decimal". Throws std::invalid_argument.
OutputFormat parse_output_format(const std::string& name);

CommandResult eval_command(const std::string& expr, std::size_t digits = 32,
                           OutputFormat format = OutputFormat::Digits, std::size_t decimals = 10);

/// Oracle battery: for each case, a random rational through from_rational and
/// a random checked affine combination of two random redundant inputs, each
/// checked for containment in the depth-`depth` interval.
CommandResult selftest_command(std::size_t cases, std::size_t depth, std::uint64_t seed,
                               const EngineOptions& options = {});

CommandResult fib_command(std::size_t count);

} // namespace lrcreal

#endif
