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

#ifndef LRCREAL_ERRORS_HPP
#define LRCREAL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lrcreal {

/// A value or coefficient outside the domain an operation accepts
/// (zero denominator, rational outside [0,1], negative coefficient, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Syntax error in an expression. `position` is a 1-based byte offset.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, std::string expected)
        : std::runtime_error("syntax error at position " + std::to_string(position) +
                             ": expected " + expected),
          position_(position), expected_(std::move(expected)) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

} // namespace lrcreal

#endif
