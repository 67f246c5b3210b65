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

// lrcreal eval <EXPR> [--digits N] [--format digits|interval|decimal] [--decimals K]
// lrcreal selftest [--cases N] [--depth D] [--seed S]
// lrcreal fib [--count N]

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lrcreal/commands.hpp"

int main(int argc, char** argv) {
    using namespace lrcreal;

    CLI::App app{"Exact real arithmetic on [0,1] with L/R/C digit streams"};
    app.require_subcommand(1);

    std::string expr;
    std::size_t digits = 32;
    std::string format = "digits";
    std::size_t decimals = 10;
    auto* eval = app.add_subcommand("eval", "Evaluate an expression");
    eval->add_option("expr", expr, "Expression, e.g. \"avg(1/3, 1/6)\"")->required();
    eval->add_option("--digits", digits, "Digits to expand")->capture_default_str();
    eval->add_option("--format", format, "digits, interval or decimal")
        ->check(CLI::IsMember({"digits", "interval", "decimal"}))
        ->capture_default_str();
    eval->add_option("--decimals", decimals, "Decimal places for --format decimal")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::size_t cases = 1000;
    std::size_t depth = 40;
    std::uint64_t seed = 42;
    auto* selftest = app.add_subcommand("selftest", "Run the rational oracle battery");
    selftest->add_option("--cases", cases, "Number of random cases")->capture_default_str();
    selftest->add_option("--depth", depth, "Digits checked per case")->capture_default_str();
    selftest->add_option("--seed", seed, "Random seed")->capture_default_str();

    std::size_t count = 10;
    auto* fib = app.add_subcommand("fib", "Print the Fibonacci stream and check its properties");
    fib->add_option("--count", count, "Elements to print")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : exit_code::kParse;
    }

    CommandResult result;
    if (*eval) {
        result = eval_command(expr, digits, parse_output_format(format), decimals);
    } else if (*selftest) {
        result = selftest_command(cases, depth, seed);
    } else {
        result = fib_command(count);
    }
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
