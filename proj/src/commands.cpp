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

#include "lrcreal/commands.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "lrcreal/errors.hpp"
#include "lrcreal/exercises.hpp"
#include "lrcreal/expr.hpp"
#include "lrcreal/oracle.hpp"
#include "lrcreal/real.hpp"

namespace lrcreal {

OutputFormat parse_output_format(const std::string& name) {
    if (name == "digits") return OutputFormat::Digits;
    if (name == "interval") return OutputFormat::Interval;
    if (name == "decimal") return OutputFormat::Decimal;
    throw std::invalid_argument("unknown format '" + name + "' (expected digits, interval or decimal)");
}

CommandResult eval_command(const std::string& expr, std::size_t digits, OutputFormat format,
                           std::size_t decimals) {
    CommandResult result;
    try {
        ExprPtr e = parse_expr(expr);
        ExactReal x = evaluate(*e, digits);
        switch (format) {
        case OutputFormat::Digits: result.out = x.digit_string(digits); break;
        case OutputFormat::Interval: result.out = to_interval(x, digits).to_string(); break;
        case OutputFormat::Decimal: result.out = to_decimal(x, decimals); break;
        }
        result.out += '\n';
    } catch (const ParseError& ex) {
        result.exit_code = exit_code::kParse;
        result.err = std::string("error: ") + ex.what() + "\n";
    } catch (const DomainError& ex) {
        result.exit_code = exit_code::kDomain;
        result.err = std::string("error: ") + ex.what() + "\n";
    }
    return result;
}

namespace {

constexpr std::uint64_t kMaxDen = 1000000;

struct AffineCase {
    Rational ca, cb, cc, p, q;
};

AffineCase random_affine_case(std::mt19937_64& rng) {
    // Weights over a common total keep ca + cb + cc <= 1.
    std::uint64_t w[4];
    for (auto& wi : w) wi = oracle::uniform(rng, 1000);
    BigInt total(static_cast<unsigned long>(w[0] + w[1] + w[2] + w[3] + 1));
    auto frac = [&](std::uint64_t wi) { return Rational(BigInt(static_cast<unsigned long>(wi)), total); };
    return {frac(w[0]), frac(w[1]), frac(w[2]), oracle::random_unit_rational(rng, kMaxDen),
            oracle::random_unit_rational(rng, kMaxDen)};
}

} // namespace

CommandResult selftest_command(std::size_t cases, std::size_t depth, std::uint64_t seed,
                               const EngineOptions& options) {
    std::mt19937_64 rng(seed);
    std::ostringstream out;
    std::size_t passed = 0;
    for (std::size_t i = 0; i < cases; ++i) {
        Rational r = oracle::random_unit_rational(rng, kMaxDen);
        AffineCase ac = random_affine_case(rng);
        std::uint64_t s1 = rng();
        std::uint64_t s2 = rng();

        Interval ir = to_interval(from_rational(r), depth);
        bool ok = true;
        if (!ir.contains(r)) {
            ok = false;
            out << "FAIL case " << i << ": from_rational(" << r << ") depth " << depth << " interval " << ir
                << '\n';
        }

        ExactReal x(oracle::redundant_digits(ac.p, s1));
        ExactReal y(oracle::redundant_digits(ac.q, s2));
        Rational expected = ac.ca * ac.p + ac.cb * ac.q + ac.cc;
        Interval ia = to_interval(affine(ac.ca, ac.cb, ac.cc, x, y, RangeCheck::Checked, options), depth);
        if (!ia.contains(expected)) {
            ok = false;
            out << "FAIL case " << i << ": affine(" << ac.ca << ", " << ac.cb << ", " << ac.cc << "; " << ac.p
                << ", " << ac.q << ") = " << expected << " not in " << ia << " at depth " << depth
                << "; inputs " << x.digit_string(depth) << " " << y.digit_string(depth) << '\n';
        }
        if (ok) ++passed;
    }
    out << passed << "/" << cases << " passed\n";
    return {passed == cases ? exit_code::kOk : exit_code::kSelftestFailed, out.str(), {}};
}

CommandResult fib_command(std::size_t count) {
    auto s = fib_stream(1, 1);
    std::ostringstream out;
    auto items = take(s, count);
    for (std::size_t i = 0; i < items.size(); ++i) out << (i ? " " : "") << items[i];
    if (!items.empty()) out << ' ';
    out << "| increasing: " << (increasing_to_depth(s, count) ? "true" : "false")
        << " | local_fib: " << (local_fib_to_depth(s, count) ? "true" : "false") << '\n';
    return {exit_code::kOk, out.str(), {}};
}

} // namespace lrcreal
