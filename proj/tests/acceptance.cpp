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

// Acceptance suite. One line per criterion:
//
//   [PASS] AC05 engine value laws (2000 states)  (1.234 s, limit 30 s)
//
// Usage: lrcreal_acceptance <path-to-lrcreal-cli>

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lrcreal/affine.hpp"
#include "lrcreal/digit.hpp"
#include "lrcreal/exercises.hpp"
#include "lrcreal/oracle.hpp"
#include "lrcreal/real.hpp"
#include "lrcreal/stream.hpp"
#include "support.hpp"

using namespace lrcreal;
using lrcreal::testing::Q;
using lrcreal::testing::Z;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

int failures = 0;

void criterion(const char* id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && secs > limit_seconds) {
        std::ostringstream why;
        why << "took " << secs << " s";
        out.fail(why.str());
    }
    std::cout << (out.ok ? "[PASS] " : "[FAIL] ") << id << " " << title << "  (" << secs << " s";
    if (limit_seconds > 0) std::cout << ", limit " << limit_seconds << " s";
    std::cout << ")";
    if (!out.detail.empty()) std::cout << " -- " << out.detail;
    std::cout << std::endl;
    if (!out.ok) ++failures;
}

std::string repeat(const std::string& unit, std::size_t n) {
    std::string s;
    while (s.size() < n) s += unit;
    return s.substr(0, n);
}

struct Run {
    int exit_code;
    std::string out;
};

Run run(const std::string& command) {
    Run r{-1, {}};
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    std::array<char, 256> buf{};
    while (fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "lrcreal";

    criterion("AC01", "digit lists LCR, LRL, CLL denote [1/4, 3/8]", 0.001, [] {
        Outcome o;
        const Interval expect{Q("1/4"), Q("3/8")};
        for (const char* s : {"LCR", "LRL", "CLL"}) {
            Interval got = prefix_interval(parse_digits(s));
            if (!(got == expect)) o.fail(std::string(s) + " -> " + got.to_string());
        }
        return o;
    });

    criterion("AC02", "width law on 1000 random digit lists (length <= 64)", 1.0, [] {
        Outcome o;
        std::mt19937_64 rng(2002);
        for (int i = 0; i < 1000 && o.ok; ++i) {
            auto ds = lrcreal::testing::random_digit_list(rng, 64);
            if (prefix_interval(ds).width() != Rational(BigInt(1), pow2(ds.size())))
                o.fail("width mismatch for " + to_string(ds));
        }
        return o;
    });

    criterion("AC03", "rat_to_stream containment, 1000 rationals, every depth <= 64", 10.0, [] {
        Outcome o;
        std::mt19937_64 rng(2003);
        for (int i = 0; i < 1000 && o.ok; ++i) {
            Rational r = oracle::random_unit_rational(rng, 1000000);
            auto ds = take(from_rational(r).digits(), 64);
            for (std::size_t n = 0; n <= 64; ++n) {
                if (!prefix_interval(std::span<const Digit>(ds.data(), n)).contains(r)) {
                    o.fail(r.to_string() + " escapes at depth " + std::to_string(n));
                    break;
                }
            }
        }
        return o;
    });

    criterion("AC04", "known expansions of 1/3, 1/6, 1, 0 (64 digits)", 0, [] {
        Outcome o;
        const std::pair<const char*, std::string> cases[] = {
            {"1/3", repeat("LR", 64)},
            {"1/6", "L" + repeat("LR", 63)},
            {"1", std::string(64, 'R')},
            {"0", std::string(64, 'L')},
        };
        for (const auto& [r, expect] : cases) {
            std::string got = from_rational(Q(r)).digit_string(64);
            if (got != expect) o.fail(std::string(r) + " -> " + got);
        }
        return o;
    });

    criterion("AC05", "engine value laws: prod_R/L/C and all nine consume rows (2000 states)", 30.0, [] {
        Outcome o;
        std::mt19937_64 rng(2005);
        const Rational half = Q("1/2");
        int r_checked = 0, c_checked = 0;
        for (int i = 0; i < 2000 && o.ok; ++i) {
            AffineData x = lrcreal::testing::random_state(rng);
            Rational p = oracle::random_unit_rational(rng, 1000);
            Rational q = oracle::random_unit_rational(rng, 1000);
            Rational v = state_value(x, p, q);
            if (state_value(prod_L(x), p, q) != Rational(2) * v) o.fail("prod_L at " + x.coefficients_string());
            if (x.c_den <= 2 * x.c) {
                ++r_checked;
                if (state_value(prod_R(x), p, q) != Rational(2) * v - Rational(1))
                    o.fail("prod_R at " + x.coefficients_string());
            }
            if (x.c_den <= 4 * x.c) {
                ++c_checked;
                if (state_value(prod_C(x), p, q) != Rational(2) * v - half)
                    o.fail("prod_C at " + x.coefficients_string());
            }
            for (Digit d1 : kAllDigits) {
                for (Digit d2 : kAllDigits) {
                    AffineData y = lrcreal::testing::with_heads(x, d1, d2);
                    if (state_value(consume(y), p, q) != state_value(y, emit_value(d1, p), emit_value(d2, q)))
                        o.fail(std::string("consume ") + to_char(d1) + to_char(d2) + " at " + x.coefficients_string());
                }
            }
        }
        if (o.ok) o.detail = "prod_R checked " + std::to_string(r_checked) + "x, prod_C " + std::to_string(c_checked) + "x";
        return o;
    });

    criterion("AC06", "decision/measure contract (10000 states)", 10.0, [] {
        Outcome o;
        std::mt19937_64 rng(2006);
        int consumes = 0;
        for (int i = 0; i < 10000 && o.ok; ++i) {
            AffineData x = lrcreal::testing::random_state(rng);
            std::size_t mu = measure(x);
            Decision d = decide(x);
            if (d == Decision::Consume) {
                ++consumes;
                if (!(x.a_den < 8 * x.a || x.b_den < 8 * x.b)) o.fail("consume without a' < 8a or b' < 8b at " + x.coefficients_string());
                if (!(measure(consume(x)) < mu)) o.fail("measure did not drop at " + x.coefficients_string());
            }
            if (mu == 0 && d == Decision::Consume) o.fail("measure 0 but consume at " + x.coefficients_string());
        }
        if (o.ok) o.detail = std::to_string(consumes) + " consume decisions";
        return o;
    });

    criterion("AC07", "end-to-end affine soundness, 500 checked combinations at depth 40", 60.0, [] {
        Outcome o;
        std::mt19937_64 rng(2007);
        for (int i = 0; i < 500 && o.ok; ++i) {
            std::uint64_t w[4];
            for (auto& wi : w) wi = oracle::uniform(rng, 1000);
            BigInt total = Z(w[0] + w[1] + w[2] + w[3] + 1);
            Rational ca(Z(w[0]), total), cb(Z(w[1]), total), cc(Z(w[2]), total);
            Rational p = oracle::random_unit_rational(rng, 1000000);
            Rational q = oracle::random_unit_rational(rng, 1000000);
            ExactReal x = from_rational(p);
            ExactReal y(oracle::redundant_digits(q, rng()));
            Rational expect = ca * p + cb * q + cc;
            Interval iv = to_interval(affine(ca, cb, cc, x, y), 40);
            if (iv.width() != Rational(BigInt(1), pow2(40)) || !iv.contains(expect))
                o.fail(expect.to_string() + " not in " + iv.to_string());
        }
        return o;
    });

    criterion("AC08", "1/3 + 1/6: every interval up to depth 40 contains 1/2", 0, [] {
        Outcome o;
        ExactReal sum = affine(1, 1, 0, from_rational(Q("1/3")), from_rational(Q("1/6")), RangeCheck::Unchecked);
        auto ds = take(sum.digits(), 40);
        for (std::size_t n = 0; n <= 40; ++n) {
            if (!prefix_interval(std::span<const Digit>(ds.data(), n)).contains(Q("1/2")))
                o.fail("depth " + std::to_string(n) + " misses 1/2");
        }
        bool all_c = to_string(ds) == std::string(40, 'C');
        o.detail = std::string("digits ") + to_string(ds) + (all_c ? " (all C)" : " (not all C)");
        return o;
    });

    criterion("AC09", "decompose and identity map bisimilar at depth 1000 (100 random each)", 0, [] {
        Outcome o;
        std::mt19937_64 rng(2009);
        for (int i = 0; i < 100 && o.ok; ++i) {
            DigitStream s = lrcreal::testing::random_digits(rng());
            if (!bisimilar_to_depth(decompose(s), s, 1000)) o.fail("decompose(stream)");

            std::vector<int> v(rng() % 1500);
            for (auto& x : v) x = static_cast<int>(rng() % 1000);
            LazyList<int> l = from_list(v);
            if (!bisimilar_to_depth(decompose_lazy(l), l, 1000)) o.fail("decompose_lazy");
            if (!bisimilar_to_depth(map_lazy([](int x) { return x; }, l), l, 1000)) o.fail("map_lazy(id)");
            if (!bisimilar_to_depth(map_stream([](Digit d) { return d; }, s), s, 1000)) o.fail("map_stream(id)");
        }
        return o;
    });

    criterion("AC10", "Fibonacci stream, increasing and local_fib at depth 1000", 1.0, [] {
        Outcome o;
        auto s = fib_stream(1, 1);
        std::vector<BigInt> expect;
        for (long v : {1, 1, 2, 3, 5, 8, 13, 21, 34, 55}) expect.emplace_back(v);
        if (take(s, 10) != expect) o.fail("first ten elements");
        if (!increasing_to_depth(s, 1000)) o.fail("increasing");
        if (!local_fib_to_depth(s, 1000)) o.fail("local_fib");
        return o;
    });

    criterion("AC11a", "normalization does not change the first 200 digits (100 states)", 0, [] {
        Outcome o;
        std::mt19937_64 rng(2011);
        for (int i = 0; i < 100 && o.ok; ++i) {
            AffineData x = lrcreal::testing::random_state(rng);
            auto with = take(produce_stream(x), 200);
            auto without = take(produce_stream(x, lrcreal::testing::unnormalized()), 200);
            if (with != without) o.fail("digits differ at " + x.coefficients_string());
        }
        return o;
    });

    criterion("AC11b", "avg(1/3, 1/6) to depth 1000 with coefficients under 64 bits", 1.0, [] {
        Outcome o;
        std::size_t max_bits = 0;
        EngineOptions opts;
        opts.observer = [&](const AffineData& s) { max_bits = std::max(max_bits, s.max_coefficient_bits()); };
        Rational half = Q("1/2");
        ExactReal avg = affine(half, half, 0, from_rational(Q("1/3")), from_rational(Q("1/6")), RangeCheck::Checked, opts);
        auto ds = take(avg.digits(), 1000);
        if (!prefix_interval(ds).contains(Q("1/4"))) o.fail("1/4 not in the depth-1000 interval");
        if (max_bits >= 64) o.fail("coefficient reached " + std::to_string(max_bits) + " bits");
        o.detail = "max coefficient bits " + std::to_string(max_bits);
        return o;
    });

    criterion("AC12", "CLI: eval, malformed input, out-of-range literal, selftest", 0, [&cli] {
        Outcome o;
        Run a = run(cli + " eval '1/3' --digits 6");
        if (a.exit_code != 0 || a.out != "LRLRLR\n") o.fail("eval 1/3 -> exit " + std::to_string(a.exit_code) + " '" + a.out + "'");
        Run b = run(cli + " eval 'avg(1/3'");
        if (b.exit_code != 1) o.fail("malformed input exit " + std::to_string(b.exit_code));
        Run c = run(cli + " eval '3/2'");
        if (c.exit_code != 2) o.fail("3/2 exit " + std::to_string(c.exit_code));
        Run d = run(cli + " selftest --cases 1000 --depth 40 --seed 42");
        if (d.exit_code != 0 || d.out != "1000/1000 passed\n") o.fail("selftest exit " + std::to_string(d.exit_code) + " '" + d.out + "'");
        return o;
    });

    std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
