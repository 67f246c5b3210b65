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

// Shared generators for the test suites.

#ifndef LRCREAL_TESTS_SUPPORT_HPP
#define LRCREAL_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lrcreal/affine.hpp"
#include "lrcreal/digit.hpp"
#include "lrcreal/numeric.hpp"
#include "lrcreal/oracle.hpp"

namespace lrcreal::testing {

inline Rational Q(const std::string& text) { return parse_rational(text); }

inline BigInt Z(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

inline std::uint64_t pick(std::mt19937_64& rng, std::uint64_t bound) { return oracle::uniform(rng, bound); }

/// Arbitrary (not value-backed) digit stream.
inline DigitStream random_digits(std::uint64_t seed) {
    return unfold<std::uint64_t>(
        [](std::uint64_t st) {
            std::mt19937_64 rng(st);
            Digit d = kAllDigits[rng() % 3];
            return std::make_pair(d, rng());
        },
        seed);
}

inline std::vector<Digit> random_digit_list(std::mt19937_64& rng, std::size_t max_len) {
    std::vector<Digit> ds(pick(rng, max_len));
    for (auto& d : ds) d = kAllDigits[pick(rng, 2)];
    return ds;
}

/// Random state with positive coefficients; coefficient magnitudes up to `bound`.
inline AffineData random_state(std::mt19937_64& rng, std::uint64_t bound = 64) {
    return {Z(pick(rng, bound)),     Z(1 + pick(rng, bound - 1)), Z(pick(rng, bound)),
            Z(1 + pick(rng, bound - 1)), Z(pick(rng, bound)),     Z(1 + pick(rng, bound - 1)),
            random_digits(rng()),    random_digits(rng())};
}

/// Same coefficients with streams forced to start with d1 and d2.
inline AffineData with_heads(AffineData x, Digit d1, Digit d2) {
    x.v1 = cons(d1, x.v1);
    x.v2 = cons(d2, x.v2);
    return x;
}

inline EngineOptions unnormalized() {
    EngineOptions opts;
    opts.normalize = false;
    return opts;
}

} // namespace lrcreal::testing

#endif
