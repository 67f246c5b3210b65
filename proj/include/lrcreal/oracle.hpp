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

// Random rational-backed inputs for oracle checks. All generators are
// deterministic functions of their seed.

#ifndef LRCREAL_ORACLE_HPP
#define LRCREAL_ORACLE_HPP

#include <cstdint>
#include <random>

#include "lrcreal/digit.hpp"
#include "lrcreal/numeric.hpp"

namespace lrcreal::oracle {

/// Uniform integer in [0, bound]. Platform-independent, unlike std distributions.
std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t bound);

/// a/b with 1 <= b <= max_den and 0 <= a <= b.
Rational random_unit_rational(std::mt19937_64& rng, std::uint64_t max_den);

/// A digit stream for r that picks, at every position, a random digit among
/// those whose residual stays in [0,1]. Uses all three digits, unlike
/// from_rational. Throws DomainError unless 0 <= r <= 1.
DigitStream redundant_digits(const Rational& r, std::uint64_t seed);

/// Digit value of r after reading d: the r' with emit_value(d, r') == r.
Rational residual(Digit d, const Rational& r);

} // namespace lrcreal::oracle

#endif
