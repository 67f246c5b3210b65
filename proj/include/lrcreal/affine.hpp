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

// Digit-stream engine for  V = (a/a')*v1 + (b/b')*v2 + c/c'.
//
// With v1, v2 in [0,1], V ranges over [c/c', a/a' + b/b' + c/c']. Each step
// either
//
//   produces  a digit when that range fits in one of the three half
//             intervals, rescaling the state so it denotes the residual
//             (R: 2V-1, L: 2V, C: 2V-1/2), or
//   consumes  one digit from each input, halving a/a' and b/b' and folding
//             the digits' offsets into c/c'.
//
// Consumption cannot go on forever: see `measure`.

#ifndef LRCREAL_AFFINE_HPP
#define LRCREAL_AFFINE_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <utility>

#include "lrcreal/digit.hpp"
#include "lrcreal/numeric.hpp"

namespace lrcreal {

/// Engine state. The primed coefficients are the `_den` fields.
struct AffineData {
    BigInt a, a_den;
    BigInt b, b_den;
    BigInt c, c_den;
    DigitStream v1, v2;

    /// a, b, c >= 0 and a', b', c' > 0.
    bool positive_coefficients() const;

    /// "(a,a',b,b',c,c')"
    std::string coefficients_string() const;

    /// Largest bit length among the six coefficients.
    std::size_t max_coefficient_bits() const;

    bool same_coefficients(const AffineData& other) const;
};

enum class Decision { CaseR, CaseL, CaseC, Consume };

const char* to_string(Decision d);

/// (a/a')p + (b/b')q + c/c', with p and q standing for the values of v1, v2.
Rational state_value(const AffineData& x, const Rational& p, const Rational& q);

/// The production tests in priority order R, L, C; Consume when none holds.
/// Throws DomainError unless x.positive_coefficients().
Decision decide(const AffineData& x);

/// Throws DomainError unless c' <= 2c.
AffineData prod_R(const AffineData& x);
AffineData prod_L(const AffineData& x);
/// Throws DomainError unless c' <= 4c.
AffineData prod_C(const AffineData& x);

/// New (c, c') after reading d1 from v1 and d2 from v2.
using ConsumeRule = std::function<std::pair<BigInt, BigInt>(Digit d1, Digit d2, const AffineData& x)>;

/// The nine-row table; the default rule for `consume`.
std::pair<BigInt, BigInt> consume_constant(Digit d1, Digit d2, const AffineData& x);

/// Reads the heads of v1 and v2; a' and b' double, (c, c') per the table.
AffineData consume(const AffineData& x);
AffineData consume(const AffineData& x, const ConsumeRule& rule);

/// mu(x) = f(a, a') + f(b, b'), f(p, q) = min{n >= 0 : 2^n q >= 8p}.
///
/// Consume implies a' < 8a or b' < 8b, so mu > 0; consume doubles a' and b',
/// so mu drops by at least one; and mu == 0 means a/a', b/b' <= 1/8, where
/// one of the three production tests always holds. Hence at most mu(x)
/// consecutive consumes happen from x.
std::size_t measure(const AffineData& x);

/// Divides each coefficient pair by its gcd. Value and decision unchanged.
AffineData normalize(const AffineData& x);

struct EngineOptions {
    bool normalize = true;
    /// Replaces the consume table; used for fault-injection checks only.
    ConsumeRule consume_rule;
    /// Called with every state the engine passes through.
    std::function<void(const AffineData&)> observer;
};

struct Production {
    Digit digit;
    AffineData next;        // state after emitting `digit`
    std::size_t consumed;   // consume steps taken before the production
};

/// Runs decide/consume until a production case holds, then applies it.
Production next_production(const AffineData& x, const EngineOptions& options = {});

/// The output digit stream. Throws DomainError unless x.positive_coefficients().
DigitStream produce_stream(AffineData x, EngineOptions options = {});

} // namespace lrcreal

#endif
