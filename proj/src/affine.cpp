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

#include "lrcreal/affine.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "lrcreal/errors.hpp"

namespace lrcreal {

namespace {

void require_positive(const AffineData& x, const char* where) {
    if (!x.positive_coefficients())
        throw DomainError(std::string(where) + ": coefficients violate sign conditions " +
                          x.coefficients_string());
}

// a*b'*c' + b*a'*c' + a'*b'*c, the upper end of the value range scaled by a'b'c'.
BigInt scaled_upper(const AffineData& x) {
    return x.a * x.b_den * x.c_den + x.b * x.a_den * x.c_den + x.a_den * x.b_den * x.c;
}

std::size_t halvings_to_eighth(const BigInt& p, const BigInt& q) {
    BigInt target = 8 * p;
    if (q >= target) return 0;
    // 2^n q >= 8p; start just below the answer and step up.
    std::size_t n = bit_length(target) - bit_length(q);
    n = n > 0 ? n - 1 : 0;
    BigInt scaled = q << static_cast<mp_bitcnt_t>(n);
    while (scaled < target) {
        scaled <<= 1;
        ++n;
    }
    return n;
}

void reduce_pair(BigInt& p, BigInt& q) {
    BigInt g = gcd(p, q);
    if (g > 1) {
        mpz_divexact(p.get_mpz_t(), p.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), g.get_mpz_t());
    }
}

} // namespace

bool AffineData::positive_coefficients() const {
    return a >= 0 && a_den > 0 && b >= 0 && b_den > 0 && c >= 0 && c_den > 0;
}

std::string AffineData::coefficients_string() const {
    return "(" + a.get_str() + "," + a_den.get_str() + "," + b.get_str() + "," + b_den.get_str() + "," +
           c.get_str() + "," + c_den.get_str() + ")";
}

std::size_t AffineData::max_coefficient_bits() const {
    return std::max({bit_length(a), bit_length(a_den), bit_length(b), bit_length(b_den), bit_length(c),
                     bit_length(c_den)});
}

bool AffineData::same_coefficients(const AffineData& o) const {
    return a == o.a && a_den == o.a_den && b == o.b && b_den == o.b_den && c == o.c && c_den == o.c_den;
}

const char* to_string(Decision d) {
    switch (d) {
    case Decision::CaseR: return "CaseR";
    case Decision::CaseL: return "CaseL";
    case Decision::CaseC: return "CaseC";
    case Decision::Consume: return "Consume";
    }
    return "?";
}

Rational state_value(const AffineData& x, const Rational& p, const Rational& q) {
    return Rational(x.a, x.a_den) * p + Rational(x.b, x.b_den) * q + Rational(x.c, x.c_den);
}

Decision decide(const AffineData& x) {
    require_positive(x, "decide");
    if (x.c_den <= 2 * x.c) return Decision::CaseR;
    BigInt upper = scaled_upper(x);
    BigInt whole = x.a_den * x.b_den * x.c_den;
    if (2 * upper <= whole) return Decision::CaseL;
    if (4 * upper <= 3 * whole && x.c_den <= 4 * x.c) return Decision::CaseC;
    return Decision::Consume;
}

AffineData prod_R(const AffineData& x) {
    require_positive(x, "prod_R");
    if (!(x.c_den <= 2 * x.c)) throw DomainError("prod_R: requires c' <= 2c, got " + x.coefficients_string());
    return {2 * x.a, x.a_den, 2 * x.b, x.b_den, 2 * x.c - x.c_den, x.c_den, x.v1, x.v2};
}

AffineData prod_L(const AffineData& x) {
    require_positive(x, "prod_L");
    return {2 * x.a, x.a_den, 2 * x.b, x.b_den, 2 * x.c, x.c_den, x.v1, x.v2};
}

AffineData prod_C(const AffineData& x) {
    require_positive(x, "prod_C");
    if (!(x.c_den <= 4 * x.c)) throw DomainError("prod_C: requires c' <= 4c, got " + x.coefficients_string());
    return {2 * x.a, x.a_den, 2 * x.b, x.b_den, 4 * x.c - x.c_den, 2 * x.c_den, x.v1, x.v2};
}

std::pair<BigInt, BigInt> consume_constant(Digit d1, Digit d2, const AffineData& x) {
    const BigInt& a = x.a;
    const BigInt& ap = x.a_den;
    const BigInt& b = x.b;
    const BigInt& bp = x.b_den;
    const BigInt& c = x.c;
    const BigInt& cp = x.c_den;
    using enum Digit;
    if (d1 == L && d2 == L) return {c, cp};
    if (d1 == L && d2 == R) return {b * cp + 2 * c * bp, 2 * bp * cp};
    if (d1 == R && d2 == L) return {a * cp + 2 * c * ap, 2 * ap * cp};
    if (d1 == L && d2 == C) return {b * cp + 4 * c * bp, 4 * bp * cp};
    if (d1 == C && d2 == L) return {a * cp + 4 * c * ap, 4 * ap * cp};
    if (d1 == R && d2 == C) return {2 * a * bp * cp + b * ap * cp + 4 * c * ap * bp, 4 * ap * bp * cp};
    if (d1 == C && d2 == R) return {2 * b * ap * cp + a * bp * cp + 4 * c * bp * ap, 4 * bp * ap * cp};
    if (d1 == R && d2 == R) return {a * bp * cp + b * ap * cp + 2 * c * ap * bp, 2 * ap * bp * cp};
    return {b * ap * cp + a * bp * cp + 4 * c * bp * ap, 4 * bp * ap * cp}; // C, C
}

AffineData consume(const AffineData& x) { return consume(x, consume_constant); }

AffineData consume(const AffineData& x, const ConsumeRule& rule) {
    require_positive(x, "consume");
    const auto& n1 = x.v1.node();
    const auto& n2 = x.v2.node();
    auto [c1, c1_den] = rule ? rule(n1.head, n2.head, x) : consume_constant(n1.head, n2.head, x);
    return {x.a, 2 * x.a_den, x.b, 2 * x.b_den, std::move(c1), std::move(c1_den), n1.tail, n2.tail};
}

std::size_t measure(const AffineData& x) {
    require_positive(x, "measure");
    return halvings_to_eighth(x.a, x.a_den) + halvings_to_eighth(x.b, x.b_den);
}

AffineData normalize(const AffineData& x) {
    require_positive(x, "normalize");
    AffineData y = x;
    reduce_pair(y.a, y.a_den);
    reduce_pair(y.b, y.b_den);
    reduce_pair(y.c, y.c_den);
    return y;
}

Production next_production(const AffineData& x, const EngineOptions& options) {
    AffineData state = options.normalize ? normalize(x) : x;
    std::size_t consumed = 0;
    for (;;) {
        if (options.observer) options.observer(state);
        switch (decide(state)) {
        case Decision::CaseR: return {Digit::R, prod_R(state), consumed};
        case Decision::CaseL: return {Digit::L, prod_L(state), consumed};
        case Decision::CaseC: return {Digit::C, prod_C(state), consumed};
        case Decision::Consume:
            state = consume(state, options.consume_rule);
            if (options.normalize) state = normalize(state);
            ++consumed;
            break;
        }
    }
}

namespace {

DigitStream produce_from(AffineData x, std::shared_ptr<const EngineOptions> options) {
    return DigitStream::lazy([x = std::move(x), options = std::move(options)]() {
        Production p = next_production(x, *options);
        AffineData next = options->normalize ? normalize(p.next) : std::move(p.next);
        return StreamNode<Digit>{p.digit, produce_from(std::move(next), options)};
    });
}

} // namespace

DigitStream produce_stream(AffineData x, EngineOptions options) {
    require_positive(x, "produce_stream");
    return produce_from(std::move(x), std::make_shared<const EngineOptions>(std::move(options)));
}

} // namespace lrcreal
