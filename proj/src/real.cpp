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

#include "lrcreal/real.hpp"

#include "lrcreal/errors.hpp"

namespace lrcreal {

namespace {

// Loop state (a, b) with invariant 0 <= a <= b.
DigitStream rat_to_stream(BigInt a, BigInt b) {
    return unfold<std::pair<BigInt, BigInt>>(
        [](const std::pair<BigInt, BigInt>& st) {
            const auto& [num, den] = st;
            BigInt twice = 2 * num;
            if (twice <= den) return std::make_pair(Digit::L, std::make_pair(twice, den));
            return std::make_pair(Digit::R, std::make_pair(BigInt(twice - den), den));
        },
        std::make_pair(std::move(a), std::move(b)));
}

std::size_t bits_for_decimals(std::size_t k) {
    // Smallest n with 2^n >= 10^k, i.e. ceil(k log2 10).
    BigInt ten_k;
    mpz_ui_pow_ui(ten_k.get_mpz_t(), 10, k);
    std::size_t n = bit_length(ten_k) - 1;
    if (pow2(n) < ten_k) ++n;
    return n;
}

} // namespace

ExactReal from_rational(const Rational& r) {
    if (r.sign() < 0 || r > Rational(1))
        throw DomainError("rational " + r.to_string() + " is outside [0,1]");
    return ExactReal(rat_to_stream(r.num(), r.den()));
}

Interval to_interval(const ExactReal& x, std::size_t n) { return prefix_interval(take(x.digits(), n)); }

std::string to_decimal(const ExactReal& x, std::size_t k) {
    if (k == 0) throw DomainError("to_decimal needs at least one decimal place");
    std::size_t n = bits_for_decimals(k) + 2;
    Rational mid = to_interval(x, n).midpoint();
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, k);
    // Round half up.
    BigInt scaled = floor(mid * Rational(scale) + Rational(BigInt(1), BigInt(2)));
    BigInt whole = scaled / scale;
    std::string frac = BigInt(scaled - whole * scale).get_str();
    return whole.get_str() + "." + std::string(k - frac.size(), '0') + frac;
}

AffineData pack_affine(const Rational& ca, const Rational& cb, const Rational& cc, const ExactReal& x,
                       const ExactReal& y) {
    if (ca.sign() < 0 || cb.sign() < 0 || cc.sign() < 0)
        throw DomainError("affine coefficients must be nonnegative: " + ca.to_string() + ", " +
                          cb.to_string() + ", " + cc.to_string());
    return {ca.num(), ca.den(), cb.num(), cb.den(), cc.num(), cc.den(), x.digits(), y.digits()};
}

ExactReal affine(const Rational& ca, const Rational& cb, const Rational& cc, const ExactReal& x,
                 const ExactReal& y, RangeCheck check, const EngineOptions& options) {
    AffineData state = pack_affine(ca, cb, cc, x, y);
    if (check == RangeCheck::Checked && ca + cb + cc > Rational(1))
        throw DomainError("checked affine combination needs coefficient sum <= 1, got " +
                          (ca + cb + cc).to_string());
    return ExactReal(produce_stream(std::move(state), options));
}

ExactReal average(const ExactReal& x, const ExactReal& y) {
    Rational half(BigInt(1), BigInt(2));
    return affine(half, half, Rational(0), x, y, RangeCheck::Checked);
}

std::string Comparison::to_string() const {
    switch (kind) {
    case Kind::Less: return "Less";
    case Kind::Greater: return "Greater";
    case Kind::Indistinguishable: return "IndistinguishableAt(2^-" + std::to_string(depth) + ")";
    }
    return "?";
}

Comparison compare(const ExactReal& x, const ExactReal& y, std::size_t n) {
    Interval ix = kUnitInterval;
    Interval iy = kUnitInterval;
    DigitStream sx = x.digits();
    DigitStream sy = y.digits();
    for (std::size_t d = 1; d <= n; ++d) {
        ix = refine(ix, sx.head());
        iy = refine(iy, sy.head());
        if (ix.hi < iy.lo) return {Comparison::Kind::Less, d};
        if (iy.hi < ix.lo) return {Comparison::Kind::Greater, d};
        if (d < n) {
            sx = sx.tail();
            sy = sy.tail();
        }
    }
    return {Comparison::Kind::Indistinguishable, n};
}

} // namespace lrcreal
