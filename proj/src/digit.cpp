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

#include "lrcreal/digit.hpp"

#include <stdexcept>

namespace lrcreal {

Digit digit_from_char(char c) {
    switch (c) {
    case 'L': return Digit::L;
    case 'R': return Digit::R;
    case 'C': return Digit::C;
    default: throw std::invalid_argument(std::string("not a digit: '") + c + "'");
    }
}

std::string to_string(std::span<const Digit> ds) {
    std::string out;
    out.reserve(ds.size());
    for (Digit d : ds) out.push_back(to_char(d));
    return out;
}

std::vector<Digit> parse_digits(std::string_view text) {
    std::vector<Digit> out;
    out.reserve(text.size());
    for (char c : text) out.push_back(digit_from_char(c));
    return out;
}

DigitStream periodic_digits(std::vector<Digit> prefix, std::vector<Digit> cycle) {
    if (cycle.empty()) throw std::invalid_argument("periodic_digits: empty cycle");
    std::size_t head = prefix.size();
    prefix.insert(prefix.end(), cycle.begin(), cycle.end());
    return unfold<std::size_t>(
        [digits = std::move(prefix), head](std::size_t i) {
            std::size_t next = i + 1 == digits.size() ? head : i + 1;
            return std::make_pair(digits[i], next);
        },
        0);
}

std::string Interval::to_string() const { return "[" + lo.to_string() + ", " + hi.to_string() + "]"; }

std::ostream& operator<<(std::ostream& os, const Interval& iv) { return os << iv.to_string(); }

Interval refine(const Interval& iv, Digit d) {
    switch (d) {
    case Digit::L: return {iv.lo, iv.midpoint()};
    case Digit::R: return {iv.midpoint(), iv.hi};
    case Digit::C: {
        Rational quarter = iv.width() / Rational(4);
        return {iv.lo + quarter, iv.lo + quarter * Rational(3)};
    }
    }
    throw std::logic_error("bad digit");
}

Interval prefix_interval(std::span<const Digit> ds) {
    // Work over integers: after n digits both bounds are multiples of
    // 2^-(n+1), so track lo and hi as numerators over 2^(n+1).
    BigInt lo = 0;
    BigInt hi = 2;
    for (Digit d : ds) {
        lo *= 2;
        hi *= 2;
        BigInt w = hi - lo;
        switch (d) {
        case Digit::L: hi = lo + w / 2; break;
        case Digit::R: lo = lo + w / 2; break;
        case Digit::C:
            lo = lo + w / 4;
            hi = lo + w / 2;
            break;
        }
    }
    BigInt den = pow2(ds.size() + 1);
    return {Rational(lo, den), Rational(hi, den)};
}

Rational emit_value(Digit d, const Rational& r) {
    switch (d) {
    case Digit::L: return r / Rational(2);
    case Digit::R: return (r + Rational(1)) / Rational(2);
    case Digit::C: return (Rational(2) * r + Rational(1)) / Rational(4);
    }
    throw std::logic_error("bad digit");
}

Rational bits_to_value(const std::vector<bool>& bits) {
    Rational x;
    for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
        x = *it ? (Rational(1) + x) / Rational(2) : x / Rational(2);
    }
    return x;
}

bool represents_to_depth(const DigitStream& s, const Rational& r, std::size_t n) {
    auto ds = take(s, n);
    return prefix_interval(ds).contains(r);
}

} // namespace lrcreal
