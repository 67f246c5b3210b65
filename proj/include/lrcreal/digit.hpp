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

// Interval digits. Starting from [0,1], each digit halves the current
// interval [lo, hi]:
//
//   L  left half    [lo, (lo+hi)/2]
//   R  right half   [(lo+hi)/2, hi]
//   C  centre       [lo + (hi-lo)/4, lo + 3(hi-lo)/4]
//
// A stream of digits denotes the unique point in the intersection of the
// nested intervals. Reading digit d in front of a stream denoting r gives
// r/2, (r+1)/2 or (2r+1)/4 respectively.

#ifndef LRCREAL_DIGIT_HPP
#define LRCREAL_DIGIT_HPP

#include <array>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lrcreal/numeric.hpp"
#include "lrcreal/stream.hpp"

namespace lrcreal {

enum class Digit : char { L = 'L', R = 'R', C = 'C' };

inline constexpr std::array<Digit, 3> kAllDigits{Digit::L, Digit::R, Digit::C};

using DigitStream = Stream<Digit>;

inline char to_char(Digit d) { return static_cast<char>(d); }

/// 'L', 'R' or 'C'. Throws std::invalid_argument otherwise.
Digit digit_from_char(char c);

std::string to_string(std::span<const Digit> ds);
std::vector<Digit> parse_digits(std::string_view text);

/// prefix followed by `cycle` repeated forever. Throws std::invalid_argument
/// when `cycle` is empty.
DigitStream periodic_digits(std::vector<Digit> prefix, std::vector<Digit> cycle);

inline std::ostream& operator<<(std::ostream& os, Digit d) { return os << to_char(d); }

/// Closed interval [lo, hi].
struct Interval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / Rational(2); }
    bool contains(const Rational& r) const { return lo <= r && r <= hi; }
    bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }

    /// "[p/q, r/s]"
    std::string to_string() const;

    friend bool operator==(const Interval&, const Interval&) = default;
};

inline const Interval kUnitInterval{Rational(0), Rational(1)};

std::ostream& operator<<(std::ostream& os, const Interval& iv);

Interval refine(const Interval& iv, Digit d);

/// Left fold of `refine` from [0,1]; the leftmost digit refines first.
Interval prefix_interval(std::span<const Digit> ds);

/// Value of `d` followed by a stream denoting r.
Rational emit_value(Digit d, const Rational& r);

/// The binary fraction 0.b1 b2 ... bn.
Rational bits_to_value(const std::vector<bool>& bits);

/// true -> R, false -> L.
inline Digit bit_to_digit(bool b) { return b ? Digit::R : Digit::L; }

/// r lies in the interval of the first n digits of s.
bool represents_to_depth(const DigitStream& s, const Rational& r, std::size_t n);

} // namespace lrcreal

#endif
