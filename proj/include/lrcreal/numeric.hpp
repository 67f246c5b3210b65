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

#ifndef LRCREAL_NUMERIC_HPP
#define LRCREAL_NUMERIC_HPP

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lrcreal {

using BigInt = mpz_class;

/// Greatest common divisor of |x| and |y|; gcd(0, 0) == 0.
BigInt gcd(const BigInt& x, const BigInt& y);

/// Number of bits in |x|; 0 for x == 0.
std::size_t bit_length(const BigInt& x);

/// 2^n.
BigInt pow2(std::size_t n);

/// Exact fraction, always kept in lowest terms with a positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long n) : num_(n), den_(1) {} // NOLINT: implicit by design of literals
    explicit Rational(BigInt n) : num_(std::move(n)), den_(1) {}

    /// Throws DomainError when `d` is zero.
    Rational(BigInt n, BigInt d);

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_integer() const { return den_ == 1; }
    int sign() const { return sgn(num_); }

    Rational operator-() const;

    friend Rational operator+(const Rational& x, const Rational& y);
    friend Rational operator-(const Rational& x, const Rational& y);
    friend Rational operator*(const Rational& x, const Rational& y);
    /// Throws DomainError on division by zero.
    friend Rational operator/(const Rational& x, const Rational& y);

    Rational& operator+=(const Rational& y) { return *this = *this + y; }
    Rational& operator-=(const Rational& y) { return *this = *this - y; }
    Rational& operator*=(const Rational& y) { return *this = *this * y; }
    Rational& operator/=(const Rational& y) { return *this = *this / y; }

    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

    /// "p/q", or "p" when q == 1.
    std::string to_string() const;

private:
    struct Reduced {};
    Rational(BigInt n, BigInt d, Reduced) : num_(std::move(n)), den_(std::move(d)) {}

    BigInt num_;
    BigInt den_;
};

/// Canonical n/d. Throws DomainError when d == 0.
Rational make_rational(const BigInt& n, const BigInt& d);

/// Parses "p" or "p/q" with an optional leading '-'. Throws DomainError on a
/// zero denominator and std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);

/// floor(x).
BigInt floor(const Rational& x);

std::ostream& operator<<(std::ostream& os, const Rational& x);

} // namespace lrcreal

#endif
