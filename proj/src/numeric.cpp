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

#include "lrcreal/numeric.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "lrcreal/errors.hpp"

namespace lrcreal {

BigInt gcd(const BigInt& x, const BigInt& y) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return g;
}

std::size_t bit_length(const BigInt& x) {
    if (x == 0) return 0;
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

BigInt pow2(std::size_t n) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, n);
    return r;
}

Rational::Rational(BigInt n, BigInt d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    BigInt g = gcd(n, d);
    if (g > 1) {
        mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), g.get_mpz_t());
    }
    num_ = std::move(n);
    den_ = std::move(d);
}

Rational make_rational(const BigInt& n, const BigInt& d) { return Rational(n, d); }

Rational Rational::operator-() const { return Rational(BigInt(-num_), den_, Reduced{}); }

Rational operator+(const Rational& x, const Rational& y) {
    if (x.den_ == y.den_) return Rational(BigInt(x.num_ + y.num_), x.den_);
    return Rational(BigInt(x.num_ * y.den_ + y.num_ * x.den_), BigInt(x.den_ * y.den_));
}

Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }

Rational operator*(const Rational& x, const Rational& y) {
    // Cross-reduce first so the product is already in lowest terms.
    BigInt g1 = gcd(x.num_, y.den_);
    BigInt g2 = gcd(y.num_, x.den_);
    if (g1 == 0 || g2 == 0) return Rational();
    BigInt n = (x.num_ / g1) * (y.num_ / g2);
    BigInt d = (x.den_ / g2) * (y.den_ / g1);
    return Rational(std::move(n), std::move(d), Rational::Reduced{});
}

Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw DomainError("rational division by zero");
    Rational inv = y.num_ < 0 ? Rational(BigInt(-y.den_), BigInt(-y.num_), Rational::Reduced{})
                              : Rational(y.den_, y.num_, Rational::Reduced{});
    return x * inv;
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    int c = cmp(BigInt(x.num_ * y.den_), BigInt(y.num_ * x.den_));
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    if (den_ == 1) return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    for (std::size_t k = i; k < text.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(text[k])))
            throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
    BigInt v(std::string(text.substr(i)), 10);
    return negative ? BigInt(-v) : v;
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    return Rational(parse_integer(text.substr(0, slash), text),
                    parse_integer(text.substr(slash + 1), text));
}

BigInt floor(const Rational& x) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
    return q;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

} // namespace lrcreal
