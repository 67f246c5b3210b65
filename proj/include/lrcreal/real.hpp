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

#ifndef LRCREAL_REAL_HPP
#define LRCREAL_REAL_HPP

#include <cstddef>
#include <string>
#include <utility>

#include "lrcreal/affine.hpp"
#include "lrcreal/digit.hpp"
#include "lrcreal/numeric.hpp"

namespace lrcreal {

/// An exact real number in [0,1], held as its digit stream.
class ExactReal {
public:
    /// Wraps an arbitrary digit stream. Any stream denotes a value in [0,1].
    explicit ExactReal(DigitStream digits) : digits_(std::move(digits)) {}

    const DigitStream& digits() const noexcept { return digits_; }

    std::string digit_string(std::size_t n) const { return to_string(take(digits_, n)); }

private:
    DigitStream digits_;
};

/// Binary expansion of r as L/R digits. Throws DomainError unless 0 <= r <= 1.
ExactReal from_rational(const Rational& r);

/// Interval of the first n digits; width exactly 2^-n.
Interval to_interval(const ExactReal& x, std::size_t n);

/// Decimal approximation with k places, within 10^-k of the true value.
/// Throws DomainError when k == 0.
std::string to_decimal(const ExactReal& x, std::size_t k);

/// (x + y) / 2.
ExactReal average(const ExactReal& x, const ExactReal& y);

enum class RangeCheck { Checked, Unchecked };

/// ca*x + cb*y + cc. All coefficients must be nonnegative. In checked mode
/// ca + cb + cc <= 1 is required, which keeps the result in [0,1] for every
/// input; unchecked, the caller promises the true value lies in [0,1].
ExactReal affine(const Rational& ca, const Rational& cb, const Rational& cc, const ExactReal& x,
                 const ExactReal& y, RangeCheck check = RangeCheck::Checked,
                 const EngineOptions& options = {});

/// Engine state for ca*x + cb*y + cc (no range check).
AffineData pack_affine(const Rational& ca, const Rational& cb, const Rational& cc, const ExactReal& x,
                       const ExactReal& y);

struct Comparison {
    enum class Kind { Less, Greater, Indistinguishable };

    Kind kind;
    /// Depth at which the intervals separated, or the full search depth.
    std::size_t depth;

    /// 2^-depth when kind == Indistinguishable.
    Rational tolerance() const { return Rational(BigInt(1), pow2(depth)); }

    std::string to_string() const;
};

/// Refines x and y together up to depth n. Less/Greater at the first depth
/// where their intervals are disjoint; never reports equality.
Comparison compare(const ExactReal& x, const ExactReal& y, std::size_t n);

} // namespace lrcreal

#endif
