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

#include "lrcreal/oracle.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "lrcreal/errors.hpp"

namespace lrcreal::oracle {

std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == UINT64_MAX) return rng();
    return rng() % (bound + 1);
}

Rational random_unit_rational(std::mt19937_64& rng, std::uint64_t max_den) {
    std::uint64_t den = 1 + uniform(rng, max_den - 1);
    std::uint64_t num = uniform(rng, den);
    return Rational(BigInt(static_cast<unsigned long>(num)), BigInt(static_cast<unsigned long>(den)));
}

Rational residual(Digit d, const Rational& r) {
    switch (d) {
    case Digit::L: return Rational(2) * r;
    case Digit::R: return Rational(2) * r - Rational(1);
    case Digit::C: return Rational(2) * r - Rational(BigInt(1), BigInt(2));
    }
    throw std::logic_error("bad digit");
}

DigitStream redundant_digits(const Rational& r, std::uint64_t seed) {
    if (r.sign() < 0 || r > Rational(1)) throw DomainError("rational " + r.to_string() + " is outside [0,1]");
    struct State {
        Rational value;
        std::uint64_t seed;
    };
    return unfold<State>(
        [](const State& st) {
            std::vector<Digit> ok;
            for (Digit d : kAllDigits) {
                Rational rest = residual(d, st.value);
                if (rest.sign() >= 0 && rest <= Rational(1)) ok.push_back(d);
            }
            std::mt19937_64 rng(st.seed);
            Digit pick = ok[uniform(rng, ok.size() - 1)];
            return std::make_pair(pick, State{residual(pick, st.value), rng()});
        },
        State{r, seed});
}

} // namespace lrcreal::oracle
