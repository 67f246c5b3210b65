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

// Small stream exercises: the Fibonacci stream and two depth-bounded
// predicates over natural-number streams.

#ifndef LRCREAL_EXERCISES_HPP
#define LRCREAL_EXERCISES_HPP

#include <cstddef>
#include <utility>

#include "lrcreal/numeric.hpp"
#include "lrcreal/stream.hpp"

namespace lrcreal {

/// a, b, a+b, a+2b, ...
inline Stream<BigInt> fib_stream(BigInt a, BigInt b) {
    return unfold<std::pair<BigInt, BigInt>>(
        [](const std::pair<BigInt, BigInt>& st) {
            return std::make_pair(st.first, std::make_pair(st.second, BigInt(st.first + st.second)));
        },
        std::make_pair(std::move(a), std::move(b)));
}

/// Checks s[i] <= s[i+1] for i < n (n pairs, n+1 elements).
template <class T>
bool increasing_to_depth(Stream<T> s, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        Stream<T> next = s.tail();
        if (next.head() < s.head()) return false;
        s = std::move(next);
    }
    return true;
}

/// Checks s[i] + s[i+1] == s[i+2] for i < n (n triples).
template <class T>
bool local_fib_to_depth(Stream<T> s, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        Stream<T> s1 = s.tail();
        Stream<T> s2 = s1.tail();
        if (!(s.head() + s1.head() == s2.head())) return false;
        s = std::move(s1);
    }
    return true;
}

} // namespace lrcreal

#endif
