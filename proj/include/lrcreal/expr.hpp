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

// Expression language for the command line:
//
//   expr     := rational
//             | "avg(" expr "," expr ")"
//             | "add(" expr "," expr ")"
//             | "affine(" rational "," rational "," rational ";" expr "," expr ")"
//   rational := integer | integer "/" integer
//   integer  := ["-"] digit+
//
// Whitespace between tokens is ignored.

#ifndef LRCREAL_EXPR_HPP
#define LRCREAL_EXPR_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "lrcreal/numeric.hpp"
#include "lrcreal/real.hpp"

namespace lrcreal {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct RatLit {
    Rational value;
};

struct Avg {
    ExprPtr lhs, rhs;
};

struct Affine {
    Rational ca, cb, cc;
    ExprPtr lhs, rhs;
    bool checked = true;
};

/// lhs + rhs, evaluated as an unchecked affine(1, 1, 0).
struct Add {
    ExprPtr lhs, rhs;
};

struct Expr {
    std::variant<RatLit, Avg, Affine, Add> node;
};

ExprPtr make_lit(Rational value);
ExprPtr make_avg(ExprPtr lhs, ExprPtr rhs);
ExprPtr make_add(ExprPtr lhs, ExprPtr rhs);
ExprPtr make_affine(Rational ca, Rational cb, Rational cc, ExprPtr lhs, ExprPtr rhs, bool checked = true);

/// Structural equality.
bool operator==(const Expr& x, const Expr& y);

/// Throws ParseError on malformed input and DomainError on a literal outside
/// [0,1] or a zero denominator.
ExprPtr parse_expr(std::string_view input);

/// Text that parse_expr reads back to an equal tree (unchecked `affine`
/// nodes come back checked; only `add` is unchecked in the grammar).
std::string render(const Expr& e);

/// Builds the exact real for `e`. `check_depth` is the depth at which `add`
/// nodes are checked for overflow: DomainError when the operand intervals
/// prove the sum exceeds 1.
ExactReal evaluate(const Expr& e, std::size_t check_depth);

} // namespace lrcreal

#endif
