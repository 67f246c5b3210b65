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

#include "lrcreal/expr.hpp"

#include <cctype>

#include "lrcreal/errors.hpp"

namespace lrcreal {

ExprPtr make_lit(Rational value) { return std::make_shared<const Expr>(Expr{RatLit{std::move(value)}}); }

ExprPtr make_avg(ExprPtr lhs, ExprPtr rhs) {
    return std::make_shared<const Expr>(Expr{Avg{std::move(lhs), std::move(rhs)}});
}

ExprPtr make_add(ExprPtr lhs, ExprPtr rhs) {
    return std::make_shared<const Expr>(Expr{Add{std::move(lhs), std::move(rhs)}});
}

ExprPtr make_affine(Rational ca, Rational cb, Rational cc, ExprPtr lhs, ExprPtr rhs, bool checked) {
    return std::make_shared<const Expr>(
        Expr{Affine{std::move(ca), std::move(cb), std::move(cc), std::move(lhs), std::move(rhs), checked}});
}

namespace {

bool same(const ExprPtr& x, const ExprPtr& y) { return x == y || (x && y && *x == *y); }

} // namespace

bool operator==(const Expr& x, const Expr& y) {
    if (x.node.index() != y.node.index()) return false;
    if (auto* l = std::get_if<RatLit>(&x.node)) return l->value == std::get<RatLit>(y.node).value;
    if (auto* a = std::get_if<Avg>(&x.node)) {
        const auto& b = std::get<Avg>(y.node);
        return same(a->lhs, b.lhs) && same(a->rhs, b.rhs);
    }
    if (auto* a = std::get_if<Add>(&x.node)) {
        const auto& b = std::get<Add>(y.node);
        return same(a->lhs, b.lhs) && same(a->rhs, b.rhs);
    }
    const auto& a = std::get<Affine>(x.node);
    const auto& b = std::get<Affine>(y.node);
    return a.ca == b.ca && a.cb == b.cb && a.cc == b.cc && a.checked == b.checked && same(a.lhs, b.lhs) &&
           same(a.rhs, b.rhs);
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        skip_space();
        if (pos_ != text_.size()) fail("end of input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& expected) const { throw ParseError(pos_ + 1, expected); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek_digit() const {
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("'") + c + "'");
        ++pos_;
    }

    BigInt integer(const char* what) {
        skip_space();
        std::size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
        if (!peek_digit()) {
            pos_ = start;
            fail(what);
        }
        while (peek_digit()) ++pos_;
        return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
    }

    Rational rational() {
        BigInt n = integer("integer");
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            BigInt d = integer("integer");
            return Rational(std::move(n), std::move(d));
        }
        return Rational(std::move(n));
    }

    ExprPtr expr() {
        skip_space();
        static constexpr const char* kExprStart = "integer, 'avg(', 'add(' or 'affine('";
        if (pos_ < text_.size() && (text_[pos_] == '-' || peek_digit())) {
            std::size_t at = pos_ + 1;
            Rational r = rational();
            if (r.sign() < 0 || r > Rational(1))
                throw DomainError("literal " + r.to_string() + " at position " + std::to_string(at) +
                                  " is outside [0,1]");
            return make_lit(std::move(r));
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string_view word = text_.substr(start, pos_ - start);
        if (word != "avg" && word != "add" && word != "affine") {
            pos_ = start;
            fail(kExprStart);
        }
        expect('(');
        if (word == "affine") {
            Rational ca = rational();
            expect(',');
            Rational cb = rational();
            expect(',');
            Rational cc = rational();
            expect(';');
            ExprPtr lhs = expr();
            expect(',');
            ExprPtr rhs = expr();
            expect(')');
            return make_affine(std::move(ca), std::move(cb), std::move(cc), std::move(lhs), std::move(rhs));
        }
        ExprPtr lhs = expr();
        expect(',');
        ExprPtr rhs = expr();
        expect(')');
        return word == "avg" ? make_avg(std::move(lhs), std::move(rhs)) : make_add(std::move(lhs), std::move(rhs));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

ExprPtr parse_expr(std::string_view input) { return Parser(input).parse(); }

std::string render(const Expr& e) {
    return std::visit(
        [](const auto& n) -> std::string {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, RatLit>) {
                return n.value.to_string();
            } else if constexpr (std::is_same_v<N, Avg>) {
                return "avg(" + render(*n.lhs) + ", " + render(*n.rhs) + ")";
            } else if constexpr (std::is_same_v<N, Add>) {
                return "add(" + render(*n.lhs) + ", " + render(*n.rhs) + ")";
            } else {
                return "affine(" + n.ca.to_string() + ", " + n.cb.to_string() + ", " + n.cc.to_string() + "; " +
                       render(*n.lhs) + ", " + render(*n.rhs) + ")";
            }
        },
        e.node);
}

ExactReal evaluate(const Expr& e, std::size_t check_depth) {
    return std::visit(
        [check_depth](const auto& n) -> ExactReal {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, RatLit>) {
                return from_rational(n.value);
            } else if constexpr (std::is_same_v<N, Avg>) {
                return average(evaluate(*n.lhs, check_depth), evaluate(*n.rhs, check_depth));
            } else if constexpr (std::is_same_v<N, Add>) {
                ExactReal x = evaluate(*n.lhs, check_depth);
                ExactReal y = evaluate(*n.rhs, check_depth);
                Rational low = to_interval(x, check_depth).lo + to_interval(y, check_depth).lo;
                if (low > Rational(1))
                    throw DomainError("add(" + render(*n.lhs) + ", " + render(*n.rhs) + ") exceeds 1: operands sum to at least " +
                                      low.to_string());
                return affine(Rational(1), Rational(1), Rational(0), x, y, RangeCheck::Unchecked);
            } else {
                return affine(n.ca, n.cb, n.cc, evaluate(*n.lhs, check_depth), evaluate(*n.rhs, check_depth),
                              n.checked ? RangeCheck::Checked : RangeCheck::Unchecked);
            }
        },
        e.node);
}

} // namespace lrcreal
