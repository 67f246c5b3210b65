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

// Lazy, memoized, immutable sequences:
//
//   Stream<T>    infinite; every force yields a head and a tail.
//   LazyList<T>  possibly finite; a force yields Nil or (head, tail).
//   LazyTree<T>  possibly infinite binary tree; Leaf or (label, left, right).
//
// Each handle points at a shared cell holding a deferred computation. The
// first force runs it (once, under std::call_once) and caches the result;
// later forces return the cached node. Handles are cheap to copy and safe to
// force concurrently. Computations passed in must be pure.

#ifndef LRCREAL_STREAM_HPP
#define LRCREAL_STREAM_HPP

#include <atomic>
#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace lrcreal {

namespace detail {

// A memoized cell. `Value` must expose `release_next()`, handing back the
// successor cell (or null) so long forced chains are torn down iteratively
// instead of through one destructor frame per element.
template <class Value>
class LazyCell {
public:
    using Pointer = std::shared_ptr<LazyCell>;

    explicit LazyCell(std::function<Value()> thunk) : thunk_(std::move(thunk)) {}

    explicit LazyCell(Value value) : value_(std::move(value)) {
        std::call_once(flag_, [] {});
        ready_.store(true, std::memory_order_release);
    }

    LazyCell(const LazyCell&) = delete;
    LazyCell& operator=(const LazyCell&) = delete;

    ~LazyCell() {
        if (!value_) return;
        Pointer next = value_->release_next();
        while (next && next.use_count() == 1) {
            Pointer after = next->value_ ? next->value_->release_next() : Pointer{};
            next.reset();
            next = std::move(after);
        }
    }

    const Value& force() {
        std::call_once(flag_, [this] {
            value_.emplace(thunk_());
            thunk_ = nullptr;
            ready_.store(true, std::memory_order_release);
        });
        return *value_;
    }

    bool forced() const noexcept { return ready_.load(std::memory_order_acquire); }

private:
    std::once_flag flag_;
    std::atomic<bool> ready_{false};
    std::function<Value()> thunk_;
    std::optional<Value> value_;
};

} // namespace detail

// ---------------------------------------------------------------------------
// Stream

template <class T>
struct StreamNode;

template <class T>
class Stream {
public:
    using value_type = T;
    using Node = StreamNode<T>;

    /// A stream whose first cell runs `thunk` when forced.
    static Stream lazy(std::function<Node()> thunk) {
        return Stream(std::make_shared<Cell>(std::move(thunk)));
    }

    /// A stream whose first cell is already evaluated.
    static Stream ready(T head, Stream tail) {
        return Stream(std::make_shared<Cell>(Node{std::move(head), std::move(tail)}));
    }

    /// A stream that obtains itself from `make` on first force.
    static Stream defer(std::function<Stream()> make) {
        return lazy([make = std::move(make)] { return make().node(); });
    }

    const Node& node() const { return cell_->force(); }
    const T& head() const { return node().head; }
    /// Forces this cell only; the returned tail is not forced.
    Stream tail() const { return node().tail; }

    bool forced() const noexcept { return cell_->forced(); }
    bool same_cell(const Stream& other) const noexcept { return cell_ == other.cell_; }

private:
    friend struct StreamNode<T>;
    using Cell = detail::LazyCell<Node>;

    explicit Stream(std::shared_ptr<Cell> cell) : cell_(std::move(cell)) {}

    std::shared_ptr<Cell> cell_;
};

template <class T>
struct StreamNode {
    T head;
    Stream<T> tail;

    std::shared_ptr<detail::LazyCell<StreamNode>> release_next() { return std::move(tail.cell_); }
};

/// cons(h, t): head `h`, tail produced by `t` when the tail is forced.
template <class T>
Stream<T> cons(T head, std::function<Stream<T>()> tail) {
    return Stream<T>::ready(std::move(head), Stream<T>::defer(std::move(tail)));
}

template <class T>
Stream<T> cons(T head, Stream<T> tail) {
    return Stream<T>::ready(std::move(head), std::move(tail));
}

/// Guarded corecursion: element i is the first component of `step` applied
/// to the i-th state. Reading element i runs `step` exactly i+1 times.
template <class State, class Step>
auto unfold(Step step, State seed)
    -> Stream<std::decay_t<decltype(std::get<0>(step(std::declval<const State&>())))>> {
    using T = std::decay_t<decltype(std::get<0>(step(std::declval<const State&>())))>;
    return Stream<T>::lazy([step = std::move(step), seed = std::move(seed)]() {
        auto [value, next] = step(seed);
        return StreamNode<T>{std::move(value), unfold<State>(step, std::move(next))};
    });
}

/// Element n is f(n).
template <class F>
auto from_fn(F f) {
    return unfold<std::size_t>(
        [f = std::move(f)](std::size_t n) { return std::make_pair(f(n), n + 1); }, 0);
}

template <class T>
Stream<T> constant(T x) {
    return unfold<std::monostate>([x = std::move(x)](std::monostate) { return std::make_pair(x, std::monostate{}); },
                                  std::monostate{});
}

/// The first n elements; forces exactly n cells.
template <class T>
std::vector<T> take(Stream<T> s, std::size_t n) {
    std::vector<T> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(s.head());
        if (i + 1 < n) s = s.tail();
    }
    return out;
}

/// Element i. Forces i+1 cells.
template <class T>
T nth(Stream<T> s, std::size_t i) {
    for (; i > 0; --i) s = s.tail();
    return s.head();
}

template <class F, class T>
auto map_stream(F f, Stream<T> s) -> Stream<std::decay_t<std::invoke_result_t<F&, const T&>>> {
    using U = std::decay_t<std::invoke_result_t<F&, const T&>>;
    return Stream<U>::lazy([f = std::move(f), s = std::move(s)]() {
        return StreamNode<U>{f(s.head()), map_stream(f, s.tail())};
    });
}

/// Head-forced copy of `s`, observationally equal to it.
template <class T>
Stream<T> decompose(const Stream<T>& s) {
    const auto& n = s.node();
    return Stream<T>::ready(n.head, n.tail);
}

/// True iff the first n elements of a and b are equal.
template <class T>
bool bisimilar_to_depth(Stream<T> a, Stream<T> b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        if (!(a.head() == b.head())) return false;
        if (i + 1 < n) {
            a = a.tail();
            b = b.tail();
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// LazyList

template <class T>
struct LazyListNode;

template <class T>
class LazyList {
public:
    using value_type = T;
    using Node = LazyListNode<T>;

    static LazyList lazy(std::function<Node()> thunk) {
        return LazyList(std::make_shared<Cell>(std::move(thunk)));
    }
    static LazyList nil() { return LazyList(std::make_shared<Cell>(Node{})); }
    static LazyList ready(T head, LazyList tail) {
        return LazyList(std::make_shared<Cell>(Node{std::make_pair(std::move(head), std::move(tail))}));
    }
    static LazyList defer(std::function<LazyList()> make) {
        return lazy([make = std::move(make)] { return make().node(); });
    }

    const Node& node() const { return cell_->force(); }
    bool is_nil() const { return !node().cons; }

    /// Throws std::out_of_range on Nil.
    const T& head() const { return cons_or_throw().first; }
    LazyList tail() const { return cons_or_throw().second; }

    bool forced() const noexcept { return cell_->forced(); }

private:
    friend struct LazyListNode<T>;
    using Cell = detail::LazyCell<Node>;

    explicit LazyList(std::shared_ptr<Cell> cell) : cell_(std::move(cell)) {}

    const std::pair<T, LazyList>& cons_or_throw() const {
        const auto& n = node();
        if (!n.cons) throw std::out_of_range("head/tail of an empty lazy list");
        return *n.cons;
    }

    std::shared_ptr<Cell> cell_;
};

template <class T>
struct LazyListNode {
    std::optional<std::pair<T, LazyList<T>>> cons; // empty means Nil

    std::shared_ptr<detail::LazyCell<LazyListNode>> release_next() {
        if (!cons) return {};
        return std::move(cons->second.cell_);
    }
};

template <class T>
LazyList<T> lcons(T head, std::function<LazyList<T>()> tail) {
    return LazyList<T>::ready(std::move(head), LazyList<T>::defer(std::move(tail)));
}

template <class T>
LazyList<T> from_list(const std::vector<T>& items) {
    auto out = LazyList<T>::nil();
    for (auto it = items.rbegin(); it != items.rend(); ++it) out = LazyList<T>::ready(*it, std::move(out));
    return out;
}

/// Forces up to `limit` cells and collects the elements seen.
template <class T>
std::vector<T> to_vector(LazyList<T> l, std::size_t limit = static_cast<std::size_t>(-1)) {
    std::vector<T> out;
    while (out.size() < limit && !l.is_nil()) {
        out.push_back(l.head());
        l = l.tail();
    }
    return out;
}

template <class F, class T>
auto map_lazy(F f, LazyList<T> l) -> LazyList<std::decay_t<std::invoke_result_t<F&, const T&>>> {
    using U = std::decay_t<std::invoke_result_t<F&, const T&>>;
    return LazyList<U>::lazy([f = std::move(f), l = std::move(l)]() -> LazyListNode<U> {
        if (l.is_nil()) return {};
        return {std::make_pair(f(l.head()), map_lazy(f, l.tail()))};
    });
}

template <class T>
LazyList<T> decompose_lazy(const LazyList<T>& l) {
    if (l.is_nil()) return LazyList<T>::nil();
    return LazyList<T>::ready(l.head(), l.tail());
}

/// Same constructor and element at each of the first n levels.
template <class T>
bool bisimilar_to_depth(LazyList<T> a, LazyList<T> b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        bool an = a.is_nil(), bn = b.is_nil();
        if (an != bn) return false;
        if (an) return true;
        if (!(a.head() == b.head())) return false;
        a = a.tail();
        b = b.tail();
    }
    return true;
}

// ---------------------------------------------------------------------------
// LazyTree

template <class T>
struct LazyTreeNode;

template <class T>
class LazyTree {
public:
    using Node = LazyTreeNode<T>;

    static LazyTree lazy(std::function<Node()> thunk) {
        return LazyTree(std::make_shared<Cell>(std::move(thunk)));
    }
    static LazyTree leaf() { return LazyTree(std::make_shared<Cell>(Node{})); }
    static LazyTree defer(std::function<LazyTree()> make) {
        return lazy([make = std::move(make)] { return make().node(); });
    }
    static LazyTree branch(T label, LazyTree left, LazyTree right) {
        return LazyTree(std::make_shared<Cell>(
            Node{std::make_tuple(std::move(label), std::move(left), std::move(right))}));
    }

    const Node& node() const { return cell_->force(); }
    bool is_leaf() const { return !node().branch; }

private:
    using Cell = detail::LazyCell<Node>;

    explicit LazyTree(std::shared_ptr<Cell> cell) : cell_(std::move(cell)) {}

    std::shared_ptr<Cell> cell_;
};

template <class T>
struct LazyTreeNode {
    std::optional<std::tuple<T, LazyTree<T>, LazyTree<T>>> branch; // empty means Leaf

    // Trees are torn down recursively; depth is whatever was forced.
    std::shared_ptr<detail::LazyCell<LazyTreeNode>> release_next() { return {}; }
};

/// Infinite complete binary tree with every label equal to `label`.
template <class T>
LazyTree<T> full_tree(T label) {
    return LazyTree<T>::lazy([label]() {
        auto sub = [label] { return full_tree(label); };
        return LazyTreeNode<T>{std::make_tuple(label, LazyTree<T>::defer(sub), LazyTree<T>::defer(sub))};
    });
}

/// A forced, finite prefix of a LazyTree. `Cut` marks where expansion stopped.
template <class T>
struct FiniteTree {
    enum class Kind { Leaf, Cut, Node };

    Kind kind = Kind::Leaf;
    std::optional<T> label;
    std::vector<FiniteTree> children; // two entries when kind == Node

    static FiniteTree make_leaf() { return {}; }
    static FiniteTree make_cut() { return {Kind::Cut, std::nullopt, {}}; }
    static FiniteTree make_node(T label, FiniteTree left, FiniteTree right) {
        FiniteTree t{Kind::Node, std::move(label), {}};
        t.children.push_back(std::move(left));
        t.children.push_back(std::move(right));
        return t;
    }

    friend bool operator==(const FiniteTree&, const FiniteTree&) = default;
};

/// Prunes `t` at depth d: anything at depth >= d becomes Cut and is not forced.
template <class T>
FiniteTree<T> tree_take(const LazyTree<T>& t, std::size_t d) {
    if (d == 0) return FiniteTree<T>::make_cut();
    if (t.is_leaf()) return FiniteTree<T>::make_leaf();
    const auto& [label, left, right] = *t.node().branch;
    return FiniteTree<T>::make_node(label, tree_take(left, d - 1), tree_take(right, d - 1));
}

} // namespace lrcreal

#endif
