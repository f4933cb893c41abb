#pragma once

#include <compare>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "lff/kernel/alphabet.hpp"

namespace lff::stack {

using kernel::StateId;
using Symbol = std::size_t;
/// Stack contents, top first.
using StackWord = std::vector<Symbol>;

struct Configuration {
    StateId state = 0;
    StackWord stack;

    friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

/// Calls `visit` for every stack word over `symbols` letters of length `length`,
/// in lexicographic order.
void for_each_word(std::size_t symbols, std::size_t length, const std::function<void(const StackWord&)>& visit);

/// An element (r, t) of the stack monad: a map from stacks to
/// (state, stack) that only inspects the top `lookahead` cells. Stored as
/// two total tables and normalized to the least lookahead that reproduces
/// the same function, so == coincides with equality of the maps.
class StackAction {
public:
    struct Entry {
        StateId state = 0;
        StackWord replacement;

        friend auto operator<=>(const Entry&, const Entry&) = default;
    };
    using Table = std::map<StackWord, Entry>;

    /// `below` covers every stack shorter than `lookahead`; `at` every
    /// stack of length exactly `lookahead`, whose replacement is prefixed
    /// to the untouched rest. Throws if either table is not total.
    StackAction(std::size_t symbols, std::size_t lookahead, Table below, Table at);

    /// eta(s): no lookahead, stack untouched.
    static StackAction unit(StateId s, std::size_t symbols);

    /// Tabulates `f`, which must satisfy f(w u) = (r(w), t(w) u) for |w| = lookahead.
    static StackAction tabulate(std::size_t symbols, std::size_t lookahead,
                                const std::function<Configuration(const StackWord&)>& f);

    Configuration apply(std::span<const Symbol> stack) const;

    std::size_t symbols() const { return symbols_; }
    std::size_t lookahead() const { return lookahead_; }
    const Table& below() const { return below_; }
    const Table& at() const { return at_; }

    /// Largest state mentioned in any entry.
    StateId max_state() const;

    friend auto operator<=>(const StackAction&, const StackAction&) = default;

private:
    void normalize();

    std::size_t symbols_;
    std::size_t lookahead_;
    Table below_;
    Table at_;
};

/// Kleisli composition: stack -> g(r).apply(t) where (r, t) = f.apply(stack).
StackAction compose(const StackAction& f, const std::function<const StackAction&(StateId)>& g);
StackAction compose(const StackAction& f, std::span<const StackAction> g);

/// An output predicate on stacks that only inspects the top `lookahead`
/// cells; normalized like StackAction.
class StackPredicate {
public:
    using Table = std::map<StackWord, bool>;

    StackPredicate(std::size_t symbols, std::size_t lookahead, Table below, Table at);

    static StackPredicate constant(std::size_t symbols, bool value);
    static StackPredicate tabulate(std::size_t symbols, std::size_t lookahead,
                                   const std::function<bool(const StackWord&)>& p);

    bool holds(std::span<const Symbol> stack) const;

    std::size_t symbols() const { return symbols_; }
    std::size_t lookahead() const { return lookahead_; }

    friend auto operator<=>(const StackPredicate&, const StackPredicate&) = default;

private:
    void normalize();

    std::size_t symbols_;
    std::size_t lookahead_;
    Table below_;
    Table at_;
};

}  // namespace lff::stack
