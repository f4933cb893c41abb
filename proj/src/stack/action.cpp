#include "lff/stack/action.hpp"

#include <algorithm>

namespace lff::stack {

void for_each_word(std::size_t symbols, std::size_t length, const std::function<void(const StackWord&)>& visit)
{
    StackWord w(length, 0);
    if (length > 0 && symbols == 0) return;
    while (true) {
        visit(w);
        std::size_t i = length;
        while (i > 0 && w[i - 1] + 1 == symbols) w[--i] = 0;
        if (i == 0) return;
        ++w[i - 1];
    }
}

namespace {

std::size_t power(std::size_t base, std::size_t exp)
{
    std::size_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

template <class Table>
void check_total(const Table& below, const Table& at, std::size_t symbols, std::size_t k)
{
    std::size_t short_count = 0;
    for (std::size_t i = 0; i < k; ++i) short_count += power(symbols, i);
    auto valid = [symbols](const StackWord& w) {
        return std::all_of(w.begin(), w.end(), [symbols](Symbol s) { return s < symbols; });
    };
    bool ok = below.size() == short_count && at.size() == power(symbols, k);
    for (const auto& [w, e] : below) ok = ok && w.size() < k && valid(w);
    for (const auto& [w, e] : at) ok = ok && w.size() == k && valid(w);
    if (!ok) throw Error("stack table is not total on the stack alphabet");
}

StackWord append(StackWord w, Symbol s)
{
    w.push_back(s);
    return w;
}

}  // namespace

StackAction::StackAction(std::size_t symbols, std::size_t lookahead, Table below, Table at)
    : symbols_(symbols), lookahead_(lookahead), below_(std::move(below)), at_(std::move(at))
{
    check_total(below_, at_, symbols_, lookahead_);
    normalize();
}

StackAction StackAction::unit(StateId s, std::size_t symbols)
{
    return StackAction(symbols, 0, {}, {{StackWord{}, Entry{s, {}}}});
}

StackAction StackAction::tabulate(std::size_t symbols, std::size_t lookahead,
                                  const std::function<Configuration(const StackWord&)>& f)
{
    Table below, at;
    for (std::size_t len = 0; len <= lookahead; ++len)
        for_each_word(symbols, len, [&](const StackWord& w) {
            Configuration c = f(w);
            (len < lookahead ? below : at).emplace(w, Entry{c.state, std::move(c.stack)});
        });
    return StackAction(symbols, lookahead, std::move(below), std::move(at));
}

// Drops one cell of lookahead whenever every stack w of length k-1 and all
// its one-cell extensions w g agree: same state, replacement t and t g.
void StackAction::normalize()
{
    while (lookahead_ > 0) {
        const std::size_t k = lookahead_ - 1;
        Table reduced;
        bool uniform = true;
        for_each_word(symbols_, k, [&](const StackWord& w) {
            if (!uniform) return;
            const Entry& exact = below_.at(w);
            for (Symbol g = 0; g < symbols_ && uniform; ++g) {
                const Entry& ext = at_.at(append(w, g));
                uniform = ext.state == exact.state && ext.replacement == append(exact.replacement, g);
            }
            reduced.emplace(w, exact);
        });
        if (!uniform) return;
        for (auto it = below_.begin(); it != below_.end();)
            it = it->first.size() == k ? below_.erase(it) : std::next(it);
        at_ = std::move(reduced);
        lookahead_ = k;
    }
}

Configuration StackAction::apply(std::span<const Symbol> stack) const
{
    if (stack.size() < lookahead_) {
        const Entry& e = below_.at(StackWord(stack.begin(), stack.end()));
        return {e.state, e.replacement};
    }
    const Entry& e = at_.at(StackWord(stack.begin(), stack.begin() + static_cast<std::ptrdiff_t>(lookahead_)));
    Configuration c{e.state, e.replacement};
    c.stack.insert(c.stack.end(), stack.begin() + static_cast<std::ptrdiff_t>(lookahead_), stack.end());
    return c;
}

StateId StackAction::max_state() const
{
    StateId m = 0;
    for (const auto& [w, e] : below_) m = std::max(m, e.state);
    for (const auto& [w, e] : at_) m = std::max(m, e.state);
    return m;
}

StackAction compose(const StackAction& f, const std::function<const StackAction&(StateId)>& g)
{
    std::size_t inner = 0;
    for (StateId r = 0; r <= f.max_state(); ++r) inner = std::max(inner, g(r).lookahead());
    return StackAction::tabulate(f.symbols(), f.lookahead() + inner, [&](const StackWord& w) {
        Configuration c = f.apply(w);
        const StackAction& next = g(c.state);
        if (next.symbols() != f.symbols()) throw Error("stack alphabets differ");
        return next.apply(c.stack);
    });
}

StackAction compose(const StackAction& f, std::span<const StackAction> g)
{
    if (g.size() <= f.max_state()) throw Error("continuation family does not cover every state");
    return compose(f, [g](StateId r) -> const StackAction& { return g[r]; });
}

StackPredicate::StackPredicate(std::size_t symbols, std::size_t lookahead, Table below, Table at)
    : symbols_(symbols), lookahead_(lookahead), below_(std::move(below)), at_(std::move(at))
{
    check_total(below_, at_, symbols_, lookahead_);
    normalize();
}

StackPredicate StackPredicate::constant(std::size_t symbols, bool value)
{
    return StackPredicate(symbols, 0, {}, {{StackWord{}, value}});
}

StackPredicate StackPredicate::tabulate(std::size_t symbols, std::size_t lookahead,
                                        const std::function<bool(const StackWord&)>& p)
{
    Table below, at;
    for (std::size_t len = 0; len <= lookahead; ++len)
        for_each_word(symbols, len, [&](const StackWord& w) { (len < lookahead ? below : at).emplace(w, p(w)); });
    return StackPredicate(symbols, lookahead, std::move(below), std::move(at));
}

void StackPredicate::normalize()
{
    while (lookahead_ > 0) {
        const std::size_t k = lookahead_ - 1;
        Table reduced;
        bool uniform = true;
        for_each_word(symbols_, k, [&](const StackWord& w) {
            if (!uniform) return;
            const bool exact = below_.at(w);
            for (Symbol g = 0; g < symbols_ && uniform; ++g) uniform = at_.at(append(w, g)) == exact;
            reduced.emplace(w, exact);
        });
        if (!uniform) return;
        for (auto it = below_.begin(); it != below_.end();)
            it = it->first.size() == k ? below_.erase(it) : std::next(it);
        at_ = std::move(reduced);
        lookahead_ = k;
    }
}

bool StackPredicate::holds(std::span<const Symbol> stack) const
{
    if (stack.size() < lookahead_) return below_.at(StackWord(stack.begin(), stack.end()));
    return at_.at(StackWord(stack.begin(), stack.begin() + static_cast<std::ptrdiff_t>(lookahead_)));
}

}  // namespace lff::stack
