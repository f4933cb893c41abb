#pragma once

#include <deque>
#include <map>
#include <set>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "lff/kernel/system.hpp"

namespace lff::kernel {

/// Iterated derivative of `start` along `word`.
template <DeterminizedSystem S>
typename S::Value derive(const S& sys, typename S::Value start, std::span<const Letter> word)
{
    check_word(word, sys.alphabet_size());
    for (Letter a : word) start = sys.step(start, a);
    return start;
}

/// The image of `word` under the behaviour of `start`: membership for
/// automata, the series coefficient for grammars.
template <DeterminizedSystem S>
typename S::Output behaviour_at(const S& sys, const typename S::Value& start, std::span<const Letter> word)
{
    return sys.output(derive(sys, start, word));
}

struct Equal {};

struct Counterexample {
    LetterWord word;
};

struct BudgetExceeded {
    std::size_t explored = 0;
};

/// The pairs closed under derivatives, in discovery order.
template <class A, class B>
struct Bisimulation {
    std::vector<std::pair<A, B>> pairs;
};

using BoundedVerdict = std::variant<Equal, Counterexample>;

template <class A, class B>
using BisimVerdict = std::variant<Bisimulation<A, B>, Counterexample, BudgetExceeded>;

namespace detail {

template <class L, class R>
void require_same_alphabet(const L& lhs, const R& rhs)
{
    if (lhs.alphabet_size() != rhs.alphabet_size()) throw AlphabetError("alphabet mismatch");
}

}  // namespace detail

/// Compares outputs of all derivatives along words of length <= depth,
/// breadth-first in length-lexicographic order. Returns the least
/// distinguishing word if there is one within the bound.
template <DeterminizedSystem L, DeterminizedSystem R>
BoundedVerdict equiv_bounded(const L& lhs, const typename L::Value& s1, const R& rhs,
                             const typename R::Value& s2, std::size_t depth)
{
    detail::require_same_alphabet(lhs, rhs);
    using Pair = std::pair<typename L::Value, typename R::Value>;
    if (!(lhs.output(s1) == rhs.output(s2))) return Counterexample{};
    std::set<Pair> seen;
    std::deque<std::pair<Pair, LetterWord>> queue;
    seen.insert(Pair{s1, s2});
    queue.emplace_back(Pair{s1, s2}, LetterWord{});
    while (!queue.empty()) {
        auto [pair, word] = std::move(queue.front());
        queue.pop_front();
        if (word.size() >= depth) continue;
        for (Letter a = 0; a < lhs.alphabet_size(); ++a) {
            Pair next{lhs.step(pair.first, a), rhs.step(pair.second, a)};
            if (seen.contains(next)) continue;
            LetterWord longer = word;
            longer.push_back(a);
            if (!(lhs.output(next.first) == rhs.output(next.second))) return Counterexample{std::move(longer)};
            seen.insert(next);
            queue.emplace_back(std::move(next), std::move(longer));
        }
    }
    return Equal{};
}

template <DeterminizedSystem S>
BoundedVerdict equiv_bounded(const S& sys, const typename S::Value& s1, const typename S::Value& s2,
                             std::size_t depth)
{
    return equiv_bounded(sys, s1, sys, s2, depth);
}

/// Explores reachable pairs of derivatives breadth-first, identifying
/// pairs by canonical form. Succeeds with the witnessing bisimulation when
/// the closure is complete, fails with the length-lex least distinguishing
/// word, or gives up once more than `state_budget` pairs would be needed.
template <DeterminizedSystem L, DeterminizedSystem R>
BisimVerdict<typename L::Value, typename R::Value> bisim_decide(const L& lhs, const typename L::Value& s1,
                                                                const R& rhs, const typename R::Value& s2,
                                                                std::size_t state_budget)
{
    detail::require_same_alphabet(lhs, rhs);
    if (state_budget < 1) throw Error("state budget must be at least 1");
    using Pair = std::pair<typename L::Value, typename R::Value>;
    if (!(lhs.output(s1) == rhs.output(s2))) return Counterexample{};

    std::map<Pair, std::size_t> index;
    Bisimulation<typename L::Value, typename R::Value> relation;
    std::deque<std::pair<std::size_t, LetterWord>> queue;
    index.emplace(Pair{s1, s2}, 0);
    relation.pairs.emplace_back(s1, s2);
    queue.emplace_back(0, LetterWord{});
    while (!queue.empty()) {
        auto [at, word] = std::move(queue.front());
        queue.pop_front();
        for (Letter a = 0; a < lhs.alphabet_size(); ++a) {
            const auto& [v1, v2] = relation.pairs[at];
            Pair next{lhs.step(v1, a), rhs.step(v2, a)};
            if (index.contains(next)) continue;
            LetterWord longer = word;
            longer.push_back(a);
            if (!(lhs.output(next.first) == rhs.output(next.second))) return Counterexample{std::move(longer)};
            if (relation.pairs.size() >= state_budget) return BudgetExceeded{relation.pairs.size()};
            index.emplace(next, relation.pairs.size());
            relation.pairs.push_back(std::move(next));
            queue.emplace_back(relation.pairs.size() - 1, std::move(longer));
        }
    }
    return relation;
}

template <DeterminizedSystem S>
BisimVerdict<typename S::Value, typename S::Value> bisim_decide(const S& sys, const typename S::Value& s1,
                                                                const typename S::Value& s2,
                                                                std::size_t state_budget)
{
    return bisim_decide(sys, s1, sys, s2, state_budget);
}

}  // namespace lff::kernel
