#include "lff/cfg/oracle.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace lff::cfg {

namespace {

class LeftmostExpansion {
public:
    LeftmostExpansion(const WeightedGrammar& g, std::span<const Letter> word) : g_(g), word_(word) {}

    Element count(const algebra::Word& form, std::size_t pos)
    {
        const Semiring s = g_.semiring();
        if (form.empty()) return pos == word_.size() ? s.one() : s.zero();
        const auto terminals = static_cast<std::size_t>(
            std::count_if(form.begin(), form.end(), [](const Generator& x) { return x.is_terminal(); }));
        if (terminals > word_.size() - pos) return s.zero();

        auto key = std::make_pair(form, pos);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        const algebra::Word rest(form.begin() + 1, form.end());
        const Generator& head = form.front();
        Element total = s.zero();
        if (head.is_terminal()) {
            if (pos < word_.size() && g_.terminals().name(word_[pos]) == head.id) total = count(rest, pos + 1);
        } else {
            auto x = g_.find_nonterminal(head.id);
            if (!x) throw UnboundGenerator(head);
            // x -> epsilon, weighted by the output
            if (!s.is_zero(g_.output(*x))) total = s.mul(g_.output(*x), count(rest, pos));
            // x -> a . body, the terminal a matched against the input right away
            if (pos < word_.size()) {
                for (const auto& [body, c] : g_.rule(*x, word_[pos]).terms())
                    total = s.add(total, s.mul(c, count(algebra::concat(body, rest), pos + 1)));
            }
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

private:
    const WeightedGrammar& g_;
    std::span<const Letter> word_;
    std::map<std::pair<algebra::Word, std::size_t>, Element> memo_;
};

}  // namespace

Element oracle_coefficient(const WeightedGrammar& g, const Polynomial& start, std::span<const Letter> word,
                           std::size_t max_length)
{
    if (word.size() > max_length) throw BoundExceeded("word longer than the oracle bound");
    kernel::check_word(word, g.terminals().size());
    g.check_polynomial(start);
    const Semiring s = g.semiring();
    LeftmostExpansion expansion(g, word);
    Element total = s.zero();
    for (const auto& [form, c] : start.terms()) total = s.add(total, s.mul(c, expansion.count(form, 0)));
    return total;
}

}  // namespace lff::cfg
