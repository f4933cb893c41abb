#include "lff/cfg/grammar.hpp"

#include <algorithm>
#include <set>

#include "lff/nfa/nfa.hpp"

namespace lff::cfg {

UnboundGenerator::UnboundGenerator(const Generator& g)
    : Error(std::string("undeclared ") + (g.is_terminal() ? "terminal '" : "nonterminal '") + g.id + "'")
{
}

WeightedGrammar::WeightedGrammar(Semiring semiring, std::vector<std::string> nonterminals, kernel::Alphabet terminals,
                                 std::vector<Element> outputs, std::vector<Polynomial> rules)
    : semiring_(semiring), nonterminals_(std::move(nonterminals)), terminals_(std::move(terminals)),
      outputs_(std::move(outputs)), rules_(std::move(rules)),
      system_(terminals_.size(), outputs_, rules_)
{
    if (!semiring_.commutative()) throw algebra::NonCommutativeSemiring();
    std::set<std::string_view> names;
    for (const auto& x : nonterminals_)
        if (x.empty() || !names.insert(x).second) throw Error("duplicate or empty nonterminal '" + x + "'");
    if (outputs_.size() != nonterminals_.size()) throw Error("one output per nonterminal expected");
    for (const auto& o : outputs_)
        if (!semiring_.contains(o)) throw Error("output weight outside the semiring");
    for (const auto& r : rules_) {
        algebra::require_same(semiring_, r.semiring());
        check_polynomial(r);
    }
}

std::optional<std::size_t> WeightedGrammar::find_nonterminal(std::string_view name) const
{
    auto it = std::find(nonterminals_.begin(), nonterminals_.end(), name);
    if (it == nonterminals_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - nonterminals_.begin());
}

void WeightedGrammar::check_polynomial(const Polynomial& p) const
{
    algebra::require_same(semiring_, p.semiring());
    for (const auto& [word, c] : p.terms())
        for (const Generator& g : word) {
            const bool known = g.is_terminal() ? terminals_.find(g.id).has_value() : find_nonterminal(g.id).has_value();
            if (!known) throw UnboundGenerator(g);
        }
}

WeightedGrammar from_nfa(const nfa::Nfa& n)
{
    const Semiring b = Semiring::boolean();
    std::vector<std::string> names;
    for (const auto& s : n.states()) names.push_back("q" + s);
    std::vector<Element> outputs;
    std::vector<Polynomial> rules;
    for (kernel::StateId s = 0; s < n.state_count(); ++s) {
        outputs.push_back(n.is_accepting(s) ? 1 : 0);
        for (Letter a = 0; a < n.alphabet().size(); ++a) {
            Polynomial r(b);
            for (kernel::StateId t : n.transition(s, a)) r = r + Polynomial::unit(Generator::variable(names[t]), b);
            rules.push_back(std::move(r));
        }
    }
    return WeightedGrammar(b, names, n.alphabet(), std::move(outputs), std::move(rules));
}

Polynomial start_polynomial(const nfa::Nfa& n, const nfa::StateSet& start)
{
    n.check_states(start);
    const Semiring b = Semiring::boolean();
    Polynomial p(b);
    for (kernel::StateId s : start) p = p + Polynomial::unit(Generator::variable("q" + n.states()[s]), b);
    return p;
}

}  // namespace lff::cfg
