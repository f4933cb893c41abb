#include "lff/cfg/step.hpp"

namespace lff::cfg {

namespace {

Element generator_output(const WeightedGrammar& g, const Generator& x)
{
    if (x.is_terminal()) return g.semiring().zero();
    auto i = g.find_nonterminal(x.id);
    if (!i) throw UnboundGenerator(x);
    return g.output(*i);
}

Polynomial generator_derivative(const WeightedGrammar& g, const Generator& x, Letter a)
{
    const Semiring s = g.semiring();
    if (x.is_terminal()) {
        auto b = g.terminals().find(x.id);
        if (!b) throw UnboundGenerator(x);
        return *b == a ? Polynomial::one(s) : Polynomial(s);
    }
    auto i = g.find_nonterminal(x.id);
    if (!i) throw UnboundGenerator(x);
    return g.rule(*i, a);
}

}  // namespace

Element output_of(const WeightedGrammar& g, const Polynomial& v)
{
    const Semiring s = g.semiring();
    algebra::require_same(s, v.semiring());
    Element total = s.zero();
    for (const auto& [word, c] : v.terms()) {
        Element product = c;
        for (const Generator& x : word) {
            product = s.mul(product, generator_output(g, x));
            if (s.is_zero(product)) break;
        }
        total = s.add(total, product);
    }
    return total;
}

Polynomial derivative(const WeightedGrammar& g, const Polynomial& v, Letter a)
{
    const Semiring s = g.semiring();
    algebra::require_same(s, v.semiring());
    kernel::check_word(std::span<const Letter>(&a, 1), g.terminals().size());
    Polynomial result(s);
    for (const auto& [word, c] : v.terms()) {
        // sum_i o(g_1 .. g_{i-1}) * delta(g_i, a) * g_{i+1} .. g_n
        Element prefix = c;
        for (std::size_t i = 0; i < word.size() && !s.is_zero(prefix); ++i) {
            const Polynomial head = generator_derivative(g, word[i], a);
            if (!head.is_zero()) {
                algebra::Word suffix(word.begin() + static_cast<std::ptrdiff_t>(i) + 1, word.end());
                result = result + algebra::scale(prefix, head * Polynomial::monomial(s, s.one(), std::move(suffix)));
            }
            prefix = s.mul(prefix, generator_output(g, word[i]));
        }
    }
    return result;
}

LiftedPair grammar_step(const WeightedGrammar& g, const Polynomial& v)
{
    LiftedPair r{g.semiring(), output_of(g, v), {}};
    r.deriv.reserve(g.terminals().size());
    for (Letter a = 0; a < g.terminals().size(); ++a) r.deriv.push_back(derivative(g, v, a));
    return r;
}

PolynomialEffect::PolynomialEffect(Semiring semiring, std::vector<std::string> variables, kernel::Alphabet terminals)
    : semiring_(semiring), variables_(std::move(variables)), terminals_(std::move(terminals))
{
    for (kernel::StateId i = 0; i < variables_.size(); ++i) index_.emplace(variables_[i], i);
}

PolynomialEffect::Value PolynomialEffect::unit(kernel::StateId s) const
{
    return Polynomial::unit(Generator::variable(variables_.at(s)), semiring_);
}

LiftedPair PolynomialEffect::lift(const System& m, const Value& v) const
{
    algebra::require_same(semiring_, v.semiring());
    const std::size_t letters = terminals_.size();
    // c#(g_i .. g_n) = c#(g_i) c#(g_{i+1} .. g_n); terms often share suffixes,
    // so the images of suffixes are cached for the duration of the call.
    std::map<algebra::Word, LiftedPair, algebra::LengthLex> suffixes;
    suffixes.emplace(algebra::Word{}, one_pair(semiring_, letters));
    auto generator_pair = [&](const Generator& g) {
        LiftedPair head = zero_pair(semiring_, letters);
        if (g.is_terminal()) {
            auto b = terminals_.find(g.id);
            if (!b) throw UnboundGenerator(g);
            return pointing(semiring_, letters, *b);
        }
        auto x = index_.find(g.id);
        if (x == index_.end()) throw UnboundGenerator(g);
        head.out = m.output(x->second);
        for (Letter a = 0; a < letters; ++a) head.deriv[a] = m.transition(x->second, a);
        return head;
    };
    LiftedPair total = zero_pair(semiring_, letters);
    for (const auto& [word, c] : v.terms()) {
        // Longest suffix already known, then extend leftwards.
        std::size_t i = 0;
        auto known = suffixes.end();
        for (; i <= word.size(); ++i) {
            known = suffixes.find(algebra::Word(word.begin() + static_cast<std::ptrdiff_t>(i), word.end()));
            if (known != suffixes.end()) break;
        }
        const LiftedPair* acc = &known->second;
        while (i-- > 0) {
            auto image = lift_mul(generator_pair(word[i]), *acc, terminals_);
            acc = &suffixes.emplace(algebra::Word(word.begin() + static_cast<std::ptrdiff_t>(i), word.end()), std::move(image))
                       .first->second;
        }
        total = lift_add(total, lift_scale(c, *acc));
    }
    return total;
}

PolynomialEffect::Value PolynomialEffect::lifted_step(const System& m, const Value& v, Letter a) const
{
    kernel::check_word(std::span<const Letter>(&a, 1), terminals_.size());
    return lift(m, v).deriv[a];
}

PointedSystem determinize(const WeightedGrammar& g)
{
    return PointedSystem(g.system(), PolynomialEffect(g.semiring(), g.nonterminals(), g.terminals()));
}

LiftedPair pointed_step(const WeightedGrammar& g, const Polynomial& v)
{
    return PolynomialEffect(g.semiring(), g.nonterminals(), g.terminals()).lift(g.system(), v);
}

Element coefficient(const WeightedGrammar& g, const Polynomial& start, std::span<const Letter> word)
{
    g.check_polynomial(start);
    return kernel::behaviour_at(GrammarSystem(g), start, word);
}

}  // namespace lff::cfg
