#include "generators.hpp"

#include <algorithm>
#include <numeric>

namespace lff::testing {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::vector<kernel::LetterWord> all_words(std::size_t letters, std::size_t max_len)
{
    std::vector<kernel::LetterWord> out{{}};
    std::size_t from = 0;
    for (std::size_t n = 1; n <= max_len; ++n) {
        const std::size_t to = out.size();
        for (std::size_t i = from; i < to; ++i)
            for (kernel::Letter a = 0; a < letters; ++a) {
                kernel::LetterWord w = out[i];
                w.push_back(a);
                out.push_back(std::move(w));
            }
        from = to;
    }
    return out;
}

nfa::StateSet random_subset(Rng& rng, std::size_t n, bool nonempty)
{
    std::vector<kernel::StateId> ids;
    for (std::size_t s = 0; s < n; ++s)
        if (coin(rng, 0.4)) ids.push_back(s);
    if (ids.empty() && nonempty) ids.push_back(uniform(rng, 0, n - 1));
    return nfa::StateSet(std::move(ids));
}

namespace {

std::vector<std::string> numbered(std::string_view prefix, std::size_t n)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(prefix) + std::to_string(i));
    return out;
}

std::vector<std::string> letter_names(std::size_t n)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
    return out;
}

}  // namespace

nfa::Nfa random_nfa(Rng& rng, std::size_t max_states, std::size_t letters, double density)
{
    const std::size_t n = uniform(rng, 1, max_states);
    std::vector<nfa::StateSet> trans;
    for (std::size_t i = 0; i < n * letters; ++i) {
        std::vector<kernel::StateId> ids;
        for (std::size_t t = 0; t < n; ++t)
            if (coin(rng, density)) ids.push_back(t);
        trans.emplace_back(std::move(ids));
    }
    return nfa::Nfa(kernel::Alphabet(letter_names(letters)), numbered("s", n), random_subset(rng, n, false),
                    std::move(trans));
}

std::pair<nfa::Nfa, nfa::StateSet> scramble(Rng& rng, const nfa::Nfa& n, const nfa::StateSet& start)
{
    // origin[i] is the original state behind new state i.
    std::vector<kernel::StateId> origin(n.state_count());
    std::iota(origin.begin(), origin.end(), 0);
    const std::size_t extra = uniform(rng, 0, 2);
    for (std::size_t i = 0; i < extra; ++i) origin.push_back(uniform(rng, 0, n.state_count() - 1));
    std::shuffle(origin.begin(), origin.end(), rng);

    const std::size_t k = n.alphabet().size();
    auto image = [&](const nfa::StateSet& old) {
        std::vector<kernel::StateId> ids;
        for (std::size_t i = 0; i < origin.size(); ++i)
            if (old.contains(origin[i])) ids.push_back(i);
        return nfa::StateSet(std::move(ids));
    };
    // A copy may stand in for its original on any edge or in the start set.
    auto some_image = [&](const nfa::StateSet& old) {
        std::vector<kernel::StateId> ids;
        for (auto s : old) {
            std::vector<kernel::StateId> copies;
            for (std::size_t i = 0; i < origin.size(); ++i)
                if (origin[i] == s) copies.push_back(i);
            ids.push_back(copies[uniform(rng, 0, copies.size() - 1)]);
            if (copies.size() > 1 && coin(rng)) ids.push_back(copies[uniform(rng, 0, copies.size() - 1)]);
        }
        return nfa::StateSet(std::move(ids));
    };
    std::vector<nfa::StateSet> trans;
    for (std::size_t i = 0; i < origin.size(); ++i)
        for (kernel::Letter a = 0; a < k; ++a) trans.push_back(some_image(n.transition(origin[i], a)));
    nfa::Nfa out(n.alphabet(), numbered("t", origin.size()), image(n.accepting()), std::move(trans));
    return {std::move(out), some_image(start)};
}

algebra::Element random_scalar(Rng& rng, algebra::Semiring s, unsigned max_coefficient)
{
    switch (s.kind()) {
    case algebra::Semiring::Kind::Boolean: return uniform(rng, 0, 1);
    case algebra::Semiring::Kind::Natural: return uniform(rng, 0, max_coefficient);
    case algebra::Semiring::Kind::Integer: break;
    }
    return algebra::Element(static_cast<long>(uniform(rng, 0, 2 * max_coefficient))) - max_coefficient;
}

algebra::Polynomial random_polynomial(Rng& rng, algebra::Semiring s, const std::vector<std::string>& variables,
                                      const std::vector<std::string>& terminals, PolynomialShape shape)
{
    const std::size_t gens = variables.size() + terminals.size();
    algebra::Polynomial p(s);
    const std::size_t terms = uniform(rng, 0, shape.max_terms);
    for (std::size_t t = 0; t < terms; ++t) {
        algebra::Word w;
        const std::size_t len = gens == 0 ? 0 : uniform(rng, 0, shape.max_length);
        for (std::size_t i = 0; i < len; ++i) {
            const std::size_t g = uniform(rng, 0, gens - 1);
            w.push_back(g < variables.size() ? algebra::Generator::variable(variables[g])
                                             : algebra::Generator::terminal(terminals[g - variables.size()]));
        }
        algebra::Element c = random_scalar(rng, s, shape.max_coefficient);
        if (c.is_zero()) c = 1;
        p = p + algebra::Polynomial::monomial(s, c, std::move(w));
    }
    return p;
}

cfg::WeightedGrammar random_grammar(Rng& rng, algebra::Semiring s, std::size_t nonterminals, std::size_t letters,
                                    PolynomialShape shape)
{
    const auto vars = numbered("X", nonterminals);
    const auto terms = letter_names(letters);
    std::vector<algebra::Element> outputs;
    std::vector<algebra::Polynomial> rules;
    for (std::size_t x = 0; x < nonterminals; ++x) {
        outputs.push_back(random_scalar(rng, s, shape.max_coefficient));
        for (std::size_t a = 0; a < letters; ++a) rules.push_back(random_polynomial(rng, s, vars, terms, shape));
    }
    return cfg::WeightedGrammar(s, vars, kernel::Alphabet(terms), std::move(outputs), std::move(rules));
}

std::vector<std::string> variable_names(const cfg::WeightedGrammar& g) { return g.nonterminals(); }

cfg::LiftedPair random_pair(Rng& rng, algebra::Semiring s, const std::vector<std::string>& variables,
                            const kernel::Alphabet& terminals, PolynomialShape shape)
{
    cfg::LiftedPair p{s, random_scalar(rng, s, shape.max_coefficient), {}};
    for (std::size_t a = 0; a < terminals.size(); ++a)
        p.deriv.push_back(random_polynomial(rng, s, variables, terminals.names(), shape));
    return p;
}

stack::StackAction random_action(Rng& rng, std::size_t symbols, std::size_t states, std::size_t max_lookahead)
{
    const std::size_t k = uniform(rng, 0, max_lookahead);
    auto entry = [&] {
        stack::StackWord w(uniform(rng, 0, 2));
        for (auto& s : w) s = uniform(rng, 0, symbols - 1);
        return stack::StackAction::Entry{uniform(rng, 0, states - 1), std::move(w)};
    };
    stack::StackAction::Table below, at;
    for (std::size_t len = 0; len <= k; ++len)
        stack::for_each_word(symbols, len, [&](const stack::StackWord& w) { (len < k ? below : at).emplace(w, entry()); });
    return stack::StackAction(symbols, k, std::move(below), std::move(at));
}

namespace {

rps::Term random_body(Rng& rng, const std::vector<std::pair<std::string, std::size_t>>& defined,
                      const std::vector<std::string>& params, std::size_t depth, bool guard)
{
    using rps::Term;
    const std::size_t choice = guard ? uniform(rng, 0, 1) : uniform(rng, 0, depth == 0 ? 1 : 4);
    auto leaf = [&] {
        if (!params.empty() && coin(rng, 0.7)) return Term::variable(params[uniform(rng, 0, params.size() - 1)]);
        return Term::apply("c");
    };
    auto sub = [&] { return depth == 0 ? leaf() : random_body(rng, defined, params, depth - 1, false); };
    switch (choice) {
    case 0: return Term::apply("f", {sub(), sub()});
    case 1: return guard || depth > 0 ? Term::apply("g", {sub()}) : leaf();
    case 2: return leaf();
    default: {
        const auto& [name, arity] = defined[uniform(rng, 0, defined.size() - 1)];
        std::vector<Term> args;
        for (std::size_t i = 0; i < arity; ++i) args.push_back(sub());
        return Term::apply(name, std::move(args));
    }
    }
}

}  // namespace

RandomScheme random_scheme(Rng& rng)
{
    std::vector<std::pair<std::string, std::size_t>> defined{{"F", uniform(rng, 1, 2)}};
    if (coin(rng)) defined.emplace_back("G", uniform(rng, 0, 2));
    std::vector<rps::Scheme::Definition> defs;
    for (const auto& [name, arity] : defined) {
        std::vector<std::string> params;
        for (std::size_t i = 0; i < arity; ++i) params.push_back("y" + std::to_string(i));
        rps::Term body = random_body(rng, defined, params, 2, true);
        defs.push_back({name, params, std::move(body)});
    }
    rps::Scheme s({{"f", 2}, {"g", 1}, {"c", 0}}, std::move(defs));
    std::vector<rps::Term> args(defined[0].second, rps::Term::variable("x"));
    return {std::move(s), rps::Term::apply("F", std::move(args))};
}

}  // namespace lff::testing
