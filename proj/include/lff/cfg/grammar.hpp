#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lff/algebra/polynomial.hpp"
#include "lff/kernel/system.hpp"

namespace lff::nfa {
class Nfa;
class StateSet;
}  // namespace lff::nfa

namespace lff::cfg {

using algebra::Element;
using algebra::Generator;
using algebra::Polynomial;
using algebra::Semiring;
using kernel::Letter;

class UnboundGenerator : public Error {
public:
    explicit UnboundGenerator(const Generator& g);
};

/// A weighted context-free grammar given directly as a coalgebra
/// X -> S x S<X + Sigma>^Sigma: every nonterminal has an output weight and,
/// per terminal, its pre-computed derivative.
class WeightedGrammar {
public:
    using System = kernel::MooreSystem<Polynomial, Element>;

    /// `rules` is nonterminal-major: entry x * |Sigma| + a is rule(x, a).
    /// Throws on undeclared generators, foreign semirings, out-of-carrier
    /// outputs or a non-commutative semiring.
    WeightedGrammar(Semiring semiring, std::vector<std::string> nonterminals, kernel::Alphabet terminals,
                    std::vector<Element> outputs, std::vector<Polynomial> rules);

    Semiring semiring() const { return semiring_; }
    const std::vector<std::string>& nonterminals() const { return nonterminals_; }
    const kernel::Alphabet& terminals() const { return terminals_; }
    std::optional<std::size_t> find_nonterminal(std::string_view name) const;

    const Element& output(std::size_t x) const { return system_.output(x); }
    const Polynomial& rule(std::size_t x, Letter a) const { return system_.transition(x, a); }
    const System& system() const { return system_; }

    /// Throws UnboundGenerator unless `p` only uses declared generators.
    void check_polynomial(const Polynomial& p) const;

    friend bool operator==(const WeightedGrammar& a, const WeightedGrammar& b)
    {
        return a.semiring_ == b.semiring_ && a.nonterminals_ == b.nonterminals_ && a.terminals_ == b.terminals_ &&
               a.outputs_ == b.outputs_ && a.rules_ == b.rules_;
    }

private:
    Semiring semiring_;
    std::vector<std::string> nonterminals_;
    kernel::Alphabet terminals_;
    std::vector<Element> outputs_;
    std::vector<Polynomial> rules_;
    System system_;
};

/// Right-linear encoding of an automaton over B: one nonterminal per
/// state, rule(q, a) = sum of successors, output(q) = [q accepting].
WeightedGrammar from_nfa(const nfa::Nfa& n);

/// The polynomial sum_{s in S} s over the nonterminals of from_nfa(n).
Polynomial start_polynomial(const nfa::Nfa& n, const nfa::StateSet& start);

}  // namespace lff::cfg
