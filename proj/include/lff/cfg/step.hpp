#pragma once

#include <map>
#include <span>
#include <string>

#include "lff/cfg/lifted.hpp"
#include "lff/kernel/equivalence.hpp"

namespace lff::cfg {

/// Output of a polynomial under the grammar's determinization: nonterminals
/// give their output, terminals give 0, words multiply, sums add.
Element output_of(const WeightedGrammar& g, const Polynomial& v);

/// Derivative by the product rule: delta(u v, a) = delta(u, a) v + o(u) delta(v, a),
/// where the suffix v is kept literally. Linear in v.
Polynomial derivative(const WeightedGrammar& g, const Polynomial& v, Letter a);

/// Both of the above at once, for every terminal.
LiftedPair grammar_step(const WeightedGrammar& g, const Polynomial& v);

/// The determinized grammar with derivatives computed by grammar_step.
class GrammarSystem {
public:
    using Value = Polynomial;
    using Output = Element;

    explicit GrammarSystem(const WeightedGrammar& g) : grammar_(&g) {}

    std::size_t alphabet_size() const { return grammar_->terminals().size(); }
    Output output(const Value& v) const { return output_of(*grammar_, v); }
    Value step(const Value& v, Letter a) const { return derivative(*grammar_, v, a); }
    const WeightedGrammar& grammar() const { return *grammar_; }

private:
    const WeightedGrammar* grammar_;
};

/// The polynomial monad S<- + Sigma> with the lifting whose multiplication
/// is lift_mul and whose pointing sends b to (0, rho_b). Determinizing
/// with it is the generalized powerset construction for grammars.
class PolynomialEffect {
public:
    using Value = Polynomial;
    using Output = Element;
    using System = kernel::MooreSystem<Value, Output>;

    PolynomialEffect(Semiring semiring, std::vector<std::string> variables, kernel::Alphabet terminals);

    Value unit(kernel::StateId s) const;
    /// c#(v): extends the coalgebra along the free algebra structure.
    LiftedPair lift(const System& m, const Value& v) const;
    Output lifted_output(const System& m, const Value& v) const { return lift(m, v).out; }
    Value lifted_step(const System& m, const Value& v, Letter a) const;

private:
    Semiring semiring_;
    std::vector<std::string> variables_;
    std::map<std::string, kernel::StateId, std::less<>> index_;
    kernel::Alphabet terminals_;
};

using PointedSystem = kernel::Determinization<PolynomialEffect>;

PointedSystem determinize(const WeightedGrammar& g);

/// c#(v) for the grammar's own coalgebra.
LiftedPair pointed_step(const WeightedGrammar& g, const Polynomial& v);

/// Coefficient of `word` in the series denoted by `start`.
Element coefficient(const WeightedGrammar& g, const Polynomial& start, std::span<const Letter> word);

}  // namespace lff::cfg
