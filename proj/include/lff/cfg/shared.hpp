#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lff/cfg/step.hpp"

namespace lff::cfg {

/// The pointed determinization on a shared representation.
///
/// PointedSystem expands every fuse(c#(suffix)) it creates, so its states
/// grow doubly exponentially with word length (the counting grammar needs
/// words of length 27 after five letters). Here a state is a combination of
/// words over symbols, where a symbol is a generator or an opaque node
/// F(p) standing for fuse(c#(p)). Since c# is an algebra morphism,
///   o(F(p)) = o(p),   delta_a(F(p)) = F(delta_a(p)),
/// and expand() recovers exactly the polynomial PointedSystem reaches.
///
/// Nodes live in a table owned by the system; states are only meaningful
/// for the system that produced them. Not thread safe.
class SharedPointedSystem {
public:
    using Symbol = std::uint32_t;
    using SymbolWord = std::vector<Symbol>;
    using Value = std::map<SymbolWord, Element>;
    using Output = Element;

    explicit SharedPointedSystem(const WeightedGrammar& g);

    std::size_t alphabet_size() const { return grammar_->terminals().size(); }
    Output output(const Value& v) const;
    Value step(const Value& v, Letter a) const;

    /// The state holding polynomial p.
    Value embed(const Polynomial& p) const;
    /// The polynomial a state stands for.
    Polynomial expand(const Value& v) const;
    /// Number of fuse nodes created so far.
    std::size_t node_count() const { return nodes_.size(); }

private:
    struct Node {
        Value body;
        Element output;
        std::vector<std::optional<Value>> deriv;
    };

    Element symbol_output(Symbol s) const;
    const Value& symbol_step(Symbol s, Letter a) const;
    /// F(p), with F(c * eps) = c * eps and F(0) = 0 folded in.
    Value fuse_of(Value p) const;
    void accumulate(Value& into, SymbolWord w, const Element& c) const;

    const WeightedGrammar* grammar_;
    Semiring semiring_;
    std::size_t generators_;
    // Symbols below generators_ are generators: nonterminals, then terminals.
    std::vector<Value> generator_steps_;
    mutable std::vector<Node> nodes_;
    mutable std::map<Value, Symbol> index_;
};

}  // namespace lff::cfg
