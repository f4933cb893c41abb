#pragma once

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "lff/kernel/equivalence.hpp"

namespace lff::nfa {

using kernel::Letter;
using kernel::StateId;

/// A finite set of states kept sorted and duplicate-free, so equal sets
/// are equal values. Carrier of the free join-semilattice.
class StateSet {
public:
    StateSet() = default;
    explicit StateSet(std::vector<StateId> ids);
    static StateSet singleton(StateId s) { return StateSet({s}); }

    const std::vector<StateId>& ids() const { return ids_; }
    bool empty() const { return ids_.empty(); }
    std::size_t size() const { return ids_.size(); }
    bool contains(StateId s) const;
    StateSet join(const StateSet& other) const;

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    friend auto operator<=>(const StateSet&, const StateSet&) = default;

private:
    std::vector<StateId> ids_;
};

/// Non-deterministic automaton without epsilon moves: an HT-coalgebra
/// for H = 2 x (-)^Sigma and T the finite powerset monad.
class Nfa {
public:
    /// `transitions` is state-major: entry s * |Sigma| + a holds delta(s, a).
    Nfa(kernel::Alphabet alphabet, std::vector<std::string> states, StateSet accepting,
        std::vector<StateSet> transitions);

    const kernel::Alphabet& alphabet() const { return alphabet_; }
    const std::vector<std::string>& states() const { return states_; }
    std::size_t state_count() const { return states_.size(); }
    const StateSet& accepting() const { return accepting_; }
    bool is_accepting(StateId s) const { return accepting_.contains(s); }
    const StateSet& transition(StateId s, Letter a) const { return transitions_.at(s * alphabet_.size() + a); }

    std::optional<StateId> find_state(std::string_view name) const;
    /// Throws if `set` mentions a state outside this automaton.
    void check_states(const StateSet& set) const;

    friend bool operator==(const Nfa&, const Nfa&) = default;

private:
    kernel::Alphabet alphabet_;
    std::vector<std::string> states_;
    StateSet accepting_;
    std::vector<StateSet> transitions_;
};

/// Subset construction as an effect: outputs join, successors union.
struct PowersetEffect {
    using Value = StateSet;
    using Output = bool;
    using System = kernel::MooreSystem<Value, Output>;

    Value unit(StateId s) const { return StateSet::singleton(s); }
    Output lifted_output(const System& m, const Value& v) const;
    Value lifted_step(const System& m, const Value& v, Letter a) const;
};

using DeterminizedNfa = kernel::Determinization<PowersetEffect>;

DeterminizedNfa determinize(const Nfa& n);

/// Language membership of `word` from the configuration `start`.
bool accepts(const Nfa& n, const StateSet& start, std::span<const Letter> word);

using EquivVerdict = std::variant<kernel::Bisimulation<StateSet, StateSet>, kernel::Counterexample>;

/// Exact language equivalence. The budget is set to the product of the
/// powerset sizes, so the search always completes.
EquivVerdict nfa_equiv(const Nfa& n1, const StateSet& s1, const Nfa& n2, const StateSet& s2);

}  // namespace lff::nfa
