#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lff/kernel/equivalence.hpp"
#include "lff/stack/action.hpp"

namespace lff::stack {

using kernel::Letter;
using kernel::LetterWord;

/// A transition clause: if the stack starts with `pattern`, move to
/// `target` and replace the pattern by `replacement`.
struct Clause {
    StackWord pattern;
    StateId target = 0;
    StackWord replacement;

    friend bool operator==(const Clause&, const Clause&) = default;
};

/// A stack machine in clause form, as written in machine documents.
/// `outputs[s]` lists patterns; state s accepts a stack iff some pattern is a
/// prefix of it. `clauses` is state-major over the input alphabet.
struct MachineSpec {
    kernel::Alphabet input;
    std::vector<std::string> stack_symbols;
    std::vector<std::string> states;
    std::vector<std::vector<StackWord>> outputs;
    std::vector<std::vector<Clause>> clauses;

    const std::vector<Clause>& clauses_for(StateId s, Letter a) const { return clauses.at(s * input.size() + a); }
    std::optional<StateId> find_state(std::string_view name) const;
    std::optional<Symbol> find_symbol(std::string_view name) const;
    /// Checks table shapes and that every index is declared.
    void validate() const;

    friend bool operator==(const MachineSpec&, const MachineSpec&) = default;
};

class NotTotal : public Error {
public:
    using Error::Error;
};

/// The predicate "some pattern is a prefix of the stack".
StackPredicate prefix_predicate(std::size_t symbols, const std::vector<StackWord>& patterns);

/// A deterministic real-time stack machine: an HT-coalgebra for the stack
/// monad T and H = B x (-)^Sigma, with B the finite-lookahead predicates.
class DeterministicMachine {
public:
    DeterministicMachine(kernel::Alphabet input, std::size_t symbols, std::vector<StackPredicate> outputs,
                         std::vector<StackAction> transitions);

    /// Compiles clause form; the first matching clause in order wins. Throws
    /// NotTotal naming the state, letter and stack when nothing matches.
    static DeterministicMachine compile(const MachineSpec& spec);

    const kernel::Alphabet& input() const { return input_; }
    std::size_t symbols() const { return symbols_; }
    std::size_t state_count() const { return outputs_.size(); }
    const StackPredicate& output(StateId s) const { return outputs_.at(s); }
    const StackAction& transition(StateId s, Letter a) const { return transitions_.at(s * input_.size() + a); }

    Configuration step(const Configuration& c, Letter a) const;
    bool accepts(const Configuration& c) const { return output(c.state).holds(c.stack); }
    /// Folds the transitions over `word` and evaluates the final output.
    bool run(const Configuration& start, std::span<const Letter> word) const;

private:
    kernel::Alphabet input_;
    std::size_t symbols_;
    std::vector<StackPredicate> outputs_;
    std::vector<StackAction> transitions_;
};

struct RunResult {
    std::set<Configuration> reached;
    bool accept = false;
};

/// A non-deterministic stack machine: every matching clause fires; a step
/// with no matching clause drops that branch.
class NondeterministicMachine {
public:
    explicit NondeterministicMachine(MachineSpec spec);

    const kernel::Alphabet& input() const { return spec_.input; }
    std::size_t symbols() const { return spec_.stack_symbols.size(); }
    const MachineSpec& spec() const { return spec_; }

    std::set<Configuration> step(const std::set<Configuration>& from, Letter a) const;
    bool accepts(const std::set<Configuration>& at) const;
    RunResult run(const Configuration& start, std::span<const Letter> word) const;

private:
    MachineSpec spec_;
    std::vector<StackPredicate> outputs_;
};

/// Stack monad with the pointwise lifting: outputs compose the predicate
/// with the action, successors are Kleisli composites.
struct StackEffect {
    using Value = StackAction;
    using Output = StackPredicate;
    using System = kernel::MooreSystem<Value, Output>;

    std::size_t symbols = 0;

    Value unit(StateId s) const { return StackAction::unit(s, symbols); }
    Output lifted_output(const System& m, const Value& v) const;
    Value lifted_step(const System& m, const Value& v, Letter a) const;
};

using DeterminizedMachine = kernel::Determinization<StackEffect>;

DeterminizedMachine determinize(const DeterministicMachine& m);

/// All words of length <= max_len accepted from `start`, length-lex ordered.
std::vector<LetterWord> language_probe(const DeterministicMachine& m, const Configuration& start, std::size_t max_len);
std::vector<LetterWord> language_probe(const NondeterministicMachine& m, const Configuration& start,
                                       std::size_t max_len);

}  // namespace lff::stack
