#include "lff/stack/machine.hpp"

#include <algorithm>

namespace lff::stack {

namespace {

bool has_prefix(std::span<const Symbol> stack, const StackWord& pattern)
{
    return pattern.size() <= stack.size() && std::equal(pattern.begin(), pattern.end(), stack.begin());
}

Configuration fire(const Clause& c, std::span<const Symbol> stack)
{
    Configuration out{c.target, c.replacement};
    out.stack.insert(out.stack.end(), stack.begin() + static_cast<std::ptrdiff_t>(c.pattern.size()), stack.end());
    return out;
}

std::string describe(const MachineSpec& spec, const StackWord& w)
{
    if (w.empty()) return "_";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out += '.';
        out += spec.stack_symbols.at(w[i]);
    }
    return out;
}

}  // namespace

std::optional<StateId> MachineSpec::find_state(std::string_view name) const
{
    auto it = std::find(states.begin(), states.end(), name);
    if (it == states.end()) return std::nullopt;
    return static_cast<StateId>(it - states.begin());
}

std::optional<Symbol> MachineSpec::find_symbol(std::string_view name) const
{
    auto it = std::find(stack_symbols.begin(), stack_symbols.end(), name);
    if (it == stack_symbols.end()) return std::nullopt;
    return static_cast<Symbol>(it - stack_symbols.begin());
}

void MachineSpec::validate() const
{
    const std::size_t n = states.size();
    const std::size_t m = stack_symbols.size();
    if (n == 0) throw Error("a stack machine needs at least one state");
    if (outputs.size() != n || clauses.size() != n * input.size()) throw Error("machine tables have the wrong shape");
    auto word_ok = [m](const StackWord& w) { return std::all_of(w.begin(), w.end(), [m](Symbol s) { return s < m; }); };
    for (const auto& patterns : outputs)
        for (const auto& p : patterns)
            if (!word_ok(p)) throw Error("undeclared stack symbol in output pattern");
    for (const auto& list : clauses)
        for (const auto& c : list)
            if (!word_ok(c.pattern) || !word_ok(c.replacement) || c.target >= n)
                throw Error("clause mentions an undeclared state or stack symbol");
}

StackPredicate prefix_predicate(std::size_t symbols, const std::vector<StackWord>& patterns)
{
    std::size_t k = 0;
    for (const auto& p : patterns) k = std::max(k, p.size());
    return StackPredicate::tabulate(symbols, k, [&](const StackWord& w) {
        return std::any_of(patterns.begin(), patterns.end(), [&](const StackWord& p) { return has_prefix(w, p); });
    });
}

DeterministicMachine::DeterministicMachine(kernel::Alphabet input, std::size_t symbols,
                                           std::vector<StackPredicate> outputs, std::vector<StackAction> transitions)
    : input_(std::move(input)), symbols_(symbols), outputs_(std::move(outputs)), transitions_(std::move(transitions))
{
    if (transitions_.size() != outputs_.size() * input_.size()) throw Error("transition table is not total");
    for (const auto& p : outputs_)
        if (p.symbols() != symbols_) throw Error("output predicate over a different stack alphabet");
    for (const auto& t : transitions_)
        if (t.symbols() != symbols_ || t.max_state() >= outputs_.size())
            throw Error("transition action over a different stack alphabet or state set");
}

DeterministicMachine DeterministicMachine::compile(const MachineSpec& spec)
{
    spec.validate();
    const std::size_t symbols = spec.stack_symbols.size();
    std::vector<StackPredicate> outputs;
    for (const auto& patterns : spec.outputs) outputs.push_back(prefix_predicate(symbols, patterns));
    std::vector<StackAction> transitions;
    for (StateId s = 0; s < spec.states.size(); ++s)
        for (Letter a = 0; a < spec.input.size(); ++a) {
            const auto& list = spec.clauses_for(s, a);
            std::size_t k = 0;
            for (const auto& c : list) k = std::max(k, c.pattern.size());
            transitions.push_back(StackAction::tabulate(symbols, k, [&](const StackWord& w) {
                for (const auto& c : list)
                    if (has_prefix(w, c.pattern)) return fire(c, w);
                throw NotTotal("no transition from state " + spec.states[s] + " on letter " + spec.input.name(a) +
                               " with stack " + describe(spec, w));
            }));
        }
    return DeterministicMachine(spec.input, symbols, std::move(outputs), std::move(transitions));
}

Configuration DeterministicMachine::step(const Configuration& c, Letter a) const
{
    return transition(c.state, a).apply(c.stack);
}

bool DeterministicMachine::run(const Configuration& start, std::span<const Letter> word) const
{
    kernel::check_word(word, input_.size());
    Configuration c = start;
    for (Letter a : word) c = step(c, a);
    return accepts(c);
}

NondeterministicMachine::NondeterministicMachine(MachineSpec spec) : spec_(std::move(spec))
{
    spec_.validate();
    for (const auto& patterns : spec_.outputs) outputs_.push_back(prefix_predicate(symbols(), patterns));
}

std::set<Configuration> NondeterministicMachine::step(const std::set<Configuration>& from, Letter a) const
{
    std::set<Configuration> next;
    for (const auto& c : from)
        for (const auto& clause : spec_.clauses_for(c.state, a))
            if (has_prefix(c.stack, clause.pattern)) next.insert(fire(clause, c.stack));
    return next;
}

bool NondeterministicMachine::accepts(const std::set<Configuration>& at) const
{
    return std::any_of(at.begin(), at.end(),
                       [this](const Configuration& c) { return outputs_.at(c.state).holds(c.stack); });
}

RunResult NondeterministicMachine::run(const Configuration& start, std::span<const Letter> word) const
{
    kernel::check_word(word, input().size());
    RunResult r;
    r.reached = {start};
    for (Letter a : word) r.reached = step(r.reached, a);
    r.accept = accepts(r.reached);
    return r;
}

StackEffect::Output StackEffect::lifted_output(const System& m, const Value& v) const
{
    std::size_t k = 0;
    for (StateId s = 0; s < m.state_count(); ++s) k = std::max(k, m.output(s).lookahead());
    return StackPredicate::tabulate(symbols, v.lookahead() + k, [&](const StackWord& w) {
        Configuration c = v.apply(w);
        return m.output(c.state).holds(c.stack);
    });
}

StackEffect::Value StackEffect::lifted_step(const System& m, const Value& v, Letter a) const
{
    return compose(v, [&](StateId r) -> const StackAction& { return m.transition(r, a); });
}

DeterminizedMachine determinize(const DeterministicMachine& m)
{
    std::vector<StackPredicate> outputs;
    std::vector<StackAction> transitions;
    for (StateId s = 0; s < m.state_count(); ++s) {
        outputs.push_back(m.output(s));
        for (Letter a = 0; a < m.input().size(); ++a) transitions.push_back(m.transition(s, a));
    }
    return DeterminizedMachine(kernel::MooreSystem<StackAction, StackPredicate>(m.input().size(), std::move(outputs),
                                                                                 std::move(transitions)),
                               StackEffect{m.symbols()});
}

namespace {

template <class State, class Advance, class Accepts>
std::vector<LetterWord> probe(std::size_t letters, State start, std::size_t max_len, Advance advance, Accepts accepts)
{
    std::vector<LetterWord> accepted;
    std::vector<std::pair<LetterWord, State>> level{{LetterWord{}, std::move(start)}};
    for (std::size_t len = 0; len <= max_len && !level.empty(); ++len) {
        std::vector<std::pair<LetterWord, State>> next;
        for (auto& [word, state] : level) {
            if (accepts(state)) accepted.push_back(word);
            if (len == max_len) continue;
            for (Letter a = 0; a < letters; ++a) {
                LetterWord longer = word;
                longer.push_back(a);
                next.emplace_back(std::move(longer), advance(state, a));
            }
        }
        level = std::move(next);
    }
    return accepted;
}

}  // namespace

std::vector<LetterWord> language_probe(const DeterministicMachine& m, const Configuration& start, std::size_t max_len)
{
    return probe(
        m.input().size(), start, max_len, [&m](const Configuration& c, Letter a) { return m.step(c, a); },
        [&m](const Configuration& c) { return m.accepts(c); });
}

std::vector<LetterWord> language_probe(const NondeterministicMachine& m, const Configuration& start,
                                       std::size_t max_len)
{
    return probe(
        m.input().size(), std::set<Configuration>{start}, max_len,
        [&m](const std::set<Configuration>& c, Letter a) { return m.step(c, a); },
        [&m](const std::set<Configuration>& c) { return m.accepts(c); });
}

}  // namespace lff::stack
