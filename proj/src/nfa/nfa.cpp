#include "lff/nfa/nfa.hpp"

#include <algorithm>
#include <limits>

namespace lff::nfa {

StateSet::StateSet(std::vector<StateId> ids) : ids_(std::move(ids))
{
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool StateSet::contains(StateId s) const { return std::binary_search(ids_.begin(), ids_.end(), s); }

StateSet StateSet::join(const StateSet& other) const
{
    StateSet out;
    out.ids_.reserve(ids_.size() + other.ids_.size());
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(), std::back_inserter(out.ids_));
    return out;
}

Nfa::Nfa(kernel::Alphabet alphabet, std::vector<std::string> states, StateSet accepting,
         std::vector<StateSet> transitions)
    : alphabet_(std::move(alphabet)), states_(std::move(states)), accepting_(std::move(accepting)),
      transitions_(std::move(transitions))
{
    const std::size_t n = states_.size();
    if (transitions_.size() != n * alphabet_.size()) throw Error("NFA transition table is not total");
    auto in_range = [n](const StateSet& set) { return set.empty() || set.ids().back() < n; };
    if (!in_range(accepting_)) throw Error("accepting state out of range");
    for (const auto& t : transitions_)
        if (!in_range(t)) throw Error("transition target out of range");
}

std::optional<StateId> Nfa::find_state(std::string_view name) const
{
    auto it = std::find(states_.begin(), states_.end(), name);
    if (it == states_.end()) return std::nullopt;
    return static_cast<StateId>(it - states_.begin());
}

void Nfa::check_states(const StateSet& set) const
{
    if (!set.empty() && set.ids().back() >= states_.size()) throw Error("state set mentions an unknown state");
}

PowersetEffect::Output PowersetEffect::lifted_output(const System& m, const Value& v) const
{
    return std::any_of(v.begin(), v.end(), [&](StateId s) { return m.output(s); });
}

PowersetEffect::Value PowersetEffect::lifted_step(const System& m, const Value& v, Letter a) const
{
    std::vector<StateId> next;
    for (StateId s : v) {
        const auto& t = m.transition(s, a).ids();
        next.insert(next.end(), t.begin(), t.end());
    }
    return StateSet(std::move(next));
}

DeterminizedNfa determinize(const Nfa& n)
{
    std::vector<bool> outputs(n.state_count());
    std::vector<StateSet> transitions;
    transitions.reserve(n.state_count() * n.alphabet().size());
    for (StateId s = 0; s < n.state_count(); ++s) {
        outputs[s] = n.is_accepting(s);
        for (Letter a = 0; a < n.alphabet().size(); ++a) transitions.push_back(n.transition(s, a));
    }
    return DeterminizedNfa(kernel::MooreSystem<StateSet, bool>(n.alphabet().size(), outputs, transitions));
}

bool accepts(const Nfa& n, const StateSet& start, std::span<const Letter> word)
{
    n.check_states(start);
    return kernel::behaviour_at(determinize(n), start, word);
}

EquivVerdict nfa_equiv(const Nfa& n1, const StateSet& s1, const Nfa& n2, const StateSet& s2)
{
    if (n1.alphabet() != n2.alphabet()) throw kernel::AlphabetError("alphabet mismatch");
    n1.check_states(s1);
    n2.check_states(s2);
    const std::size_t bits = n1.state_count() + n2.state_count();
    const std::size_t budget =
        bits >= std::numeric_limits<std::size_t>::digits ? std::numeric_limits<std::size_t>::max()
                                                         : std::size_t{1} << bits;
    auto verdict = kernel::bisim_decide(determinize(n1), s1, determinize(n2), s2, budget);
    if (auto* rel = std::get_if<kernel::Bisimulation<StateSet, StateSet>>(&verdict)) return std::move(*rel);
    if (auto* cex = std::get_if<kernel::Counterexample>(&verdict)) return std::move(*cex);
    throw Error("subset-pair bound exceeded");  // unreachable: at most 2^|X1| * 2^|X2| pairs exist
}

}  // namespace lff::nfa
