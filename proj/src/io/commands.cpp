#include "lff/io/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#include "lff/cfg/step.hpp"
#include "lff/io/document.hpp"
#include "lff/io/syntax.hpp"

namespace lff::cli {

namespace {

using io::Document;

class InputFailure : public Error {
public:
    using Error::Error;
};

Document load(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputFailure(path + ": cannot open file");
    std::ostringstream text;
    text << in.rdbuf();
    try {
        return io::parse_document(text.str());
    } catch (const io::DocumentError& e) {
        throw InputFailure(path + ":" + e.diagnostic().format());
    }
}

[[noreturn]] void unsupported(std::string_view command, const Document& d)
{
    throw InputFailure(std::string(command) + " is not available for " + std::string(io::kind_name(d)) +
                       " documents");
}

stack::Configuration start_configuration(const stack::MachineSpec& spec, const std::string& state,
                                         const std::string& stack_text)
{
    auto s = spec.find_state(state);
    if (!s) throw InputFailure("unknown state '" + state + "'");
    return {*s, kernel::Alphabet(spec.stack_symbols).parse_word(stack_text)};
}

struct Report {
    int code = Success;
    std::string text;
};

Report verdict(bool yes) { return {yes ? Success : Negative, yes ? "accept" : "reject"}; }

// ---- member / coeff -------------------------------------------------------

struct MemberArgs {
    std::string file, start, word, stack;
};

Report member(const MemberArgs& a)
{
    const Document d = load(a.file);
    if (const auto* n = std::get_if<nfa::Nfa>(&d)) {
        const auto sys = nfa::determinize(*n);
        const auto start = io::parse_state_set(*n, a.start);
        return verdict(kernel::behaviour_at(sys, start, n->alphabet().parse_word(a.word)));
    }
    if (const auto* g = std::get_if<cfg::WeightedGrammar>(&d)) {
        const auto start = io::parse_start(*g, a.start);
        return verdict(!cfg::coefficient(*g, start, g->terminals().parse_word(a.word)).is_zero());
    }
    if (const auto* m = std::get_if<io::MachineDocument>(&d)) {
        const auto c = start_configuration(m->spec, a.start, a.stack);
        const auto word = m->spec.input.parse_word(a.word);
        if (!m->deterministic) return verdict(stack::NondeterministicMachine(m->spec).run(c, word).accept);
        const auto sys = stack::determinize(stack::DeterministicMachine::compile(m->spec));
        const auto action = kernel::derive(sys, sys.unit(c.state), word);
        return verdict(sys.output(action).holds(c.stack));
    }
    unsupported("member", d);
}

struct CoeffArgs {
    std::string file, start, word;
};

Report coeff(const CoeffArgs& a)
{
    const Document d = load(a.file);
    if (const auto* g = std::get_if<cfg::WeightedGrammar>(&d)) {
        const auto start = io::parse_start(*g, a.start);
        return {Success, cfg::coefficient(*g, start, g->terminals().parse_word(a.word)).str()};
    }
    if (const auto* n = std::get_if<nfa::Nfa>(&d)) {
        const auto start = io::parse_state_set(*n, a.start);
        return {Success, nfa::accepts(*n, start, n->alphabet().parse_word(a.word)) ? "1" : "0"};
    }
    unsupported("coeff", d);
}

// ---- equiv ----------------------------------------------------------------

struct EquivArgs {
    std::string file_a, file_b, start_a, start_b;
    std::size_t depth = 8;
    std::size_t budget = 10000;
    bool depth_given = false;
    bool exact = false;
};

/// Thrown by the capped systems below when a derivative outgrows the budget.
struct SizeBudget {
    std::string reason;
};

/// A determinized machine whose derivatives may not need more table cells
/// than the budget allows. Stack lookahead can grow with every step, so
/// the pair budget alone does not bound the work.
class CappedMachine {
public:
    using Value = stack::StackAction;
    using Output = stack::StackPredicate;

    CappedMachine(stack::DeterminizedMachine sys, std::size_t budget) : sys_(std::move(sys)), budget_(budget) {}

    std::size_t alphabet_size() const { return sys_.alphabet_size(); }
    Output output(const Value& v) const { return sys_.output(v); }
    Value step(const Value& v, kernel::Letter a) const
    {
        Value next = sys_.step(v, a);
        std::size_t cells = 1;
        for (std::size_t i = 0; i < next.lookahead() && cells <= budget_; ++i) cells *= std::max<std::size_t>(next.symbols(), 1);
        if (cells > budget_) throw SizeBudget{"at stack lookahead " + std::to_string(next.lookahead())};
        return next;
    }
    Value unit(kernel::StateId s) const { return sys_.unit(s); }

private:
    stack::DeterminizedMachine sys_;
    std::size_t budget_;
};

/// A grammar system that gives up once the derivatives it has produced hold
/// more than `limit` generator occurrences in total.
class CappedGrammar {
public:
    using Value = algebra::Polynomial;
    using Output = algebra::Element;

    CappedGrammar(const cfg::WeightedGrammar& g, std::size_t limit) : sys_(g), limit_(limit) {}

    std::size_t alphabet_size() const { return sys_.alphabet_size(); }
    Output output(const Value& v) const { return sys_.output(v); }
    Value step(const Value& v, kernel::Letter a) const
    {
        Value next = sys_.step(v, a);
        for (const auto& [word, coef] : next.terms()) used_ += word.size() + 1;
        if (used_ > limit_) throw SizeBudget{"after " + std::to_string(used_) + " symbols of derivatives"};
        return next;
    }

private:
    cfg::GrammarSystem sys_;
    std::size_t limit_;
    mutable std::size_t used_ = 0;
};

// Derivative size allowed per unit of --budget when searching grammars.
constexpr std::size_t symbols_per_state = 100;

template <class L, class R>
Report compare(const L& lhs, const typename L::Value& s1, const R& rhs, const typename R::Value& s2,
               const EquivArgs& a, bool exact, const kernel::Alphabet& alphabet)
{
    auto distinguished = [&](const kernel::Counterexample& c) {
        return Report{Negative, "distinguished by " + alphabet.format_word(c.word)};
    };
    if (!exact) {
        const auto v = kernel::equiv_bounded(lhs, s1, rhs, s2, a.depth);
        if (const auto* c = std::get_if<kernel::Counterexample>(&v)) return distinguished(*c);
        return {Success, "equivalent up to depth " + std::to_string(a.depth)};
    }
    kernel::BisimVerdict<typename L::Value, typename R::Value> v = kernel::BudgetExceeded{};
    try {
        v = kernel::bisim_decide(lhs, s1, rhs, s2, a.budget);
    } catch (const SizeBudget& b) {
        return {BudgetExceeded, "budget exceeded " + b.reason};
    }
    if (const auto* c = std::get_if<kernel::Counterexample>(&v)) return distinguished(*c);
    if (const auto* b = std::get_if<kernel::BudgetExceeded>(&v))
        return {BudgetExceeded, "budget exceeded after " + std::to_string(b->explored) + " states"};
    return {Success, "equivalent (bisimulation of size " + std::to_string(std::get<0>(v).pairs.size()) + ")"};
}

void require_alphabets(const kernel::Alphabet& a, const kernel::Alphabet& b)
{
    if (!(a == b)) throw InputFailure("the documents use different alphabets");
}

Report equiv(const EquivArgs& a)
{
    const Document da = load(a.file_a);
    const Document db = load(a.file_b);
    if (da.index() != db.index())
        throw InputFailure("cannot compare " + std::string(io::kind_name(da)) + " and " +
                           std::string(io::kind_name(db)) + " documents");
    if (const auto* n1 = std::get_if<nfa::Nfa>(&da)) {
        const auto& n2 = std::get<nfa::Nfa>(db);
        require_alphabets(n1->alphabet(), n2.alphabet());
        const auto s1 = io::parse_state_set(*n1, a.start_a);
        const auto s2 = io::parse_state_set(n2, a.start_b);
        return compare(nfa::determinize(*n1), s1, nfa::determinize(n2), s2, a, !a.depth_given, n1->alphabet());
    }
    if (const auto* g1 = std::get_if<cfg::WeightedGrammar>(&da)) {
        const auto& g2 = std::get<cfg::WeightedGrammar>(db);
        require_alphabets(g1->terminals(), g2.terminals());
        if (g1->semiring() != g2.semiring()) throw InputFailure("the grammars use different semirings");
        const auto s1 = io::parse_start(*g1, a.start_a);
        const auto s2 = io::parse_start(g2, a.start_b);
        if (!a.exact) return compare(cfg::GrammarSystem(*g1), s1, cfg::GrammarSystem(g2), s2, a, false, g1->terminals());
        const std::size_t limit = a.budget > std::numeric_limits<std::size_t>::max() / symbols_per_state
                                      ? std::numeric_limits<std::size_t>::max()
                                      : a.budget * symbols_per_state;
        const CappedGrammar c1(*g1, limit);
        const CappedGrammar c2(g2, limit);
        return compare(c1, s1, c2, s2, a, true, g1->terminals());
    }
    if (const auto* m1 = std::get_if<io::MachineDocument>(&da)) {
        const auto& m2 = std::get<io::MachineDocument>(db);
        if (!m1->deterministic || !m2.deterministic)
            throw InputFailure("equiv needs deterministic stack machines");
        require_alphabets(m1->spec.input, m2.spec.input);
        if (m1->spec.stack_symbols != m2.spec.stack_symbols)
            throw InputFailure("the machines use different stack alphabets");
        const CappedMachine sys1(stack::determinize(stack::DeterministicMachine::compile(m1->spec)),
                                 a.exact ? a.budget : std::numeric_limits<std::size_t>::max());
        const CappedMachine sys2(stack::determinize(stack::DeterministicMachine::compile(m2.spec)),
                                 a.exact ? a.budget : std::numeric_limits<std::size_t>::max());
        auto state = [](const stack::MachineSpec& spec, const std::string& name) {
            auto s = spec.find_state(name);
            if (!s) throw InputFailure("unknown state '" + name + "'");
            return *s;
        };
        return compare(sys1, sys1.unit(state(m1->spec, a.start_a)), sys2, sys2.unit(state(m2.spec, a.start_b)), a,
                       a.exact, m1->spec.input);
    }
    const auto& r1 = std::get<rps::Scheme>(da);
    const auto& r2 = std::get<rps::Scheme>(db);
    if (a.exact) throw InputFailure("schemes can only be compared up to a depth");
    const auto v = rps::prefix_equal(r1, io::parse_root(r1, a.start_a), r2, io::parse_root(r2, a.start_b), a.depth);
    if (const auto* p = std::get_if<rps::DifferingPath>(&v)) {
        std::string path;
        for (std::size_t i : p->path) path += (path.empty() ? "" : ".") + std::to_string(i);
        return {Negative, "distinguished at path " + (path.empty() ? std::string("ε") : path)};
    }
    return {Success, "equivalent up to depth " + std::to_string(a.depth)};
}

// ---- unfold ---------------------------------------------------------------

struct UnfoldArgs {
    std::string file, root;
    std::size_t depth = 8;
    bool census = false;
};

Report unfold(const UnfoldArgs& a)
{
    const Document d = load(a.file);
    const auto* s = std::get_if<rps::Scheme>(&d);
    if (!s) unsupported("unfold", d);
    const auto prefix = rps::unfold(*s, io::parse_root(*s, a.root), a.depth);
    std::string text = rps::to_string(prefix);
    if (a.census) text += "\ncomplete subtrees: " + std::to_string(rps::subtree_census(prefix));
    return {Success, text};
}

// ---- enumerate ------------------------------------------------------------

struct EnumerateArgs {
    std::string file, start, stack;
    std::size_t max_len = 8;
};

/// Length-lex walk over words up to `max_len`; `dead` prunes values that
/// cannot lead to a non-zero output.
template <class S, class Emit, class Dead>
void walk(const S& sys, typename S::Value start, std::size_t max_len, Emit emit, Dead dead)
{
    std::vector<std::pair<typename S::Value, kernel::LetterWord>> level{{std::move(start), {}}};
    for (std::size_t n = 0; n <= max_len && !level.empty(); ++n) {
        std::vector<std::pair<typename S::Value, kernel::LetterWord>> next;
        for (auto& [v, w] : level) {
            emit(w, sys.output(v));
            if (n == max_len) continue;
            for (kernel::Letter a = 0; a < sys.alphabet_size(); ++a) {
                auto d = sys.step(v, a);
                if (dead(d)) continue;
                kernel::LetterWord longer = w;
                longer.push_back(a);
                next.emplace_back(std::move(d), std::move(longer));
            }
        }
        level = std::move(next);
    }
}

Report enumerate(const EnumerateArgs& a)
{
    const Document d = load(a.file);
    std::string text;
    auto line = [&](const std::string& s) {
        if (!text.empty()) text += '\n';
        text += s;
    };
    if (const auto* n = std::get_if<nfa::Nfa>(&d)) {
        const auto sys = nfa::determinize(*n);
        walk(sys, io::parse_state_set(*n, a.start), a.max_len,
             [&](const kernel::LetterWord& w, bool accept) {
                 if (accept) line(n->alphabet().format_word(w));
             },
             [](const nfa::StateSet& s) { return s.empty(); });
        return {Success, text};
    }
    if (const auto* g = std::get_if<cfg::WeightedGrammar>(&d)) {
        const cfg::GrammarSystem sys(*g);
        const bool weighted = g->semiring() != algebra::Semiring::boolean();
        walk(sys, io::parse_start(*g, a.start), a.max_len,
             [&](const kernel::LetterWord& w, const algebra::Element& c) {
                 if (c.is_zero()) return;
                 line(g->terminals().format_word(w) + (weighted ? ": " + c.str() : ""));
             },
             [](const algebra::Polynomial& p) { return p.is_zero(); });
        return {Success, text};
    }
    if (const auto* m = std::get_if<io::MachineDocument>(&d)) {
        const auto c = start_configuration(m->spec, a.start, a.stack);
        const auto words = m->deterministic
                               ? stack::language_probe(stack::DeterministicMachine::compile(m->spec), c, a.max_len)
                               : stack::language_probe(stack::NondeterministicMachine(m->spec), c, a.max_len);
        for (const auto& w : words) line(m->spec.input.format_word(w));
        return {Success, text};
    }
    unsupported("enumerate", d);
}

Report print(const std::string& file)
{
    std::string text = io::print_document(load(file));
    text.pop_back();
    return {Success, text};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Behaviours of finite systems with side effects", "lff"};
    app.require_subcommand(1);
    std::optional<Report> report;
    std::function<Report()> action;

    MemberArgs ma;
    auto* m = app.add_subcommand("member", "Decide membership of a word");
    m->add_option("file", ma.file, "Document")->required();
    m->add_option("--start", ma.start, "Start states, polynomial or machine state")->required();
    m->add_option("--word", ma.word, "Input word ('_' for the empty word)")->required();
    m->add_option("--stack", ma.stack, "Initial stack, top first")->default_str("_");
    m->callback([&] { action = [&] { return member(ma); }; });

    CoeffArgs ca;
    auto* c = app.add_subcommand("coeff", "Coefficient of a word in a grammar's series");
    c->add_option("file", ca.file, "Document")->required();
    c->add_option("--start", ca.start, "Start polynomial")->required();
    c->add_option("--word", ca.word, "Input word")->required();
    c->callback([&] { action = [&] { return coeff(ca); }; });

    EquivArgs ea;
    auto* e = app.add_subcommand("equiv", "Compare two behaviours");
    e->add_option("file_a", ea.file_a, "First document")->required();
    e->add_option("file_b", ea.file_b, "Second document")->required();
    e->add_option("--start-a", ea.start_a, "Start in the first document")->required();
    e->add_option("--start-b", ea.start_b, "Start in the second document")->required();
    auto* depth = e->add_option("--depth", ea.depth, "Compare words up to this length")->capture_default_str();
    auto* exact = e->add_flag("--exact", ea.exact, "Search for a bisimulation");
    exact->excludes(depth);
    e->add_option("--budget", ea.budget, "Largest bisimulation searched")->capture_default_str();
    e->callback([&] {
        ea.depth_given = depth->count() > 0;
        action = [&] { return equiv(ea); };
    });

    UnfoldArgs ua;
    auto* u = app.add_subcommand("unfold", "Unfold a scheme into a finite tree prefix");
    u->add_option("file", ua.file, "Document")->required();
    u->add_option("--root", ua.root, "Root term")->required();
    u->add_option("--depth", ua.depth, "Unfolding depth")->capture_default_str();
    u->add_flag("--census", ua.census, "Also count distinct complete subtrees");
    u->callback([&] { action = [&] { return unfold(ua); }; });

    EnumerateArgs na;
    auto* n = app.add_subcommand("enumerate", "List the behaviour on all words up to a length");
    n->add_option("file", na.file, "Document")->required();
    n->add_option("--start", na.start, "Start states, polynomial or machine state")->required();
    n->add_option("--stack", na.stack, "Initial stack, top first")->default_str("_");
    n->add_option("--max-len", na.max_len, "Longest word listed")->capture_default_str();
    n->callback([&] { action = [&] { return enumerate(na); }; });

    std::string pfile;
    auto* p = app.add_subcommand("print", "Print a document in canonical form");
    p->add_option("file", pfile, "Document")->required();
    p->callback([&] { action = [&] { return print(pfile); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex, out, err);
        return code == 0 ? Success : InputError;
    }
    if (ma.stack.empty()) ma.stack = "_";
    if (na.stack.empty()) na.stack = "_";

    try {
        report = action();
    } catch (const Error& ex) {
        err << "error: " << ex.what() << '\n';
        return InputError;
    }
    out << report->text;
    if (!report->text.empty()) out << '\n';
    return report->code;
}

}  // namespace lff::cli
