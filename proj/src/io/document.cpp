#include "lff/io/document.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "lff/io/syntax.hpp"

namespace lff::io {

std::string Diagnostic::format() const
{
    return std::to_string(line) + ":" + std::to_string(column) + ": " +
           (kind == Kind::Syntax ? "syntax error: " : "semantic error: ") + message;
}

DocumentError::DocumentError(Diagnostic d) : Error(d.format()), diagnostic_(std::move(d)) {}

namespace {

std::size_t code_points(std::string_view s)
{
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

struct Line {
    std::size_t number = 0;
    std::string_view raw;
    std::string_view key;
    std::string_view value;
    std::size_t value_at = 0;  // byte offset of value in raw

    std::size_t offset_of(std::string_view part) const
    {
        return static_cast<std::size_t>(part.data() - raw.data());
    }
};

[[noreturn]] void fail(Diagnostic::Kind kind, const Line& line, std::size_t offset, const std::string& message)
{
    const std::size_t column = code_points(line.raw.substr(0, std::min(offset, line.raw.size()))) + 1;
    throw DocumentError(Diagnostic{kind, line.number, column, message});
}

[[noreturn]] void syntax(const Line& line, std::string_view at, const std::string& message)
{
    fail(Diagnostic::Kind::Syntax, line, line.offset_of(at), message);
}

[[noreturn]] void semantic(const Line& line, std::string_view at, const std::string& message)
{
    fail(Diagnostic::Kind::Semantic, line, line.offset_of(at), message);
}

[[noreturn]] void semantic(const Line& line, const std::string& message)
{
    fail(Diagnostic::Kind::Semantic, line, line.value_at, message);
}

/// Rethrows a fragment-level SyntaxError with document coordinates.
template <class F>
auto within(const Line& line, std::string_view fragment, F&& f)
{
    try {
        return f();
    } catch (const SyntaxError& e) {
        fail(Diagnostic::Kind::Syntax, line, line.offset_of(fragment) + e.offset(), e.what());
    }
}

struct Body {
    std::string_view kind;
    Line header;
    std::vector<Line> lines;

    const Line* unique(std::string_view key) const
    {
        const Line* found = nullptr;
        for (const auto& l : lines) {
            if (l.key != key) continue;
            if (found) semantic(l, l.key, "duplicate '" + std::string(key) + "'");
            found = &l;
        }
        return found;
    }

    const Line& required(std::string_view key) const
    {
        const Line* l = unique(key);
        if (!l) semantic(header, header.raw, "missing '" + std::string(key) + ":' line");
        return *l;
    }

    std::vector<const Line*> all(std::string_view key) const
    {
        std::vector<const Line*> out;
        for (const auto& l : lines)
            if (l.key == key) out.push_back(&l);
        return out;
    }

    void allow_keys(std::initializer_list<std::string_view> keys) const
    {
        for (const auto& l : lines)
            if (std::find(keys.begin(), keys.end(), l.key) == keys.end())
                syntax(l, l.key, "unknown key '" + std::string(l.key) + "' in " + std::string(kind) + " document");
    }
};

Body split_document(std::string_view text)
{
    Body body;
    bool have_header = false;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        Line line;
        line.number = ++number;
        line.raw = text.substr(start, end - start);
        if (!line.raw.empty() && line.raw.back() == '\r') line.raw.remove_suffix(1);
        start = end + 1;
        const std::string_view content = trim(line.raw);
        if (content.empty() || content.front() == '%') continue;
        if (!have_header) {
            if (content.substr(0, 6) != "#kind ") syntax(line, content, "expected '#kind <nfa|grammar|stackmachine|scheme>'");
            body.kind = trim(content.substr(6));
            body.header = line;
            if (body.kind != "nfa" && body.kind != "grammar" && body.kind != "stackmachine" && body.kind != "scheme")
                syntax(line, body.kind, "unknown document kind '" + std::string(body.kind) + "'");
            have_header = true;
            continue;
        }
        const std::size_t colon = content.find(':');
        if (colon == std::string_view::npos) syntax(line, content, "expected 'key: value'");
        line.key = trim(content.substr(0, colon));
        line.value = trim(content.substr(colon + 1));
        line.value_at = line.value.empty() ? line.offset_of(content) + colon + 1 : line.offset_of(line.value);
        if (line.key.empty()) syntax(line, content, "missing key");
        body.lines.push_back(line);
    }
    if (!have_header) {
        throw DocumentError(Diagnostic{Diagnostic::Kind::Syntax, std::max<std::size_t>(number, 1), 1, "missing '#kind' header"});
    }
    return body;
}

/// Splits "lhs -> rhs" on the arrow.
std::pair<std::string_view, std::string_view> arrow(const Line& line)
{
    const std::size_t at = line.value.find("->");
    if (at == std::string_view::npos) syntax(line, line.value, "expected '->'");
    return {trim(line.value.substr(0, at)), trim(line.value.substr(at + 2))};
}

std::vector<std::string> names(const Line& line)
{
    std::vector<std::string> out;
    std::set<std::string_view> seen;
    for (auto n : split_blanks(line.value)) {
        if (!seen.insert(n).second) semantic(line, n, "duplicate name '" + std::string(n) + "'");
        out.emplace_back(n);
    }
    return out;
}

template <class Find>
std::size_t lookup(const Line& line, std::string_view name, Find find, const char* what)
{
    if (auto i = find(name)) return *i;
    semantic(line, name, std::string("undeclared ") + what + " '" + std::string(name) + "'");
}

std::string join(const std::vector<std::string>& items, std::string_view sep = " ")
{
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += sep;
        out += items[i];
    }
    return out;
}

// ---- nfa ------------------------------------------------------------------

nfa::Nfa parse_nfa(const Body& body)
{
    body.allow_keys({"alphabet", "states", "accepting", "trans"});
    const Line& alphabet_line = body.required("alphabet");
    const Line& states_line = body.required("states");
    const kernel::Alphabet alphabet(names(alphabet_line));
    const std::vector<std::string> states = names(states_line);
    auto find_state = [&](std::string_view n) -> std::optional<std::size_t> {
        auto it = std::find(states.begin(), states.end(), n);
        if (it == states.end()) return std::nullopt;
        return static_cast<std::size_t>(it - states.begin());
    };
    auto find_letter = [&](std::string_view n) { return alphabet.find(n); };

    std::vector<kernel::StateId> accepting;
    if (const Line* l = body.unique("accepting"))
        for (auto n : split_blanks(l->value)) accepting.push_back(lookup(*l, n, find_state, "state"));

    std::vector<std::optional<nfa::StateSet>> table(states.size() * alphabet.size());
    for (const Line* l : body.all("trans")) {
        auto [lhs, rhs] = arrow(*l);
        const auto parts = split_blanks(lhs);
        if (parts.size() != 2) syntax(*l, lhs, "expected '<state> <letter> -> <states>'");
        const std::size_t s = lookup(*l, parts[0], find_state, "state");
        const std::size_t a = lookup(*l, parts[1], find_letter, "letter");
        std::vector<kernel::StateId> targets;
        for (auto n : split_blanks(rhs)) targets.push_back(lookup(*l, n, find_state, "state"));
        auto& slot = table[s * alphabet.size() + a];
        if (slot) semantic(*l, lhs, "duplicate transition for state " + states[s] + " on " + alphabet.name(a));
        slot = nfa::StateSet(std::move(targets));
    }
    std::vector<nfa::StateSet> transitions;
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (!table[i])
            semantic(body.header, body.header.raw,
                     "missing transition for state " + states[i / alphabet.size()] + " on " +
                         alphabet.name(i % alphabet.size()));
        transitions.push_back(*table[i]);
    }
    return nfa::Nfa(alphabet, states, nfa::StateSet(std::move(accepting)), std::move(transitions));
}

std::string print_nfa(const nfa::Nfa& n)
{
    auto set_names = [&](const nfa::StateSet& set) {
        std::vector<std::string> out;
        for (auto s : set) out.push_back(n.states()[s]);
        return join(out);
    };
    auto field = [](std::string_view key, const std::string& value) {
        return std::string(key) + ":" + (value.empty() ? "" : " " + value) + "\n";
    };
    std::string out = "#kind nfa\n";
    out += field("alphabet", join(n.alphabet().names()));
    out += field("states", join(n.states()));
    out += field("accepting", set_names(n.accepting()));
    for (std::size_t s = 0; s < n.state_count(); ++s)
        for (kernel::Letter a = 0; a < n.alphabet().size(); ++a) {
            const std::string targets = set_names(n.transition(s, a));
            out += "trans: " + n.states()[s] + " " + n.alphabet().name(a) + " ->" +
                   (targets.empty() ? "" : " " + targets) + "\n";
        }
    return out;
}

// ---- grammar --------------------------------------------------------------

class GrammarReader {
public:
    explicit GrammarReader(const Body& body) : body_(body)
    {
        body.allow_keys({"semiring", "terminals", "nonterminals", "output", "rule", "prod"});
        const Line& s = body.required("semiring");
        auto semiring = algebra::Semiring::from_name(s.value);
        if (!semiring) syntax(s, s.value, "unknown semiring '" + std::string(s.value) + "' (expected B, N or Z)");
        semiring_ = *semiring;
        const Line& t = body.required("terminals");
        for (auto n : split_blanks(t.value))
            if (n.find('\'') != std::string_view::npos) syntax(t, n, "terminal names may not contain quotes");
        terminals_ = kernel::Alphabet(names(t));
        const Line& x = body.required("nonterminals");
        nonterminals_ = names(x);
        for (const auto& n : nonterminals_)
            if (!is_identifier(n)) syntax(x, x.value, "'" + n + "' is not a valid nonterminal name");
    }

    cfg::WeightedGrammar read()
    {
        const std::size_t letters = terminals_.size();
        std::vector<algebra::Element> outputs(nonterminals_.size(), 0);
        std::vector<bool> output_seen(nonterminals_.size(), false);
        std::vector<algebra::Polynomial> rules(nonterminals_.size() * letters, algebra::Polynomial(semiring_));
        std::vector<bool> rule_seen(rules.size(), false);

        for (const Line* l : body_.all("output")) {
            const auto parts = split_blanks(l->value);
            if (parts.size() != 2) syntax(*l, l->value, "expected '<nonterminal> <weight>'");
            const std::size_t x = nonterminal(*l, parts[0]);
            if (output_seen[x]) semantic(*l, parts[0], "duplicate output for " + nonterminals_[x]);
            output_seen[x] = true;
            const auto c = within(*l, parts[1], [&] { return parse_polynomial(parts[1], semiring_); });
            if (!c.variables_only() || c.size() > 1 || (c.size() == 1 && !c.terms().begin()->first.empty()))
                syntax(*l, parts[1], "expected a scalar weight");
            outputs[x] = semiring_.add(outputs[x], c.coefficient({}));
        }
        for (const Line* l : body_.all("rule")) {
            auto [lhs, rhs] = arrow(*l);
            const auto parts = split_blanks(lhs);
            if (parts.size() != 2) syntax(*l, lhs, "expected '<nonterminal> '<terminal>' -> <polynomial>'");
            const std::size_t x = nonterminal(*l, parts[0]);
            const std::size_t a = quoted_terminal(*l, parts[1]);
            if (rule_seen[x * letters + a])
                semantic(*l, lhs, "duplicate rule for " + nonterminals_[x] + " on '" + terminals_.name(a) + "'");
            rule_seen[x * letters + a] = true;
            auto& slot = rules[x * letters + a];
            slot = slot + polynomial(*l, rhs);
        }
        for (const Line* l : body_.all("prod")) {
            auto [lhs, rhs] = arrow(*l);
            const std::size_t x = nonterminal(*l, lhs);
            const algebra::Polynomial alternatives = polynomial(*l, rhs);
            for (const auto& [word, coef] : alternatives.terms()) {
                if (word.empty()) {
                    outputs[x] = semiring_.add(outputs[x], coef);
                    continue;
                }
                if (!word.front().is_terminal())
                    semantic(*l, rhs,
                             "alternative " + format_word(word) + " of " + nonterminals_[x] +
                                 " neither is empty nor starts with a terminal");
                const std::size_t a = *terminals_.find(word.front().id);
                algebra::Word rest(word.begin() + 1, word.end());
                auto& slot = rules[x * letters + a];
                slot = slot + algebra::Polynomial::monomial(semiring_, coef, std::move(rest));
            }
        }
        try {
            return cfg::WeightedGrammar(semiring_, nonterminals_, terminals_, std::move(outputs), std::move(rules));
        } catch (const Error& e) {
            semantic(body_.header, body_.header.raw, e.what());
        }
    }

private:
    std::size_t nonterminal(const Line& l, std::string_view name) const
    {
        return lookup(l, name, [&](std::string_view n) -> std::optional<std::size_t> {
            auto it = std::find(nonterminals_.begin(), nonterminals_.end(), n);
            if (it == nonterminals_.end()) return std::nullopt;
            return static_cast<std::size_t>(it - nonterminals_.begin());
        }, "nonterminal");
    }

    std::size_t quoted_terminal(const Line& l, std::string_view text) const
    {
        if (text.size() < 3 || text.front() != '\'' || text.back() != '\'')
            syntax(l, text, "expected a quoted terminal");
        return lookup(l, text.substr(1, text.size() - 2), [&](std::string_view n) { return terminals_.find(n); },
                      "terminal");
    }

    algebra::Polynomial polynomial(const Line& l, std::string_view text) const
    {
        auto p = within(l, text, [&] { return parse_polynomial(text, semiring_); });
        for (const auto& [word, coef] : p.terms())
            for (const auto& g : word) {
                if (g.is_variable()) nonterminal(l, g.id);
                else if (!terminals_.find(g.id)) semantic(l, text, "undeclared terminal '" + g.id + "'");
            }
        return p;
    }

    const Body& body_;
    algebra::Semiring semiring_ = algebra::Semiring::boolean();
    kernel::Alphabet terminals_;
    std::vector<std::string> nonterminals_;
};

std::string print_grammar(const cfg::WeightedGrammar& g)
{
    std::string out = "#kind grammar\n";
    out += "semiring: " + std::string(g.semiring().name()) + "\n";
    out += "terminals: " + join(g.terminals().names()) + "\n";
    out += "nonterminals: " + join(g.nonterminals()) + "\n";
    for (std::size_t x = 0; x < g.nonterminals().size(); ++x)
        out += "output: " + g.nonterminals()[x] + " " + g.output(x).str() + "\n";
    for (std::size_t x = 0; x < g.nonterminals().size(); ++x)
        for (kernel::Letter a = 0; a < g.terminals().size(); ++a)
            out += "rule: " + g.nonterminals()[x] + " '" + g.terminals().name(a) + "' -> " +
                   format_polynomial(g.rule(x, a)) + "\n";
    return out;
}

// ---- stack machines -------------------------------------------------------

MachineDocument parse_machine(const Body& body)
{
    body.allow_keys({"mode", "alphabet", "stack", "states", "output", "trans"});
    MachineDocument doc;
    const Line& mode = body.required("mode");
    if (mode.value == "deterministic") doc.deterministic = true;
    else if (mode.value == "nondeterministic") doc.deterministic = false;
    else syntax(mode, mode.value, "expected 'deterministic' or 'nondeterministic'");

    auto& spec = doc.spec;
    spec.input = kernel::Alphabet(names(body.required("alphabet")));
    const Line& stack_line = body.required("stack");
    spec.stack_symbols = names(stack_line);
    for (const auto& s : spec.stack_symbols)
        if (s == "_" || s == "ε" || s.find('.') != std::string::npos)
            syntax(stack_line, stack_line.value, "'" + s + "' is not a valid stack symbol");
    const kernel::Alphabet stack_alphabet(spec.stack_symbols);
    spec.states = names(body.required("states"));
    spec.outputs.assign(spec.states.size(), {});
    spec.clauses.assign(spec.states.size() * spec.input.size(), {});

    auto state = [&](const Line& l, std::string_view n) {
        return lookup(l, n, [&](std::string_view m) { return spec.find_state(m); }, "state");
    };
    auto stack_word = [&](const Line& l, std::string_view text) {
        try {
            return stack_alphabet.parse_word(text);
        } catch (const kernel::AlphabetError& e) {
            semantic(l, text, e.what());
        }
    };

    for (const Line* l : body.all("output")) {
        const auto parts = split_blanks(l->value);
        if (parts.size() != 2) syntax(*l, l->value, "expected '<state> <stack pattern>'");
        spec.outputs[state(*l, parts[0])].push_back(stack_word(*l, parts[1]));
    }
    for (const Line* l : body.all("trans")) {
        auto [lhs, rhs] = arrow(*l);
        const auto left = split_blanks(lhs);
        const auto right = split_blanks(rhs);
        if (left.size() != 3 || right.empty() || right.size() > 2)
            syntax(*l, l->value, "expected '<state> <letter> <pattern> -> <state> <replacement>'");
        const std::size_t s = state(*l, left[0]);
        const std::size_t a =
            lookup(*l, left[1], [&](std::string_view n) { return spec.input.find(n); }, "letter");
        stack::Clause clause{stack_word(*l, left[2]), state(*l, right[0]),
                             right.size() == 2 ? stack_word(*l, right[1]) : stack::StackWord{}};
        spec.clauses[s * spec.input.size() + a].push_back(std::move(clause));
    }
    try {
        spec.validate();
        if (doc.deterministic) stack::DeterministicMachine::compile(spec);
    } catch (const Error& e) {
        semantic(body.header, body.header.raw, e.what());
    }
    return doc;
}

std::string print_machine(const MachineDocument& doc)
{
    const auto& spec = doc.spec;
    const kernel::Alphabet stack_alphabet(spec.stack_symbols);
    auto word = [&](const stack::StackWord& w) { return w.empty() ? std::string("_") : stack_alphabet.format_word(w); };
    std::string out = "#kind stackmachine\n";
    out += std::string("mode: ") + (doc.deterministic ? "deterministic" : "nondeterministic") + "\n";
    out += "alphabet: " + join(spec.input.names()) + "\n";
    out += "stack: " + join(spec.stack_symbols) + "\n";
    out += "states: " + join(spec.states) + "\n";
    for (std::size_t s = 0; s < spec.states.size(); ++s)
        for (const auto& p : spec.outputs[s]) out += "output: " + spec.states[s] + " " + word(p) + "\n";
    for (std::size_t s = 0; s < spec.states.size(); ++s)
        for (kernel::Letter a = 0; a < spec.input.size(); ++a)
            for (const auto& c : spec.clauses_for(s, a))
                out += "trans: " + spec.states[s] + " " + spec.input.name(a) + " " + word(c.pattern) + " -> " +
                       spec.states[c.target] + " " + word(c.replacement) + "\n";
    return out;
}

// ---- schemes --------------------------------------------------------------

rps::Scheme parse_scheme(const Body& body)
{
    body.allow_keys({"given", "define"});
    rps::Signature givens;
    for (const Line* l : body.all("given")) {
        const auto parts = split_blanks(l->value);
        if (parts.size() != 2) syntax(*l, l->value, "expected '<symbol> <arity>'");
        std::size_t arity = 0;
        for (char c : parts[1]) {
            if (c < '0' || c > '9' || arity > 1000) syntax(*l, parts[1], "expected an arity");
            arity = arity * 10 + static_cast<std::size_t>(c - '0');
        }
        if (!givens.emplace(std::string(parts[0]), arity).second)
            semantic(*l, parts[0], "duplicate given '" + std::string(parts[0]) + "'");
    }

    struct Pending {
        const Line* line;
        std::string_view body;
    };
    std::vector<rps::Scheme::Definition> defs;
    std::vector<Pending> pending;
    std::map<std::string, std::size_t, std::less<>> arity;
    for (const auto& [name, n] : givens) arity.emplace(name, n);
    for (const Line* l : body.all("define")) {
        const std::size_t eq = l->value.find('=');
        if (eq == std::string_view::npos) syntax(*l, l->value, "expected '<head> = <body>'");
        const std::string_view head_text = trim(l->value.substr(0, eq));
        const rps::Term head = within(*l, head_text, [&] {
            return parse_term(head_text, [](std::string_view) { return true; });
        });
        if (head.is_variable() && head_text.find('(') != std::string_view::npos)
            syntax(*l, head_text, "malformed head");
        rps::Scheme::Definition def;
        def.name = head.name;
        for (const auto& p : head.args) {
            if (!p.is_variable()) syntax(*l, head_text, "parameters must be plain names");
            def.params.push_back(p.name);
        }
        if (!arity.emplace(def.name, def.params.size()).second)
            semantic(*l, head_text, "'" + def.name + "' is already declared");
        defs.push_back(std::move(def));
        pending.push_back({l, trim(l->value.substr(eq + 1))});
    }
    for (std::size_t i = 0; i < defs.size(); ++i) {
        const Line& l = *pending[i].line;
        const auto& params = defs[i].params;
        const std::string_view text = pending[i].body;
        defs[i].body = within(l, text, [&] {
            return parse_term(text, [&](std::string_view n) {
                return std::find(params.begin(), params.end(), n) != params.end();
            });
        });
        auto check = [&](const auto& self, const rps::Term& t) -> void {
            if (t.is_variable()) return;
            auto it = arity.find(t.name);
            if (it == arity.end()) semantic(l, text, "unknown symbol '" + t.name + "'");
            if (it->second != t.args.size())
                semantic(l, text,
                         "'" + t.name + "' expects " + std::to_string(it->second) + " arguments, got " +
                             std::to_string(t.args.size()));
            for (const auto& a : t.args) self(self, a);
        };
        check(check, defs[i].body);
    }
    try {
        return rps::Scheme(std::move(givens), defs);
    } catch (const rps::UnguardedScheme& e) {
        for (std::size_t i = 0; i < defs.size(); ++i)
            if (defs[i].name == e.path().front()) semantic(*pending[i].line, pending[i].body, e.what());
        semantic(body.header, e.what());
    } catch (const Error& e) {
        semantic(body.header, body.header.raw, e.what());
    }
}

std::string print_scheme(const rps::Scheme& s)
{
    std::string out = "#kind scheme\n";
    for (const auto& [name, n] : s.givens()) out += "given: " + name + " " + std::to_string(n) + "\n";
    for (const auto& d : s.definitions()) {
        out += "define: " + d.name;
        if (!d.params.empty()) out += "(" + join(d.params, ",") + ")";
        out += " = " + rps::to_string(d.body) + "\n";
    }
    return out;
}

}  // namespace

Document parse_document(std::string_view text)
{
    const Body body = split_document(text);
    try {
        if (body.kind == "nfa") return parse_nfa(body);
        if (body.kind == "grammar") return GrammarReader(body).read();
        if (body.kind == "stackmachine") return parse_machine(body);
        return parse_scheme(body);
    } catch (const DocumentError&) {
        throw;
    } catch (const Error& e) {
        semantic(body.header, body.header.raw, e.what());
    }
}

std::string print_document(const Document& d)
{
    struct Printer {
        std::string operator()(const nfa::Nfa& n) const { return print_nfa(n); }
        std::string operator()(const cfg::WeightedGrammar& g) const { return print_grammar(g); }
        std::string operator()(const MachineDocument& m) const { return print_machine(m); }
        std::string operator()(const rps::Scheme& s) const { return print_scheme(s); }
    };
    return std::visit(Printer{}, d);
}

std::string_view kind_name(const Document& d)
{
    static constexpr std::string_view names[] = {"nfa", "grammar", "stackmachine", "scheme"};
    return names[d.index()];
}

nfa::StateSet parse_state_set(const nfa::Nfa& n, std::string_view text)
{
    std::string spaced(text);
    std::replace(spaced.begin(), spaced.end(), ',', ' ');
    std::vector<kernel::StateId> ids;
    for (auto name : split_blanks(spaced)) {
        auto s = n.find_state(name);
        if (!s) throw Error("unknown state '" + std::string(name) + "'");
        ids.push_back(*s);
    }
    return nfa::StateSet(std::move(ids));
}

algebra::Polynomial parse_start(const cfg::WeightedGrammar& g, std::string_view text)
{
    algebra::Polynomial p(g.semiring());
    try {
        p = parse_polynomial(text, g.semiring());
    } catch (const SyntaxError& e) {
        throw Error("start polynomial, offset " + std::to_string(e.offset() + 1) + ": " + e.what());
    }
    g.check_polynomial(p);
    return p;
}

rps::Term parse_root(const rps::Scheme& s, std::string_view text)
{
    rps::Term t(rps::Term::variable(""));
    try {
        t = parse_term(text, [&](std::string_view n) { return !s.is_given(n) && !s.find_definition(n); });
    } catch (const SyntaxError& e) {
        throw Error("root term, offset " + std::to_string(e.offset() + 1) + ": " + e.what());
    }
    s.check_term(t);
    return t;
}

}  // namespace lff::io
