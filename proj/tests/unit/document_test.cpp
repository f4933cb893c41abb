#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "generators.hpp"
#include "lff/io/document.hpp"
#include "lff/io/syntax.hpp"

using namespace lff;
using io::Diagnostic;

namespace {

std::string sample(const std::string& name)
{
    std::ifstream in(std::string(LFF_SOURCE_DIR) + "/samples/" + name);
    REQUIRE(in);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

Diagnostic diagnose(std::string_view text)
{
    try {
        io::parse_document(text);
    } catch (const io::DocumentError& e) {
        return e.diagnostic();
    }
    FAIL("document was accepted");
    return {};
}

const char* const minimal_nfa =
    "#kind nfa\n"
    "alphabet: a b\n"
    "states: 0 1\n"
    "accepting: 1\n"
    "trans: 0 a -> 0 1\n"
    "trans: 0 b -> 0\n"
    "trans: 1 a ->\n"
    "trans: 1 b ->\n";

}  // namespace

TEST_CASE("the minimal automaton document round-trips", "[document]")
{
    const auto d = io::parse_document(minimal_nfa);
    const auto& n = std::get<nfa::Nfa>(d);
    CHECK(n.state_count() == 2);
    CHECK(n.transition(0, 0) == nfa::StateSet({0, 1}));
    CHECK(io::print_document(d) == minimal_nfa);
}

TEST_CASE("sample documents parse to the expected objects", "[document]")
{
    CHECK(std::get<cfg::WeightedGrammar>(io::parse_document(sample("dyck.grammar"))) == testing::dyck_grammar());
    CHECK(std::get<cfg::WeightedGrammar>(io::parse_document(sample("dyck_prod.grammar"))) == testing::dyck_grammar());
    CHECK(std::get<cfg::WeightedGrammar>(io::parse_document(sample("palindromes.grammar"))) ==
          testing::even_palindrome_grammar());
    CHECK(std::get<cfg::WeightedGrammar>(io::parse_document(sample("counting.grammar"))) == testing::counting_grammar());
    const auto m = std::get<io::MachineDocument>(io::parse_document(sample("anbn.machine")));
    CHECK(m.deterministic);
    CHECK(m.spec == testing::anbn_machine());
    const auto p = std::get<io::MachineDocument>(io::parse_document(sample("palindromes.machine")));
    CHECK_FALSE(p.deterministic);
    CHECK(p.spec == testing::even_palindrome_machine());
    CHECK(std::get<rps::Scheme>(io::parse_document(sample("figure1.scheme"))) == testing::figure_scheme());
}

TEST_CASE("printing then parsing is the identity", "[document]")
{
    for (const char* name : {"ends_in_a.nfa", "ends_in_a_dfa.nfa", "dyck.grammar", "dyck_prod.grammar",
                             "palindromes.grammar", "counting.grammar", "anbn.machine", "palindromes.machine",
                             "figure1.scheme", "shifted.scheme"}) {
        INFO(name);
        const auto d = io::parse_document(sample(name));
        const std::string canonical = io::print_document(d);
        CHECK(io::parse_document(canonical) == d);
        CHECK(io::print_document(io::parse_document(canonical)) == canonical);
    }
    testing::Rng rng(61);
    for (int i = 0; i < 50; ++i) {
        const io::Document n = testing::random_nfa(rng, 4);
        CHECK(io::parse_document(io::print_document(n)) == n);
        const auto s = std::array{algebra::Semiring::boolean(), algebra::Semiring::natural(),
                                  algebra::Semiring::integer()}[i % 3];
        const io::Document g = testing::random_grammar(rng, s, 2, 2);
        CHECK(io::parse_document(io::print_document(g)) == g);
    }
}

TEST_CASE("polynomial syntax", "[document]")
{
    const auto z = algebra::Semiring::integer();
    const auto p = io::parse_polynomial("3*X.'a'.Y + 'b' + -2 + X", z);
    CHECK(p.size() == 4);
    CHECK(io::format_polynomial(p) == "-2 + X + 'b' + 3*X.'a'.Y");
    CHECK(io::format_polynomial(algebra::Polynomial(z)) == "0");
    CHECK(io::parse_polynomial("0", z).is_zero());
    CHECK(io::parse_polynomial("X + X", algebra::Semiring::boolean()) == io::parse_polynomial("X", algebra::Semiring::boolean()));
    CHECK_THROWS_AS(io::parse_polynomial("-1*X", algebra::Semiring::natural()), io::SyntaxError);
    CHECK_THROWS_AS(io::parse_polynomial("2*", z), io::SyntaxError);
    CHECK_THROWS_AS(io::parse_polynomial("'a", z), io::SyntaxError);
    CHECK_THROWS_AS(io::parse_polynomial("", z), io::SyntaxError);

    testing::Rng rng(62);
    for (int i = 0; i < 200; ++i) {
        const auto q = testing::random_polynomial(rng, z, {"X", "Y1"}, {"a", "("}, {3, 3, 4});
        CHECK(io::parse_polynomial(io::format_polynomial(q), z) == q);
    }
}

TEST_CASE("syntax errors carry line and column", "[document]")
{
    auto d = diagnose("#kind nfa\nalphabet: a b\nstates 0 1\n");
    CHECK(d.kind == Diagnostic::Kind::Syntax);
    CHECK(d.line == 3);
    CHECK(d.column == 1);

    d = diagnose("#kind grammar\nsemiring: N\nterminals: a\nnonterminals: X\nrule: X 'a' -> 2*X.\n");
    CHECK(d.kind == Diagnostic::Kind::Syntax);
    CHECK(d.line == 5);
    CHECK(d.column == 20);

    d = diagnose("% nothing here\n#kind dfa\n");
    CHECK(d.kind == Diagnostic::Kind::Syntax);
    CHECK(d.line == 2);
    CHECK(d.column == 7);

    d = diagnose("");
    CHECK(d.kind == Diagnostic::Kind::Syntax);
}

TEST_CASE("semantic errors are reported separately", "[document]")
{
    auto d = diagnose("#kind scheme\ngiven: + 2\ndefine: φ(z) = φ(z)\n");
    CHECK(d.kind == Diagnostic::Kind::Semantic);
    CHECK(d.line == 3);
    CHECK(d.message == "unguarded recursion: φ → φ");

    d = diagnose("#kind scheme\ngiven: + 2\ndefine: φ(z) = +(z)\n");
    CHECK(d.kind == Diagnostic::Kind::Semantic);
    CHECK(d.line == 3);

    // missing transition for state 1 on b
    d = diagnose("#kind nfa\nalphabet: a b\nstates: 0 1\ntrans: 0 a -> 0\ntrans: 0 b -> 0\ntrans: 1 a -> 1\n");
    CHECK(d.kind == Diagnostic::Kind::Semantic);
    CHECK(d.message.find("state 1 on b") != std::string::npos);

    d = diagnose("#kind nfa\nalphabet: a\nstates: 0\ntrans: 0 a -> 7\n");
    CHECK(d.kind == Diagnostic::Kind::Semantic);
    CHECK(d.line == 4);
    CHECK(d.column == 15);

    // q0 b only pops, so an empty or Z-topped stack has no clause
    d = diagnose("#kind stackmachine\nmode: deterministic\nalphabet: b\nstack: A Z\nstates: q0\ntrans: q0 b A -> q0 _\n");
    CHECK(d.kind == Diagnostic::Kind::Semantic);

    // productions must start with a terminal
    d = diagnose("#kind grammar\nsemiring: B\nterminals: a\nnonterminals: X\nprod: X -> X.'a'\n");
    CHECK(d.kind == Diagnostic::Kind::Semantic);
    CHECK(d.line == 5);
}

TEST_CASE("roots resolve free names to variables", "[document]")
{
    const auto s = testing::figure_scheme();
    const auto t = io::parse_root(s, "φ(×(⋆,y))");
    CHECK(rps::to_string(t) == "φ(×(⋆,y))");
    CHECK(t.args[0].args[1].is_variable());
    CHECK_FALSE(t.args[0].args[0].is_variable());
    CHECK_THROWS(io::parse_root(s, "φ(y,y)"));
    CHECK_THROWS(io::parse_root(s, "φ(y"));
}
