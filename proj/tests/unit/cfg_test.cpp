#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "lff/cfg/oracle.hpp"
#include "lff/cfg/shared.hpp"
#include "lff/cfg/step.hpp"
#include "lff/nfa/nfa.hpp"

using namespace lff;
using algebra::Generator;
using algebra::Polynomial;
using algebra::Semiring;
using kernel::LetterWord;

namespace {

Polynomial var(Semiring s, const std::string& x) { return Polynomial::unit(Generator::variable(x), s); }
Polynomial term(Semiring s, const std::string& a) { return Polynomial::unit(Generator::terminal(a), s); }

cfg::WeightedGrammar dyck() { return testing::dyck_grammar(); }
cfg::WeightedGrammar counting() { return testing::counting_grammar(); }

}  // namespace

TEST_CASE("output and derivative of words follow the product rule", "[cfg]")
{
    const auto g = dyck();
    const auto b = g.semiring();
    const Polynomial d = var(b, "D");
    CHECK(cfg::output_of(g, d * d) == 1);
    CHECK(cfg::output_of(g, d * term(b, ")")) == 0);
    // delta(D.')', ')') = o(D) . delta(')', ')') = eps
    CHECK(cfg::derivative(g, d * term(b, ")"), 1) == Polynomial::one(b));
    // delta(D.D, '(') = D.')'.D.D + D.')'.D
    CHECK(cfg::derivative(g, d * d, 0) == d * term(b, ")") * d * d + d * term(b, ")") * d);
}

TEST_CASE("Dyck coefficients", "[cfg]")
{
    const auto g = dyck();
    const auto d = var(g.semiring(), "D");
    for (const char* w : {"_", "()", "(())", "()()", "(()())"})
        CHECK(cfg::coefficient(g, d, g.terminals().parse_word(w)) == 1);
    for (const char* w : {"(", ")", ")(", "(()", "())("})
        CHECK(cfg::coefficient(g, d, g.terminals().parse_word(w)) == 0);
}

TEST_CASE("counting grammar counts binary trees", "[cfg]")
{
    const auto g = counting();
    const auto a = var(g.semiring(), "A");
    CHECK(cfg::coefficient(g, a, LetterWord(3, 0)) == 2);
    CHECK(cfg::coefficient(g, a, LetterWord(4, 0)) == 5);
    for (std::size_t n = 0; n <= 7; ++n)
        CHECK(cfg::coefficient(g, a, LetterWord(n, 0)) == testing::binary_tree_count(n));
}

TEST_CASE("coefficients agree with the derivation oracle", "[cfg]")
{
    testing::Rng rng(31);
    for (const auto s : {Semiring::boolean(), Semiring::natural(), Semiring::integer()}) {
        for (int i = 0; i < 15; ++i) {
            const auto g = testing::random_grammar(rng, s, 2, 2);
            const auto start = testing::random_polynomial(rng, s, g.nonterminals(), g.terminals().names(), {2, 2, 2});
            for (const auto& w : testing::all_words(2, 4))
                REQUIRE(cfg::coefficient(g, start, w) == cfg::oracle_coefficient(g, start, w));
        }
    }
}

TEST_CASE("the oracle refuses long words", "[cfg]")
{
    const auto g = dyck();
    CHECK_THROWS_AS(cfg::oracle_coefficient(g, var(g.semiring(), "D"), LetterWord(6, 0), 4), cfg::BoundExceeded);
}

TEST_CASE("pointed and rules-only determinizations agree", "[cfg]")
{
    const auto g = dyck();
    const auto pointed = cfg::determinize(g);
    const cfg::GrammarSystem rules(g);
    CHECK(pointed.unit(0) == var(g.semiring(), "D"));
    const auto v = var(g.semiring(), "D") * term(g.semiring(), ")");
    // one-step values differ in presentation but not in behaviour; the
    // literal pointed carrier roughly doubles its word length per letter
    CHECK(std::holds_alternative<kernel::Equal>(kernel::equiv_bounded(pointed, v, rules, v, 3)));
}

TEST_CASE("shared pointed states expand to the literal ones", "[cfg]")
{
    testing::Rng rng(34);
    for (const auto s : {Semiring::boolean(), Semiring::natural(), Semiring::integer()}) {
        for (int i = 0; i < 10; ++i) {
            const auto g = testing::random_grammar(rng, s, 2, 2, {2, 2, 2});
            const auto v = testing::random_polynomial(rng, s, g.nonterminals(), g.terminals().names()) + var(s, "X0");
            const auto literal = cfg::determinize(g);
            const cfg::SharedPointedSystem shared(g);
            REQUIRE(shared.expand(shared.embed(v)) == v);
            for (const auto& w : testing::all_words(2, 2)) {
                auto x = shared.embed(v);
                auto y = v;
                for (auto a : w) {
                    x = shared.step(x, a);
                    y = literal.step(y, a);
                }
                REQUIRE(shared.expand(x) == y);
                REQUIRE(shared.output(x) == literal.output(y));
            }
        }
    }
}

TEST_CASE("the shared pointed carrier reaches long words", "[cfg]")
{
    const auto d = dyck();
    const cfg::SharedPointedSystem shared(d);
    const cfg::GrammarSystem rules(d);
    const auto v = var(d.semiring(), "D");
    CHECK(std::holds_alternative<kernel::Equal>(kernel::equiv_bounded(shared, shared.embed(v), rules, v, 8)));

    const auto g = counting();
    const cfg::SharedPointedSystem counter(g);
    auto x = counter.embed(var(g.semiring(), "A"));
    for (std::size_t n = 1; n <= 10; ++n) {
        x = counter.step(x, 0);
        CHECK(counter.output(x) == testing::binary_tree_count(n));
    }
}

TEST_CASE("fuse is an algebra map on lifted pairs", "[cfg]")
{
    testing::Rng rng(32);
    const kernel::Alphabet sigma({"a", "b"});
    const std::vector<std::string> vars{"X", "Y"};
    for (const auto s : {Semiring::boolean(), Semiring::natural()}) {
        for (int i = 0; i < 100; ++i) {
            const auto p = testing::random_pair(rng, s, vars, sigma);
            const auto q = testing::random_pair(rng, s, vars, sigma);
            CHECK(cfg::fuse(cfg::lift_mul(p, q, sigma), sigma) == cfg::fuse(p, sigma) * cfg::fuse(q, sigma));
            CHECK(cfg::fuse(cfg::lift_add(p, q), sigma) == cfg::fuse(p, sigma) + cfg::fuse(q, sigma));
        }
    }
}

TEST_CASE("the pointing of b fuses to b", "[cfg]")
{
    const kernel::Alphabet sigma({"a", "b"});
    const auto n = Semiring::natural();
    CHECK(cfg::fuse(cfg::pointing(n, 2, 1), sigma) == term(n, "b"));
    CHECK(cfg::fuse(cfg::one_pair(n, 2), sigma) == Polynomial::one(n));
}

TEST_CASE("right-linear encoding keeps the language", "[cfg]")
{
    testing::Rng rng(33);
    for (int i = 0; i < 20; ++i) {
        const auto n = testing::random_nfa(rng, 4);
        const auto start = testing::random_subset(rng, n.state_count(), false);
        const auto g = cfg::from_nfa(n);
        const auto p = cfg::start_polynomial(n, start);
        for (const auto& w : testing::all_words(2, 6))
            REQUIRE((cfg::coefficient(g, p, w) == 1) == nfa::accepts(n, start, w));
    }
}

TEST_CASE("grammars validate their generators", "[cfg]")
{
    const auto b = Semiring::boolean();
    const kernel::Alphabet sigma({"a"});
    CHECK_THROWS_AS(cfg::WeightedGrammar(b, {"X"}, sigma, {1}, {var(b, "Y")}), cfg::UnboundGenerator);
    CHECK_THROWS_AS(cfg::WeightedGrammar(b, {"X"}, sigma, {1}, {term(b, "c")}), cfg::UnboundGenerator);
    CHECK_THROWS(cfg::WeightedGrammar(b, {"X"}, sigma, {2}, {Polynomial(b)}));
    CHECK_THROWS(cfg::WeightedGrammar(b, {"X"}, sigma, {1}, {var(Semiring::natural(), "X")}));
    const auto g = dyck();
    CHECK_THROWS_AS(cfg::coefficient(g, var(b, "Q"), LetterWord{}), cfg::UnboundGenerator);
    CHECK_THROWS(cfg::coefficient(g, var(Semiring::natural(), "D"), LetterWord{}));
}
