#include "fixtures.hpp"

namespace lff::testing {

using algebra::Generator;
using algebra::Polynomial;
using algebra::Semiring;

namespace {

Polynomial var(Semiring s, const std::string& x) { return Polynomial::unit(Generator::variable(x), s); }
Polynomial term(Semiring s, const std::string& a) { return Polynomial::unit(Generator::terminal(a), s); }

}  // namespace

cfg::WeightedGrammar dyck_grammar()
{
    const auto b = Semiring::boolean();
    return cfg::WeightedGrammar(b, {"D"}, kernel::Alphabet({"(", ")"}), {1},
                                {var(b, "D") * term(b, ")") * var(b, "D"), Polynomial(b)});
}

cfg::WeightedGrammar even_palindrome_grammar()
{
    const auto b = Semiring::boolean();
    return cfg::WeightedGrammar(b, {"P"}, kernel::Alphabet({"a", "b"}), {1},
                                {var(b, "P") * term(b, "a"), var(b, "P") * term(b, "b")});
}

cfg::WeightedGrammar counting_grammar()
{
    const auto n = Semiring::natural();
    return cfg::WeightedGrammar(n, {"A", "T"}, kernel::Alphabet({"a"}), {0, 1},
                                {var(n, "T"), var(n, "T") * var(n, "T")});
}

stack::MachineSpec anbn_machine()
{
    enum : stack::Symbol { A, Z };
    enum : stack::StateId { q0, q1, qx };
    stack::MachineSpec m;
    m.input = kernel::Alphabet({"a", "b"});
    m.stack_symbols = {"A", "Z"};
    m.states = {"q0", "q1", "qx"};
    m.outputs = {{{Z}}, {{Z}}, {}};
    m.clauses = {
        {{{}, q0, {A}}},                   // q0 a
        {{{A}, q1, {}}, {{}, qx, {}}},     // q0 b
        {{{}, qx, {}}},                    // q1 a
        {{{A}, q1, {}}, {{}, qx, {}}},     // q1 b
        {{{}, qx, {}}},                    // qx a
        {{{}, qx, {}}},                    // qx b
    };
    m.validate();
    return m;
}

stack::MachineSpec even_palindrome_machine()
{
    enum : stack::Symbol { A, B, Z };
    enum : stack::StateId { p, q };
    stack::MachineSpec m;
    m.input = kernel::Alphabet({"a", "b"});
    m.stack_symbols = {"A", "B", "Z"};
    m.states = {"p", "q"};
    m.outputs = {{{Z}}, {{Z}}};
    m.clauses = {
        {{{}, p, {A}}, {{A}, q, {}}},  // p a
        {{{}, p, {B}}, {{B}, q, {}}},  // p b
        {{{A}, q, {}}},                // q a
        {{{B}, q, {}}},                // q b
    };
    m.validate();
    return m;
}

rps::Scheme figure_scheme()
{
    using rps::Term;
    const Term z = Term::variable("z");
    Term body = Term::apply("+", {z, Term::apply("φ", {Term::apply("×", {Term::apply("⋆"), z})})});
    return rps::Scheme({{"+", 2}, {"×", 2}, {"⋆", 0}}, {{"φ", {"z"}, std::move(body)}});
}

}  // namespace lff::testing
