#pragma once

#include "lff/cfg/grammar.hpp"
#include "lff/rps/scheme.hpp"
#include "lff/stack/machine.hpp"

namespace lff::testing {

/// D -> eps | ( D ) D over B, pre-differentiated.
cfg::WeightedGrammar dyck_grammar();
/// P -> eps | a P a | b P b over B.
cfg::WeightedGrammar even_palindrome_grammar();
/// A -> A A | a over N; T is A after one leaf.
cfg::WeightedGrammar counting_grammar();

/// a^n b^n from (q0, Z); q1 pops, qx is a sink.
stack::MachineSpec anbn_machine();
/// Even palindromes from (p, Z): push in p, guess the middle, pop in q.
stack::MachineSpec even_palindrome_machine();

/// phi(z) = z + phi(z x star), with the multiplication written x(star, z).
rps::Scheme figure_scheme();

}  // namespace lff::testing
