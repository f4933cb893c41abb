#pragma once

#include <cstdint>
#include <optional>

#include "lff/algebra/semiring.hpp"
#include "lff/nfa/nfa.hpp"

namespace lff::testing {

/// Textbook simulation: the set of active states as a bitmask.
bool naive_accepts(const nfa::Nfa& n, const nfa::StateSet& start, const kernel::LetterWord& word);

/// Least word (length-lex) accepted by exactly one side, searching words up
/// to `max_len`. Words reaching an already seen pair of state sets are not
/// extended: any extension is matched by one of an earlier word.
std::optional<kernel::LetterWord> least_difference(const nfa::Nfa& n1, const nfa::StateSet& s1, const nfa::Nfa& n2,
                                                   const nfa::StateSet& s2, std::size_t max_len);

/// Same question by trying every word up to `max_len` in order.
std::optional<kernel::LetterWord> least_difference_naive(const nfa::Nfa& n1, const nfa::StateSet& s1,
                                                         const nfa::Nfa& n2, const nfa::StateSet& s2,
                                                         std::size_t max_len);

/// A grammar in Chomsky normal form over letters 0..k-1, nonterminal 0 the
/// start; the empty word is handled by a flag.
struct CnfGrammar {
    struct Binary {
        std::size_t lhs, left, right;
    };
    struct Unary {
        std::size_t lhs;
        kernel::Letter letter;
    };
    std::size_t nonterminals = 0;
    bool accepts_empty = false;
    std::vector<Binary> binary;
    std::vector<Unary> unary;
};

/// Number of parse trees of `word` by CYK.
algebra::Element cyk_count(const CnfGrammar& g, const kernel::LetterWord& word);

/// Dyck words over '(' = 0, ')' = 1.
CnfGrammar dyck_cnf();
/// Even palindromes over a = 0, b = 1.
CnfGrammar even_palindrome_cnf();

/// Number of derivation trees of a^n in A -> A A | a, found by building
/// every tree explicitly.
std::uint64_t binary_tree_count(std::size_t n);

}  // namespace lff::testing
