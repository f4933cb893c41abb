#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "lff/cfg/grammar.hpp"
#include "lff/nfa/nfa.hpp"
#include "lff/rps/scheme.hpp"
#include "lff/stack/machine.hpp"

namespace lff::io {

struct Diagnostic {
    enum class Kind { Syntax, Semantic };

    Kind kind = Kind::Syntax;
    std::size_t line = 0;    // 1-based
    std::size_t column = 0;  // 1-based, in code points
    std::string message;

    /// "line:column: syntax error: message".
    std::string format() const;
};

class DocumentError : public Error {
public:
    explicit DocumentError(Diagnostic d);
    const Diagnostic& diagnostic() const { return diagnostic_; }

private:
    Diagnostic diagnostic_;
};

struct MachineDocument {
    bool deterministic = true;
    stack::MachineSpec spec;

    friend bool operator==(const MachineDocument&, const MachineDocument&) = default;
};

using Document = std::variant<nfa::Nfa, cfg::WeightedGrammar, MachineDocument, rps::Scheme>;

/// Parses and validates a document. Throws DocumentError.
Document parse_document(std::string_view text);

/// Canonical text; parse_document(print_document(d)) == d.
std::string print_document(const Document& d);

std::string_view kind_name(const Document& d);

/// "a b" or "a,b" to a state set over `n`'s states.
nfa::StateSet parse_state_set(const nfa::Nfa& n, std::string_view text);

/// A start polynomial checked against the grammar's generators.
algebra::Polynomial parse_start(const cfg::WeightedGrammar& g, std::string_view text);

/// A root term: known symbols are applications, other bare names variables.
rps::Term parse_root(const rps::Scheme& s, std::string_view text);

}  // namespace lff::io
