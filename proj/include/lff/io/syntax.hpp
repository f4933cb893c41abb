#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "lff/algebra/polynomial.hpp"
#include "lff/rps/term.hpp"

namespace lff::io {

/// A malformed fragment; `offset` is the byte position inside the fragment.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& message) : Error(message), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

std::string_view trim(std::string_view s);

/// Splits on runs of blanks.
std::vector<std::string_view> split_blanks(std::string_view s);

/// True for names usable as variables and nonterminals: a letter or
/// underscore (or any non-ASCII byte) followed by those or digits.
bool is_identifier(std::string_view s);

/// Reads `3*x.'a'.y + 'b' + 2`: terms joined by `+`, each an optional
/// coefficient and `*` followed by a dot-separated word, or a bare
/// coefficient for the empty word. Terminals are single-quoted. `0` is
/// the zero polynomial; coefficients may be negative over Z.
algebra::Polynomial parse_polynomial(std::string_view text, algebra::Semiring s);

/// Inverse of parse_polynomial on canonical polynomials. Coefficient 1 is
/// omitted before non-empty words.
std::string format_polynomial(const algebra::Polynomial& p);
std::string format_generator(const algebra::Generator& g);
std::string format_word(const algebra::Word& w);

/// Reads `f(t1,...,tn)` or a bare name. `is_variable` decides which bare
/// names are variables; everything else becomes a constant application.
rps::Term parse_term(std::string_view text, const std::function<bool(std::string_view)>& is_variable);

}  // namespace lff::io
