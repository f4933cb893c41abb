#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lff/error.hpp"

namespace lff::kernel {

using Letter = std::size_t;
using StateId = std::size_t;
using LetterWord = std::vector<Letter>;

class AlphabetError : public Error {
public:
    using Error::Error;
};

/// A finite, ordered input alphabet. Letter indices follow declaration
/// order, which is also the order used for length-lexicographic search.
class Alphabet {
public:
    Alphabet() = default;
    /// Throws AlphabetError on duplicate or empty names.
    explicit Alphabet(std::vector<std::string> letters);

    std::size_t size() const { return letters_.size(); }
    const std::string& name(Letter a) const { return letters_.at(a); }
    const std::vector<std::string>& names() const { return letters_; }
    std::optional<Letter> find(std::string_view name) const;

    /// True when every letter is a single character, so words can be
    /// written without separators.
    bool single_characters() const;

    /// Reads "a.b.c", "abc" (single-character alphabets) or "_"/"ε"/"" for
    /// the empty word. Throws AlphabetError on unknown letters.
    LetterWord parse_word(std::string_view text) const;
    /// Inverse of parse_word; the empty word prints as "ε".
    std::string format_word(std::span<const Letter> word) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<std::string> letters_;
};

/// Throws AlphabetError if some letter of `word` is not below `size`.
void check_word(std::span<const Letter> word, std::size_t size);

}  // namespace lff::kernel
