#include "lff/kernel/alphabet.hpp"

#include <algorithm>
#include <set>

namespace lff::kernel {

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters))
{
    std::set<std::string_view> seen;
    for (const auto& l : letters_) {
        if (l.empty()) throw AlphabetError("empty letter name");
        if (!seen.insert(l).second) throw AlphabetError("duplicate letter '" + l + "'");
    }
}

std::optional<Letter> Alphabet::find(std::string_view name) const
{
    auto it = std::find(letters_.begin(), letters_.end(), name);
    if (it == letters_.end()) return std::nullopt;
    return static_cast<Letter>(it - letters_.begin());
}

bool Alphabet::single_characters() const
{
    return std::all_of(letters_.begin(), letters_.end(),
                       [](const std::string& l) { return l.size() == 1; });
}

LetterWord Alphabet::parse_word(std::string_view text) const
{
    LetterWord word;
    if (text.empty() || text == "_" || text == "ε") return word;
    auto lookup = [&](std::string_view piece) {
        auto a = find(piece);
        if (!a) throw AlphabetError("unknown letter '" + std::string(piece) + "'");
        word.push_back(*a);
    };
    if (text.find('.') != std::string_view::npos) {
        std::size_t start = 0;
        while (true) {
            std::size_t dot = text.find('.', start);
            lookup(text.substr(start, dot == std::string_view::npos ? dot : dot - start));
            if (dot == std::string_view::npos) break;
            start = dot + 1;
        }
        return word;
    }
    if (find(text)) {
        lookup(text);
        return word;
    }
    if (!single_characters()) throw AlphabetError("unknown letter '" + std::string(text) + "'");
    for (char c : text) lookup(std::string_view(&c, 1));
    return word;
}

std::string Alphabet::format_word(std::span<const Letter> word) const
{
    if (word.empty()) return "ε";
    const bool compact = single_characters();
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i > 0 && !compact) out += '.';
        out += name(word[i]);
    }
    return out;
}

void check_word(std::span<const Letter> word, std::size_t size)
{
    for (Letter a : word)
        if (a >= size) throw AlphabetError("letter " + std::to_string(a) + " outside alphabet");
}

}  // namespace lff::kernel
