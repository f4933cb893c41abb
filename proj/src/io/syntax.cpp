#include "lff/io/syntax.hpp"

#include <cctype>

namespace lff::io {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

bool identifier_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }

bool identifier_char(unsigned char c) { return identifier_start(c) || std::isdigit(c); }

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip() { while (pos_ < text_.size() && is_blank(text_[pos_])) ++pos_; }
    bool done() { skip(); return pos_ == text_.size(); }
    char peek() { skip(); return pos_ < text_.size() ? text_[pos_] : '\0'; }
    std::size_t pos() const { return pos_; }
    std::string_view text() const { return text_; }
    void advance(std::size_t n = 1) { pos_ += n; }

    bool eat(char c)
    {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c)
    {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(pos_, message); }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

algebra::Element read_integer(Cursor& in)
{
    in.skip();
    const std::size_t start = in.pos();
    std::string digits;
    if (in.peek() == '-') {
        digits += '-';
        in.advance();
    }
    while (in.pos() < in.text().size() && std::isdigit(static_cast<unsigned char>(in.text()[in.pos()]))) {
        digits += in.text()[in.pos()];
        in.advance();
    }
    if (digits.empty() || digits == "-") throw SyntaxError(start, "expected a coefficient");
    return algebra::Element(digits);
}

algebra::Generator read_generator(Cursor& in)
{
    in.skip();
    const std::string_view text = in.text();
    if (in.eat('\'')) {
        const std::size_t start = in.pos();
        const std::size_t close = text.find('\'', start);
        if (close == std::string_view::npos) in.fail("unterminated terminal");
        if (close == start) in.fail("empty terminal");
        in.advance(close + 1 - start);
        return algebra::Generator::terminal(std::string(text.substr(start, close - start)));
    }
    const std::size_t start = in.pos();
    if (start >= text.size() || !identifier_start(static_cast<unsigned char>(text[start])))
        in.fail("expected a variable or a quoted terminal");
    std::size_t end = start;
    while (end < text.size() && identifier_char(static_cast<unsigned char>(text[end]))) ++end;
    in.advance(end - start);
    return algebra::Generator::variable(std::string(text.substr(start, end - start)));
}

algebra::Word read_word(Cursor& in)
{
    algebra::Word w{read_generator(in)};
    while (in.eat('.')) w.push_back(read_generator(in));
    return w;
}

}  // namespace

std::string_view trim(std::string_view s)
{
    while (!s.empty() && is_blank(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_blank(s.back())) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_blanks(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && is_blank(s[i])) ++i;
        std::size_t j = i;
        while (j < s.size() && !is_blank(s[j])) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

bool is_identifier(std::string_view s)
{
    if (s.empty() || !identifier_start(static_cast<unsigned char>(s.front()))) return false;
    for (char c : s)
        if (!identifier_char(static_cast<unsigned char>(c))) return false;
    return true;
}

algebra::Polynomial parse_polynomial(std::string_view text, algebra::Semiring s)
{
    Cursor in(text);
    if (in.done()) in.fail("empty polynomial");
    algebra::Polynomial result(s);
    do {
        algebra::Element coef = 1;
        algebra::Word word;
        const char c = in.peek();
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t at = in.pos();
            coef = read_integer(in);
            if (!s.contains(coef))
                throw SyntaxError(at, "coefficient " + coef.str() + " is not in " + std::string(s.name()));
            if (in.eat('*')) word = read_word(in);
        } else {
            word = read_word(in);
        }
        result = result + algebra::Polynomial::monomial(s, coef, std::move(word));
    } while (in.eat('+'));
    if (!in.done()) in.fail("unexpected input");
    return result;
}

std::string format_generator(const algebra::Generator& g)
{
    return g.is_terminal() ? "'" + g.id + "'" : g.id;
}

std::string format_word(const algebra::Word& w)
{
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out += '.';
        out += format_generator(w[i]);
    }
    return out;
}

std::string format_polynomial(const algebra::Polynomial& p)
{
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [word, coef] : p.terms()) {
        if (!out.empty()) out += " + ";
        if (word.empty()) {
            out += coef.str();
            continue;
        }
        if (coef != 1) out += coef.str() + "*";
        out += format_word(word);
    }
    return out;
}

namespace {

rps::Term read_term(Cursor& in, const std::function<bool(std::string_view)>& is_variable)
{
    in.skip();
    const std::string_view text = in.text();
    const std::size_t start = in.pos();
    std::size_t end = start;
    while (end < text.size() && !is_blank(text[end]) && text[end] != '(' && text[end] != ')' && text[end] != ',')
        ++end;
    if (end == start) in.fail("expected a symbol");
    std::string name(text.substr(start, end - start));
    in.advance(end - start);
    if (!in.eat('(')) {
        if (is_variable(name)) return rps::Term::variable(std::move(name));
        return rps::Term::apply(std::move(name));
    }
    std::vector<rps::Term> args;
    if (!in.eat(')')) {
        do {
            args.push_back(read_term(in, is_variable));
        } while (in.eat(','));
        in.expect(')');
    }
    return rps::Term::apply(std::move(name), std::move(args));
}

}  // namespace

rps::Term parse_term(std::string_view text, const std::function<bool(std::string_view)>& is_variable)
{
    Cursor in(text);
    rps::Term t = read_term(in, is_variable);
    if (!in.done()) in.fail("unexpected input after term");
    return t;
}

}  // namespace lff::io
