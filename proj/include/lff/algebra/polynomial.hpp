#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "lff/algebra/semiring.hpp"

namespace lff::algebra {

/// A generator of the polynomial monad S<X + Sigma>: either a variable
/// (left injection) or a terminal letter (right injection). The two
/// identifier spaces never collide because the kind is part of identity.
struct Generator {
    enum class Kind : unsigned char { Variable, Terminal };

    Kind kind = Kind::Variable;
    std::string id;

    static Generator variable(std::string id) { return {Kind::Variable, std::move(id)}; }
    static Generator terminal(std::string id) { return {Kind::Terminal, std::move(id)}; }

    bool is_variable() const { return kind == Kind::Variable; }
    bool is_terminal() const { return kind == Kind::Terminal; }

    // Ordered by identifier first so that serialization reads alphabetically.
    friend std::strong_ordering operator<=>(const Generator& a, const Generator& b)
    {
        if (auto c = a.id <=> b.id; c != 0) return c;
        return a.kind <=> b.kind;
    }
    friend bool operator==(const Generator&, const Generator&) = default;
};

using Word = std::vector<Generator>;

/// Length-lexicographic order on words.
struct LengthLex {
    bool operator()(const Word& a, const Word& b) const
    {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

Word concat(const Word& u, const Word& v);

class UnboundVariable : public Error {
public:
    explicit UnboundVariable(const std::string& name);
};

class NonCommutativeSemiring : public Error {
public:
    NonCommutativeSemiring();
};

/// A finite S-linear combination of words in canonical form: no stored
/// coefficient is zero, terms are kept in length-lexicographic order.
/// Values are immutable; every operation returns a fresh polynomial.
class Polynomial {
public:
    using Terms = std::map<Word, Element, LengthLex>;

    /// The zero polynomial.
    explicit Polynomial(Semiring semiring) : semiring_(semiring) {}

    /// Builds from raw terms, coercing coefficients and dropping zeros.
    Polynomial(Semiring semiring, const Terms& terms);

    static Polynomial zero(Semiring s) { return Polynomial(s); }
    /// one * epsilon, the monoid unit.
    static Polynomial one(Semiring s);
    /// c * epsilon, the canonical embedding of scalars.
    static Polynomial constant(Semiring s, const Element& c);
    static Polynomial monomial(Semiring s, const Element& c, Word w);
    /// The monad unit: the one-letter word g with coefficient one.
    static Polynomial unit(const Generator& g, Semiring s);

    Semiring semiring() const { return semiring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Element coefficient(const Word& w) const;

    /// True when every occurring generator is a variable.
    bool variables_only() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return a.semiring_ == b.semiring_ && a.terms_ == b.terms_;
    }
    // Total order for use as a key in memo tables; consistent with ==.
    friend bool operator<(const Polynomial& a, const Polynomial& b);
    friend bool operator>(const Polynomial& a, const Polynomial& b) { return b < a; }
    friend bool operator<=(const Polynomial& a, const Polynomial& b) { return !(b < a); }
    friend bool operator>=(const Polynomial& a, const Polynomial& b) { return !(a < b); }

private:
    friend Polynomial add(const Polynomial&, const Polynomial&);
    friend Polynomial scale(const Element&, const Polynomial&);
    friend Polynomial multiply(const Polynomial&, const Polynomial&);

    // Adopts terms whose coefficients are already coerced; drops zeros.
    static Polynomial adopt(Semiring semiring, Terms&& terms);

    Semiring semiring_;
    Terms terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Element& s, const Polynomial& p);
Polynomial multiply(const Polynomial& p, const Polynomial& q);

/// Assignment of polynomials to variables; terminals not listed map to themselves.
using Assignment = std::map<Generator, Polynomial>;

/// Monad multiplication: replaces each generator by its image and expands.
/// Throws UnboundVariable if a variable has no image.
Polynomial substitute(const Polynomial& p, const Assignment& sigma);

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return multiply(p, q); }
inline Polynomial operator*(const Element& s, const Polynomial& p) { return scale(s, p); }

}  // namespace lff::algebra
