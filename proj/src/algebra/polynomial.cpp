#include "lff/algebra/polynomial.hpp"

#include <algorithm>

namespace lff::algebra {

Word concat(const Word& u, const Word& v)
{
    Word w;
    w.reserve(u.size() + v.size());
    w.insert(w.end(), u.begin(), u.end());
    w.insert(w.end(), v.begin(), v.end());
    return w;
}

UnboundVariable::UnboundVariable(const std::string& name)
    : Error("unbound variable '" + name + "'")
{
}

NonCommutativeSemiring::NonCommutativeSemiring()
    : Error("the polynomial monad requires a commutative semiring")
{
}

Polynomial::Polynomial(Semiring semiring, const Terms& terms) : semiring_(semiring)
{
    for (const auto& [w, c] : terms) {
        Element k = semiring_.coerce(c);
        if (!semiring_.is_zero(k)) terms_.emplace(w, std::move(k));
    }
}

Polynomial Polynomial::adopt(Semiring semiring, Terms&& terms)
{
    std::erase_if(terms, [&](const auto& term) { return semiring.is_zero(term.second); });
    Polynomial p(semiring);
    p.terms_ = std::move(terms);
    return p;
}

Polynomial Polynomial::one(Semiring s) { return constant(s, s.one()); }

Polynomial Polynomial::constant(Semiring s, const Element& c) { return monomial(s, c, {}); }

Polynomial Polynomial::monomial(Semiring s, const Element& c, Word w)
{
    Terms t;
    t.emplace(std::move(w), c);
    return Polynomial(s, t);
}

Polynomial Polynomial::unit(const Generator& g, Semiring s) { return monomial(s, s.one(), {g}); }

Element Polynomial::coefficient(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? semiring_.zero() : it->second;
}

bool Polynomial::variables_only() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& term) {
        return std::all_of(term.first.begin(), term.first.end(),
                           [](const Generator& g) { return g.is_variable(); });
    });
}

bool operator<(const Polynomial& a, const Polynomial& b)
{
    if (a.semiring_ != b.semiring_) return a.semiring_.kind() < b.semiring_.kind();
    return std::lexicographical_compare(
        a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
        [](const auto& x, const auto& y) {
            if (x.first != y.first) return LengthLex{}(x.first, y.first);
            return x.second < y.second;
        });
}

namespace {

void accumulate(Polynomial::Terms& into, Semiring s, const Word& w, const Element& c)
{
    auto [it, inserted] = into.try_emplace(w, c);
    if (!inserted) it->second = s.add(it->second, c);
}

}  // namespace

Polynomial add(const Polynomial& p, const Polynomial& q)
{
    require_same(p.semiring(), q.semiring());
    const bool swap = q.size() > p.size();
    const Polynomial& big = swap ? q : p;
    const Polynomial& small = swap ? p : q;
    Polynomial::Terms t = big.terms();
    for (const auto& [w, c] : small.terms()) accumulate(t, p.semiring(), w, c);
    return Polynomial::adopt(p.semiring(), std::move(t));
}

Polynomial scale(const Element& s, const Polynomial& p)
{
    Polynomial::Terms t;
    const Semiring ring = p.semiring();
    if (ring.is_zero(s)) return Polynomial(ring);
    if (s == ring.one()) return p;
    for (const auto& [w, c] : p.terms()) t.emplace_hint(t.end(), w, ring.mul(s, c));
    return Polynomial::adopt(ring, std::move(t));
}

Polynomial multiply(const Polynomial& p, const Polynomial& q)
{
    require_same(p.semiring(), q.semiring());
    const Semiring ring = p.semiring();
    Polynomial::Terms t;
    for (const auto& [u, a] : p.terms())
        for (const auto& [v, b] : q.terms()) accumulate(t, ring, concat(u, v), ring.mul(a, b));
    return Polynomial::adopt(ring, std::move(t));
}

Polynomial substitute(const Polynomial& p, const Assignment& sigma)
{
    const Semiring ring = p.semiring();
    if (!ring.commutative()) throw NonCommutativeSemiring();
    Polynomial result(ring);
    for (const auto& [word, c] : p.terms()) {
        Polynomial product = Polynomial::one(ring);
        for (const Generator& g : word) {
            auto it = sigma.find(g);
            if (it != sigma.end()) {
                product = multiply(product, it->second);
            } else if (g.is_terminal()) {
                product = multiply(product, Polynomial::unit(g, ring));
            } else {
                throw UnboundVariable(g.id);
            }
            if (product.is_zero()) break;
        }
        result = add(result, scale(c, product));
    }
    return result;
}

}  // namespace lff::algebra
