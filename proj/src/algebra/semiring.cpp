#include "lff/algebra/semiring.hpp"

namespace lff::algebra {

SemiringMismatch::SemiringMismatch() : Error("semiring mismatch") {}

std::optional<Semiring> Semiring::from_name(std::string_view name)
{
    if (name == "B") return boolean();
    if (name == "N") return natural();
    if (name == "Z") return integer();
    return std::nullopt;
}

std::string_view Semiring::name() const
{
    switch (kind_) {
    case Kind::Boolean: return "B";
    case Kind::Natural: return "N";
    case Kind::Integer: return "Z";
    }
    return "?";
}

Element Semiring::add(const Element& a, const Element& b) const
{
    if (kind_ == Kind::Boolean) return (a.is_zero() && b.is_zero()) ? 0 : 1;
    return a + b;
}

Element Semiring::mul(const Element& a, const Element& b) const
{
    if (kind_ == Kind::Boolean) return (a.is_zero() || b.is_zero()) ? 0 : 1;
    return a * b;
}

bool Semiring::contains(const Element& a) const
{
    switch (kind_) {
    case Kind::Boolean: return a == 0 || a == 1;
    case Kind::Natural: return a >= 0;
    case Kind::Integer: return true;
    }
    return false;
}

Element Semiring::coerce(const Element& a) const
{
    if (kind_ == Kind::Boolean) return a.is_zero() ? 0 : 1;
    return a;
}

void require_same(Semiring a, Semiring b)
{
    if (a != b) throw SemiringMismatch();
}

}  // namespace lff::algebra
