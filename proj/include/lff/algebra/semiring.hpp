#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

#include "lff/error.hpp"

namespace lff::algebra {

/// Exact arbitrary-precision integer; the carrier of every built-in semiring.
using Element = boost::multiprecision::cpp_int;

class SemiringMismatch : public Error {
public:
    SemiringMismatch();
};

/// One of the exact coefficient semirings: booleans, naturals or integers.
///
/// Elements are plain integers; the semiring decides which integers are
/// legal and how + and * act on them (in B, 1 + 1 = 1).
class Semiring {
public:
    enum class Kind { Boolean, Natural, Integer };

    constexpr explicit Semiring(Kind kind) : kind_(kind) {}

    static constexpr Semiring boolean() { return Semiring(Kind::Boolean); }
    static constexpr Semiring natural() { return Semiring(Kind::Natural); }
    static constexpr Semiring integer() { return Semiring(Kind::Integer); }

    /// Parses "B", "N" or "Z".
    static std::optional<Semiring> from_name(std::string_view name);

    Kind kind() const { return kind_; }
    std::string_view name() const;

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element add(const Element& a, const Element& b) const;
    Element mul(const Element& a, const Element& b) const;
    bool is_zero(const Element& a) const { return a.is_zero(); }

    /// True when `a` is a legal element (0/1 for B, non-negative for N).
    bool contains(const Element& a) const;

    /// Maps an arbitrary integer into the carrier (used by parsers).
    Element coerce(const Element& a) const;

    // All built-in semirings commute; the flag is what the polynomial monad checks.
    bool commutative() const { return true; }

    friend bool operator==(Semiring, Semiring) = default;

private:
    Kind kind_;
};

void require_same(Semiring a, Semiring b);

}  // namespace lff::algebra
