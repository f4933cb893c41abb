#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "lff/error.hpp"

namespace lff::rps {

/// Ranked alphabet: symbol name to arity.
using Signature = std::map<std::string, std::size_t, std::less<>>;

/// A finite term: an application of a symbol to arguments, or a variable.
struct Term {
    enum class Kind : unsigned char { Apply, Variable };

    Kind kind = Kind::Variable;
    std::string name;
    std::vector<Term> args;

    static Term variable(std::string name) { return {Kind::Variable, std::move(name), {}}; }
    static Term apply(std::string name, std::vector<Term> args = {}) { return {Kind::Apply, std::move(name), std::move(args)}; }

    bool is_variable() const { return kind == Kind::Variable; }

    friend bool operator==(const Term&, const Term&);
    friend std::strong_ordering operator<=>(const Term&, const Term&);
};

/// A finite prefix of a possibly infinite tree: like a term, plus the
/// truncation leaf (bottom) standing for the unexplored rest.
struct TreePrefix {
    enum class Kind : unsigned char { Apply, Variable, Bottom };

    Kind kind = Kind::Bottom;
    std::string name;
    std::vector<TreePrefix> children;

    static TreePrefix bottom() { return {}; }
    static TreePrefix variable(std::string name) { return {Kind::Variable, std::move(name), {}}; }
    static TreePrefix apply(std::string name, std::vector<TreePrefix> children = {})
    {
        return {Kind::Apply, std::move(name), std::move(children)};
    }

    bool is_bottom() const { return kind == Kind::Bottom; }
    bool complete() const;

    friend bool operator==(const TreePrefix&, const TreePrefix&);
    friend std::strong_ordering operator<=>(const TreePrefix&, const TreePrefix&);
};

/// Writes f(a,b) with no spaces; bottom prints as "⊥".
std::string to_string(const Term& t);
std::string to_string(const TreePrefix& t);

/// a is below b in the prefix order: equal except where a has bottom.
bool is_prefix_of(const TreePrefix& a, const TreePrefix& b);

/// Number of distinct subtrees that contain no bottom leaf.
std::size_t subtree_census(const TreePrefix& p);

}  // namespace lff::rps
