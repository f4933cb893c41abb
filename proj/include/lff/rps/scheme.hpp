#pragma once

#include <optional>
#include <variant>

#include "lff/kernel/equivalence.hpp"
#include "lff/rps/term.hpp"

namespace lff::rps {

class IllRanked : public Error {
public:
    using Error::Error;
};

/// A body whose root is itself a recursive call. `path` names the
/// operation and the symbol found at its root.
class UnguardedScheme : public Error {
public:
    explicit UnguardedScheme(std::vector<std::string> path);
    const std::vector<std::string>& path() const { return path_; }

private:
    std::vector<std::string> path_;
};

/// A guarded recursive program scheme: new operations defined by terms
/// over the givens, the new operations and their parameters.
class Scheme {
public:
    struct Definition {
        std::string name;
        std::vector<std::string> params;
        Term body;

        friend bool operator==(const Definition&, const Definition&) = default;
    };

    /// Validates names, ranks, parameter use and guardedness.
    Scheme(Signature givens, std::vector<Definition> definitions);

    const Signature& givens() const { return givens_; }
    const std::vector<Definition>& definitions() const { return definitions_; }
    const Definition* find_definition(std::string_view name) const;
    bool is_given(std::string_view name) const { return givens_.contains(name); }

    /// Throws IllRanked unless every application in `t` matches its
    /// symbol's arity. Variables may be free.
    void check_term(const Term& t) const;

    friend bool operator==(const Scheme&, const Scheme&) = default;

private:
    Signature givens_;
    std::vector<Definition> definitions_;
};

/// Unravels `root` into a prefix of its solution. Depth counts from 1 at
/// the root: a recursive call at depth >= `depth` is not unfolded, and any
/// subtree rooted at depth >= `depth` that still holds such a call becomes
/// bottom. Finite parts made of givens and variables are never cut.
TreePrefix unfold(const Scheme& s, const Term& root, std::size_t depth);

struct DifferingPath {
    /// Child indices from the root, 0-based.
    std::vector<std::size_t> path;
};

using PrefixVerdict = std::variant<kernel::Equal, DifferingPath>;

/// Node-by-node comparison of the two unfoldings at `depth`, bottom
/// matching anything. Reports the first difference in preorder.
PrefixVerdict prefix_equal(const Scheme& s1, const Term& r1, const Scheme& s2, const Term& r2, std::size_t depth);
PrefixVerdict prefix_compare(const TreePrefix& a, const TreePrefix& b);

}  // namespace lff::rps
