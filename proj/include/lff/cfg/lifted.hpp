#pragma once

#include <vector>

#include "lff/cfg/grammar.hpp"

namespace lff::cfg {

/// An element (o, delta) of S x A^Sigma with A = S<X + Sigma>: an output
/// weight together with one derivative per terminal.
struct LiftedPair {
    Semiring semiring;
    Element out;
    std::vector<Polynomial> deriv;

    friend bool operator==(const LiftedPair&, const LiftedPair&) = default;
};

/// (0, a -> 0).
LiftedPair zero_pair(Semiring s, std::size_t letters);
/// (1, a -> 0), the monoid unit.
LiftedPair one_pair(Semiring s, std::size_t letters);
/// (0, rho_b): the image of terminal b under the Sigma-pointing.
LiftedPair pointing(Semiring s, std::size_t letters, Letter b);

/// <o, delta> = o * eps + sum_b b * delta(b). The pair read back as a
/// single polynomial that has output o and derivatives delta.
Polynomial fuse(const LiftedPair& p, const kernel::Alphabet& terminals);
Polynomial fuse(const LiftedPair& p, const WeightedGrammar& g);

LiftedPair lift_add(const LiftedPair& p, const LiftedPair& q);
LiftedPair lift_scale(const Element& s, const LiftedPair& p);

/// (o1, d1) * (o2, d2) = (o1 o2, a -> d1(a) <o2, d2> + o1 d2(a)).
LiftedPair lift_mul(const LiftedPair& p, const LiftedPair& q, const kernel::Alphabet& terminals);
LiftedPair lift_mul(const LiftedPair& p, const LiftedPair& q, const WeightedGrammar& g);

}  // namespace lff::cfg
