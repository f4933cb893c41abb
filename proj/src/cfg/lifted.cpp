#include "lff/cfg/lifted.hpp"

namespace lff::cfg {

namespace {

void require_compatible(const LiftedPair& p, const LiftedPair& q)
{
    if (p.deriv.size() != q.deriv.size()) throw kernel::AlphabetError("lifted pairs over different alphabets");
    algebra::require_same(p.semiring, q.semiring);
}

}  // namespace

LiftedPair zero_pair(Semiring s, std::size_t letters)
{
    return LiftedPair{s, s.zero(), std::vector<Polynomial>(letters, Polynomial(s))};
}

LiftedPair one_pair(Semiring s, std::size_t letters)
{
    return LiftedPair{s, s.one(), std::vector<Polynomial>(letters, Polynomial(s))};
}

LiftedPair pointing(Semiring s, std::size_t letters, Letter b)
{
    LiftedPair p = zero_pair(s, letters);
    p.deriv.at(b) = Polynomial::one(s);
    return p;
}

Polynomial fuse(const LiftedPair& p, const kernel::Alphabet& terminals)
{
    if (p.deriv.size() != terminals.size()) throw kernel::AlphabetError("derivative not total on the alphabet");
    const Semiring s = p.semiring;
    Polynomial out = Polynomial::constant(s, p.out);
    for (Letter b = 0; b < terminals.size(); ++b) {
        if (p.deriv[b].is_zero()) continue;
        out = out + Polynomial::unit(Generator::terminal(terminals.name(b)), s) * p.deriv[b];
    }
    return out;
}

Polynomial fuse(const LiftedPair& p, const WeightedGrammar& g) { return fuse(p, g.terminals()); }

LiftedPair lift_add(const LiftedPair& p, const LiftedPair& q)
{
    require_compatible(p, q);
    const Semiring s = p.semiring;
    LiftedPair r{s, s.add(p.out, q.out), {}};
    r.deriv.reserve(p.deriv.size());
    for (std::size_t a = 0; a < p.deriv.size(); ++a) r.deriv.push_back(p.deriv[a] + q.deriv[a]);
    return r;
}

LiftedPair lift_scale(const Element& k, const LiftedPair& p)
{
    const Semiring s = p.semiring;
    LiftedPair r{s, s.mul(k, p.out), {}};
    r.deriv.reserve(p.deriv.size());
    for (const auto& d : p.deriv) r.deriv.push_back(algebra::scale(k, d));
    return r;
}

LiftedPair lift_mul(const LiftedPair& p, const LiftedPair& q, const kernel::Alphabet& terminals)
{
    require_compatible(p, q);
    const Semiring s = p.semiring;
    const Polynomial fused = fuse(q, terminals);
    LiftedPair r{s, s.mul(p.out, q.out), {}};
    r.deriv.reserve(p.deriv.size());
    for (std::size_t a = 0; a < p.deriv.size(); ++a)
        r.deriv.push_back(p.deriv[a] * fused + algebra::scale(p.out, q.deriv[a]));
    return r;
}

LiftedPair lift_mul(const LiftedPair& p, const LiftedPair& q, const WeightedGrammar& g)
{
    return lift_mul(p, q, g.terminals());
}

}  // namespace lff::cfg
