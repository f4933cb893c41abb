#pragma once

#include <concepts>
#include <utility>
#include <vector>

#include "lff/kernel/alphabet.hpp"

namespace lff::kernel {

/// A deterministic system whose states are effect values: everything the
/// behaviour queries need. Values must be in canonical form so that == is
/// behaviour-preserving identity and < can key memo tables.
template <class S>
concept DeterminizedSystem = requires(const S& sys, const typename S::Value& v, Letter a) {
    typename S::Value;
    typename S::Output;
    { sys.alphabet_size() } -> std::convertible_to<std::size_t>;
    { sys.output(v) } -> std::convertible_to<typename S::Output>;
    { sys.step(v, a) } -> std::convertible_to<typename S::Value>;
} && std::totally_ordered<typename S::Value> && std::equality_comparable<typename S::Output>;

/// A finite coalgebra x: X -> B x (TX)^Sigma. States are 0..n-1; the
/// transition table is state-major.
template <class V, class O>
class MooreSystem {
public:
    using Value = V;
    using Output = O;

    MooreSystem(std::size_t alphabet_size, std::vector<Output> outputs, std::vector<Value> transitions)
        : alphabet_size_(alphabet_size), outputs_(std::move(outputs)), transitions_(std::move(transitions))
    {
        if (transitions_.size() != outputs_.size() * alphabet_size_)
            throw Error("transition table is not total on states x alphabet");
    }

    std::size_t state_count() const { return outputs_.size(); }
    std::size_t alphabet_size() const { return alphabet_size_; }
    decltype(auto) output(StateId s) const { return outputs_.at(s); }
    const Value& transition(StateId s, Letter a) const { return transitions_.at(s * alphabet_size_ + a); }

private:
    std::size_t alphabet_size_;
    std::vector<Output> outputs_;
    std::vector<Value> transitions_;
};

/// A side-effect monad T together with the lifting of B x (-)^Sigma to
/// T-algebras, presented by what the generalized powerset construction
/// needs: the unit and the extension of a coalgebra along the free algebra.
template <class E>
concept Effect = requires(const E& e, StateId s, const typename E::Value& v, Letter a,
                          const MooreSystem<typename E::Value, typename E::Output>& m) {
    typename E::Value;
    typename E::Output;
    { e.unit(s) } -> std::same_as<typename E::Value>;
    { e.lifted_output(m, v) } -> std::convertible_to<typename E::Output>;
    { e.lifted_step(m, v, a) } -> std::convertible_to<typename E::Value>;
};

/// The determinization x# : TX -> H(TX) of a finite HT-coalgebra.
template <Effect E>
class Determinization {
public:
    using Value = typename E::Value;
    using Output = typename E::Output;
    using Base = MooreSystem<Value, Output>;

    explicit Determinization(Base base, E effect = {}) : base_(std::move(base)), effect_(std::move(effect)) {}

    std::size_t alphabet_size() const { return base_.alphabet_size(); }
    Output output(const Value& v) const { return effect_.lifted_output(base_, v); }
    Value step(const Value& v, Letter a) const { return effect_.lifted_step(base_, v, a); }
    Value unit(StateId s) const { return effect_.unit(s); }

    const Base& base() const { return base_; }
    const E& effect() const { return effect_; }

private:
    Base base_;
    E effect_;
};

}  // namespace lff::kernel
