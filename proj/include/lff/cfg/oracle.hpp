#pragma once

#include <span>

#include "lff/cfg/grammar.hpp"

namespace lff::cfg {

class BoundExceeded : public Error {
public:
    using Error::Error;
};

/// Coefficient of `word` computed without derivatives: sums the weights of
/// all leftmost derivations of `word` from `start`, reading the grammar as
/// productions x -> output(x) | a . rule(x, a). Sentential forms holding
/// more terminals than input remains are pruned. Throws BoundExceeded when
/// the word is longer than `max_length`.
Element oracle_coefficient(const WeightedGrammar& g, const Polynomial& start, std::span<const Letter> word,
                           std::size_t max_length = 16);

}  // namespace lff::cfg
