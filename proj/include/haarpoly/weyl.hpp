#pragma once

#include "haarpoly/rootsystem.hpp"

#include <vector>

namespace haarpoly {

/** A word s_{i_1} ... s_{i_L} in the simple reflections. Letters are 1-based
 *  simple-root indices, the same convention the command line and JSON use. */
struct ReducedWord {
    std::vector<int> letters;

    std::size_t length() const { return letters.size(); }
    friend bool operator==(const ReducedWord& a, const ReducedWord& b) { return a.letters == b.letters; }
};

/** The root bookkeeping attached to a reduced word w = s_{i_1} ... s_{i_L}:
 *    betas[j]  = s_{i_1} ... s_{i_j-1} (alpha_{i_j})   (1-based j)
 *    gammas[j] = -w^{-1}(betas[j]) = s_{i_L} ... s_{i_j+1}(alpha_{i_j})
 *    exponents[j] = weight_exponent(betas[j])
 *  For a longest word the betas enumerate the positive roots exactly once,
 *  and so do the gammas. */
struct BetaSequence {
    std::vector<Root> betas;
    std::vector<Root> gammas;
    std::vector<int> exponents;
};

/** Validates that the word is reduced (each beta_j positive, all distinct)
 *  and returns the full sequence. Throws NotReducedError otherwise, and
 *  IndexError for letters outside 1..rank. */
BetaSequence beta_sequence(const RootSystem& rs, const ReducedWord& word);

/** True when the word is reduced of maximal length (the betas exhaust the
 *  positive roots). False for any shorter word; a word of full length that
 *  is not reduced throws NotReducedError, so callers see the reason. */
bool is_longest_word(const RootSystem& rs, const ReducedWord& word);

/** The canonical reduced word for the longest Weyl element.
 *
 *  Type A uses the closed form (1)(2,1)(3,2,1)...(n,...,1). Every other type
 *  uses a deterministic greedy descent: starting from lambda = -rho,
 *  repeatedly apply s_i for the smallest i with <lambda, alpha_i^vee> < 0
 *  until lambda = rho; the word is the sequence of applied letters reversed.
 *  Each greedy step crosses exactly one wall toward the dominant chamber, so
 *  the result is reduced of length #positive roots. */
ReducedWord canonical_longest_word(const RootSystem& rs);

} // namespace haarpoly
