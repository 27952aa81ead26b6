#include "haarpoly/weyl.hpp"

#include "haarpoly/errors.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace haarpoly {

namespace {

void check_letters(const RootSystem& rs, const ReducedWord& word) {
    for (int letter : word.letters) {
        if (letter < 1 || letter > rs.rank()) {
            throw IndexError("word letter " + std::to_string(letter) + " outside 1.." +
                             std::to_string(rs.rank()));
        }
    }
}

bool is_positive(const Root& r) {
    return std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; });
}

} // namespace

BetaSequence beta_sequence(const RootSystem& rs, const ReducedWord& word) {
    check_letters(rs, word);
    const std::size_t L = word.length();
    BetaSequence seq;
    seq.betas.resize(L);
    seq.gammas.resize(L);
    seq.exponents.resize(L);

    std::set<Root> seen;
    for (std::size_t j = 0; j < L; ++j) {
        Root beta(rs.rank(), 0);
        beta[word.letters[j] - 1] = 1;
        for (std::size_t k = j; k-- > 0;) beta = rs.reflect(word.letters[k] - 1, beta);
        if (!is_positive(beta)) {
            throw NotReducedError("word is not reduced: letter " + std::to_string(j + 1) +
                                  " produces a negative root");
        }
        if (!seen.insert(beta).second) {
            throw NotReducedError("word is not reduced: repeated root at letter " + std::to_string(j + 1));
        }
        seq.betas[j] = beta;

        // gamma_j = s_{i_L} ... s_{i_j+1}(alpha_{i_j}), nearest reflection
        // applied first.
        Root gamma(rs.rank(), 0);
        gamma[word.letters[j] - 1] = 1;
        for (std::size_t k = j + 1; k < L; ++k) gamma = rs.reflect(word.letters[k] - 1, gamma);
        seq.gammas[j] = gamma;
        seq.exponents[j] = rs.weight_exponent(beta);
    }
    return seq;
}

bool is_longest_word(const RootSystem& rs, const ReducedWord& word) {
    if (word.length() != rs.num_positive_roots()) return false;
    beta_sequence(rs, word); // throws if not reduced
    return true;
}

ReducedWord canonical_longest_word(const RootSystem& rs) {
    ReducedWord word;
    if (rs.type() == SimpleType::A) {
        for (int k = 1; k <= rs.rank(); ++k) {
            for (int i = k; i >= 1; --i) word.letters.push_back(i);
        }
        return word;
    }
    std::vector<Rational> lambda(rs.rho());
    for (Rational& c : lambda) c = -c;
    std::vector<int> applied;
    for (;;) {
        int pick = -1;
        for (int i = 0; i < rs.rank(); ++i) {
            if (rs.coroot_pairing(lambda, i) < 0) {
                pick = i;
                break;
            }
        }
        if (pick < 0) break;
        lambda = rs.reflect(pick, lambda);
        applied.push_back(pick + 1);
    }
    if (applied.size() != rs.num_positive_roots()) {
        throw InternalError("greedy longest-word walk has wrong length");
    }
    word.letters.assign(applied.rbegin(), applied.rend());
    return word;
}

} // namespace haarpoly
