#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "haarpoly/errors.hpp"
#include "haarpoly/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

using namespace haarpoly;

namespace {

/** Type A_n acts on {0..n} by the transpositions s_i = (i-1, i); composing a
 *  word left to right gives the permutation oracle used below. */
std::vector<int> apply_word_to_identity(int n, const ReducedWord& word) {
    std::vector<int> perm(static_cast<std::size_t>(n) + 1);
    std::iota(perm.begin(), perm.end(), 0);
    // w = s_{i_1} ... s_{i_L} acting on positions: apply rightmost first.
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
        std::swap(perm[*it - 1], perm[*it]);
    }
    return perm;
}

int inversions(const std::vector<int>& perm) {
    int count = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = i + 1; j < perm.size(); ++j) count += perm[i] > perm[j];
    }
    return count;
}

} // namespace

TEST_CASE("canonical longest words for type A") {
    CHECK(canonical_longest_word(RootSystem(SimpleType::A, 1)) == ReducedWord{{1}});
    CHECK(canonical_longest_word(RootSystem(SimpleType::A, 2)) == ReducedWord{{1, 2, 1}});
    CHECK(canonical_longest_word(RootSystem(SimpleType::A, 3)) == ReducedWord{{1, 2, 1, 3, 2, 1}});
}

TEST_CASE("type A canonical word realizes the order-reversing permutation") {
    for (int n = 1; n <= 5; ++n) {
        RootSystem rs(SimpleType::A, n);
        ReducedWord word = canonical_longest_word(rs);
        std::vector<int> perm = apply_word_to_identity(n, word);
        std::vector<int> reversal(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) reversal[k] = n - k;
        CHECK(perm == reversal);
        CHECK(static_cast<std::size_t>(inversions(reversal)) == word.length());
    }
}

TEST_CASE("canonical words are longest words in every type") {
    std::vector<std::pair<SimpleType, std::vector<int>>> families = {
        {SimpleType::A, {1, 2, 3, 4}}, {SimpleType::B, {2, 3, 4}}, {SimpleType::C, {2, 3, 4}},
        {SimpleType::D, {3, 4, 5}},    {SimpleType::E, {6, 7}},    {SimpleType::F, {4}},
        {SimpleType::G, {2}},
    };
    for (const auto& [type, ranks] : families) {
        for (int rank : ranks) {
            RootSystem rs(type, rank);
            ReducedWord word = canonical_longest_word(rs);
            CHECK(word.length() == rs.num_positive_roots());
            CHECK(is_longest_word(rs, word));
        }
    }
}

TEST_CASE("beta and gamma sequences on rank-2 type A") {
    RootSystem rs(SimpleType::A, 2);

    SUBCASE("word 1,2,1") {
        BetaSequence seq = beta_sequence(rs, ReducedWord{{1, 2, 1}});
        CHECK(seq.betas == std::vector<Root>{{1, 0}, {1, 1}, {0, 1}});
        CHECK(seq.gammas == std::vector<Root>{{0, 1}, {1, 1}, {1, 0}});
        CHECK(seq.exponents == std::vector<int>{1, 2, 1});
    }
    SUBCASE("word 2,1,2") {
        BetaSequence seq = beta_sequence(rs, ReducedWord{{2, 1, 2}});
        CHECK(seq.betas == std::vector<Root>{{0, 1}, {1, 1}, {1, 0}});
        CHECK(seq.gammas == std::vector<Root>{{1, 0}, {1, 1}, {0, 1}});
        CHECK(seq.exponents == std::vector<int>{1, 2, 1});
    }
}

TEST_CASE("longest-word betas enumerate the positive roots exactly once") {
    for (auto [type, rank] : std::vector<std::pair<SimpleType, int>>{{SimpleType::A, 4},
                                                                     {SimpleType::B, 3},
                                                                     {SimpleType::C, 3},
                                                                     {SimpleType::D, 4},
                                                                     {SimpleType::F, 4},
                                                                     {SimpleType::G, 2}}) {
        RootSystem rs(type, rank);
        BetaSequence seq = beta_sequence(rs, canonical_longest_word(rs));
        std::vector<Root> betas = seq.betas;
        std::sort(betas.begin(), betas.end());
        std::vector<Root> positives = rs.positive_roots();
        std::sort(positives.begin(), positives.end());
        CHECK(betas == positives);

        std::vector<Root> gammas = seq.gammas;
        std::sort(gammas.begin(), gammas.end());
        CHECK(gammas == positives);
    }
}

TEST_CASE("reflections preserve the invariant form") {
    RootSystem rs(SimpleType::B, 3);
    std::vector<Root> vectors = {{1, 0, 0}, {0, 1, 2}, {3, -1, 1}, {2, 2, 2}};
    for (int i = 0; i < 3; ++i) {
        for (const Root& u : vectors) {
            for (const Root& v : vectors) {
                CHECK(rs.form(rs.reflect(i, u), rs.reflect(i, v)) == rs.form(u, v));
            }
        }
    }
}

TEST_CASE("non-reduced and out-of-range words are rejected") {
    RootSystem rs(SimpleType::A, 2);
    CHECK_THROWS_AS(beta_sequence(rs, ReducedWord{{1, 1, 2}}), NotReducedError);
    CHECK_THROWS_AS(beta_sequence(rs, ReducedWord{{1, 2, 1, 2}}), NotReducedError);
    CHECK_THROWS_AS(beta_sequence(rs, ReducedWord{{0}}), IndexError);
    CHECK_THROWS_AS(beta_sequence(rs, ReducedWord{{3}}), IndexError);
    CHECK_FALSE(is_longest_word(rs, ReducedWord{{1, 2}}));
    CHECK_FALSE(is_longest_word(rs, ReducedWord{{}}));
    CHECK_THROWS_AS(is_longest_word(rs, ReducedWord{{1, 1, 2}}), NotReducedError);
}
