#pragma once

#include "haarpoly/rational.hpp"

#include <map>
#include <vector>

namespace haarpoly {

/** The seven families of irreducible root systems. */
enum class SimpleType : char {
    A = 'A',
    B = 'B',
    C = 'C',
    D = 'D',
    E = 'E',
    F = 'F',
    G = 'G',
};

SimpleType simple_type_from_char(char c); // throws InvalidTypeError
char simple_type_char(SimpleType t);

/** A root written in the basis of simple roots: integer coordinates of
 *  length rank. Every root has all coordinates >= 0 or all <= 0. */
using Root = std::vector<int>;

/** An irreducible root system with an invariant inner product, normalized so
 *  long roots have squared length 2. Everything downstream (reflections,
 *  half-sum of positive roots, weight exponents) is exact rational
 *  arithmetic in the simple-root basis.
 *
 *  Simple-root indices in this class are 0-based.
 *
 *  Valid ranks: A >= 1, B >= 2, C >= 2, D >= 3, E in {6,7,8}, F = 4, G = 2.
 */
class RootSystem {
public:
    /** form_scale multiplies the inner product; it exists so tests can check
     *  that exponents do not depend on the normalization. Leave it at 1. */
    RootSystem(SimpleType type, int rank, const Rational& form_scale = Rational(1));

    SimpleType type() const { return type_; }
    int rank() const { return rank_; }

    /** Cartan matrix a[i][j] = 2(alpha_i, alpha_j)/(alpha_i, alpha_i). */
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }

    /** Symmetrized form matrix g[i][j] = (alpha_i, alpha_j). */
    const std::vector<std::vector<Rational>>& form_matrix() const { return form_; }

    /** Inner product of two vectors written in the simple-root basis. */
    Rational form(const std::vector<Rational>& u, const std::vector<Rational>& v) const;
    Rational form(const Root& u, const Root& v) const;

    /** All positive roots, sorted by (height, lexicographic coordinates).
     *  Generated as the reflection closure of the simple roots. */
    const std::vector<Root>& positive_roots() const { return positive_; }
    std::size_t num_positive_roots() const { return positive_.size(); }
    bool is_positive_root(const Root& beta) const;

    /** Half the sum of the positive roots, in simple-root coordinates. */
    const std::vector<Rational>& rho() const { return rho_; }

    /** 2(v, alpha_i)/(alpha_i, alpha_i) = sum_j v_j a[i][j]. */
    Rational coroot_pairing(const std::vector<Rational>& v, int i) const;
    int coroot_pairing(const Root& v, int i) const;

    /** Simple reflection s_i acting on simple-root coordinates. */
    Root reflect(int i, const Root& v) const;
    std::vector<Rational> reflect(int i, const std::vector<Rational>& v) const;

    /** Weight exponent e(beta) = 2(rho, beta)/(beta, beta) of a positive
     *  root; always a positive integer, and 1 exactly on simple roots.
     *  Throws NotARootError if beta is not a positive root. */
    int weight_exponent(const Root& beta) const;

private:
    SimpleType type_;
    int rank_;
    std::vector<std::vector<int>> cartan_;
    std::vector<std::vector<Rational>> form_;
    std::vector<Root> positive_;
    std::vector<Rational> rho_;
    std::map<Root, int> positive_index_;
};

} // namespace haarpoly
