#pragma once

#include "haarpoly/weyl.hpp"

#include <optional>
#include <string>
#include <vector>

namespace haarpoly {

/** One simple factor of a compact connected group. */
struct SimpleFactor {
    SimpleType type;
    int rank;
    friend bool operator==(const SimpleFactor& a, const SimpleFactor& b) {
        return a.type == b.type && a.rank == b.rank;
    }
};

/** A product of simple factors and a torus, e.g. "SU(3)xSU(2)xT^2".
 *
 *  Grammar:  group  := factor ('x' factor)*
 *            factor := 'SU(' nat ')' | 'T^' nat | letter nat
 *  'SU(n)' means the type-A factor of rank n-1 (n >= 2); 'T^k' contributes k
 *  to the torus dimension; a bare letter in A..G with a rank ("B3", "G2")
 *  names any simple type directly. A group needs at least one simple factor
 *  or a positive torus dimension. */
struct GroupSpec {
    std::vector<SimpleFactor> factors;
    int torus_dim = 0;

    static GroupSpec parse(const std::string& text); // throws ParseError / InvalidTypeError
    std::string str() const;

    void validate() const; // throws InvalidTypeError if structurally empty/invalid
};

enum class VarRole : char { X = 'x', W = 'w', Z = 'z', U = 'u' };

/** Where one scalar variable of the parametrization lives. factor is the
 *  0-based simple-factor number, or -1 for torus coordinates. index is
 *  0-based within the factor's own block. */
struct VariableInfo {
    VarRole role;
    int factor;
    int index;
};

/** Everything the integration chart of one simple factor contributes:
 *  the word, its root sequence (with one weight exponent per letter), and
 *  the offsets of this factor's variables in the global layout. */
struct FactorMeasure {
    SimpleFactor factor;
    ReducedWord word;
    BetaSequence roots;
    int length = 0; // L = word length = #positive roots
    int rank = 0;   // R = number of torus coordinates of the factor
    int x_offset = 0;
    int w_offset = 0; // circle index of this factor's first w variable
    int z_offset = 0; // circle index of this factor's first z variable
};

/** The exact integration data of a group: N = n_x cell coordinates in [0,1]
 *  with density (2 e_j) t^(2 e_j - 1) dt, and M = n_circle circle variables
 *  averaged over the unit circle. constant = prod_j (2 e_j) is the overall
 *  normalization; with the densities above the total mass is exactly 1. */
struct MeasureSpec {
    GroupSpec group;
    std::vector<FactorMeasure> factors;
    int n_x = 0;
    int n_circle = 0;
    int torus_offset = 0; // circle index of the first torus coordinate
    std::vector<int> exponents; // e_j for each x variable, in layout order
    Rational constant = Rational(1);
    std::vector<VariableInfo> layout_x;
    std::vector<VariableInfo> layout_circle;
};

/** Build the measure data for a group. words, when given, supplies one
 *  reduced word per simple factor; each must be a longest word (validated
 *  through its root sequence). Without words the canonical longest words are
 *  used. Throws NotReducedError / InvalidTypeError / DimensionMismatchError. */
MeasureSpec measure_spec(const GroupSpec& group,
                         const std::optional<std::vector<ReducedWord>>& words = std::nullopt);

} // namespace haarpoly
