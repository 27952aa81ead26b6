#pragma once

#include "haarpoly/measure.hpp"
#include "haarpoly/rational.hpp"

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace haarpoly {

/** Exponent key of one monomial: the n_x cell exponents (always >= 0)
 *  followed by the n_circle circle exponents (any sign). */
using ExpVec = std::vector<int>;

/** A sparse Laurent polynomial over Q(i) in n_x cell variables x_1..x_N and
 *  n_circle circle variables z_1..z_M. Stored as a map from exponent vector
 *  to nonzero coefficient; the map order is the canonical term order, so
 *  equal polynomials compare equal structurally. */
class LaurentPoly {
public:
    LaurentPoly() : nx_(0), nc_(0) {}
    LaurentPoly(int n_x, int n_circle);

    static LaurentPoly constant(int n_x, int n_circle, const GaussianRational& c);
    /** x_i^power, 0-based i, power >= 0. */
    static LaurentPoly x_var(int n_x, int n_circle, int i, int power = 1);
    /** z_i^power, 0-based i, power any sign. */
    static LaurentPoly circle_var(int n_x, int n_circle, int i, int power = 1);
    static LaurentPoly monomial(int n_x, int n_circle, const ExpVec& exps, const GaussianRational& c);

    int n_x() const { return nx_; }
    int n_circle() const { return nc_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<ExpVec, GaussianRational>& terms() const { return terms_; }

    /** Coefficient of one monomial (zero if absent). */
    GaussianRational coeff(const ExpVec& exps) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const GaussianRational& c, LaurentPoly p);
    friend LaurentPoly operator-(LaurentPoly p);
    LaurentPoly pow(unsigned long n) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.nx_ == b.nx_ && a.nc_ == b.nc_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /** The conjugation involution: coefficients conjugated, circle exponents
     *  negated, cell exponents unchanged. On the real domain (x in [0,1],
     *  circle variables on the unit circle) this is pointwise complex
     *  conjugation. */
    LaurentPoly conjugate() const;

    /** The set of circle exponent vectors that occur, sorted. Gathering
     *  terms by circle exponents cannot cancel (cell monomials are linearly
     *  independent), so this is exactly the support over the circle block. */
    std::vector<std::vector<int>> spectrum() const;

    /** Numeric evaluation; x real, circ on (or off) the unit circle. */
    std::complex<double> eval(const std::vector<double>& x,
                              const std::vector<std::complex<double>>& circ) const;

    /** Largest total cell degree, and largest |circle exponent| per term
     *  (both 0 for the zero polynomial); used for quadrature budgets. */
    int max_x_degree() const;
    int max_circle_degree() const;

    /** Canonical text, e.g. "(1/2+i)*x1^2*z2^-1 + 1". x variables print as
     *  x1..xN and circle variables as z1..zM in layout order. */
    std::string str() const;

private:
    int nx_, nc_;
    std::map<ExpVec, GaussianRational> terms_;

    void check_same_shape(const LaurentPoly& o) const;
    void add_term(const ExpVec& e, const GaussianRational& c);
};

/** Exact normalized integral of p against the product measure described by
 *  spec: each cell variable x_j integrates over [0,1] with density
 *  (2 e_j) x^(2 e_j - 1), each circle variable averages over the unit
 *  circle (so only terms with all circle exponents zero survive). Equals
 *  constant * sum over surviving terms of coeff * prod_j 1/(a_j + 2 e_j)
 *  where constant = prod_j 2 e_j and a_j is the x_j exponent.
 *  Throws DimensionMismatchError if shapes disagree. */
GaussianRational weighted_integral(const LaurentPoly& p, const MeasureSpec& spec);

} // namespace haarpoly
