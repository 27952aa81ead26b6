#pragma once

#include "haarpoly/expr.hpp"
#include "haarpoly/laurent.hpp"
#include "haarpoly/measure.hpp"

#include <complex>
#include <vector>

namespace haarpoly {

/** Small dense complex matrix, row-major. Only what the numeric evaluation
 *  needs: products, conjugate transpose, determinant of small sizes. */
struct CMatrix {
    int n = 0;
    std::vector<std::complex<double>> a;

    CMatrix() = default;
    explicit CMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0.0) {}
    static CMatrix identity(int size);

    std::complex<double>& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const std::complex<double>& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    friend CMatrix operator*(const CMatrix& x, const CMatrix& y);
    CMatrix conj_transpose() const;
    std::complex<double> det() const; // Gaussian elimination with partial pivoting
};

/** Square matrix of Laurent polynomials (row-major). */
struct PolyMatrix {
    int n = 0;
    std::vector<LaurentPoly> a;

    PolyMatrix() = default;
    PolyMatrix(int size, int n_x, int n_circle);
    static PolyMatrix identity(int size, int n_x, int n_circle);

    LaurentPoly& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const LaurentPoly& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    friend PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y);
    /** Determinant by cofactor expansion (exact). */
    LaurentPoly det() const;
};

/** The square-root-free coordinate matrices of one special-unitary factor:
 *  Q evaluates the entry symbols a[i,j], Qc the conjugate symbols c[i,j].
 *  Qc = (Q^{-1})^T exactly, so Q Qc^T = identity and det Q = 1 as Laurent
 *  polynomial identities. */
struct CoordinateMatrixPair {
    PolyMatrix Q;
    PolyMatrix Qc;
};

/** A numeric point of the group: one unitary matrix per special-unitary
 *  factor plus the torus phases. */
struct GroupPoint {
    std::vector<CMatrix> factors;
    std::vector<std::complex<double>> torus;
};

/** Ties a measure layout to the symbolic and numeric coordinate charts. */
class GroupModel {
public:
    explicit GroupModel(MeasureSpec spec);

    const MeasureSpec& measure() const { return spec_; }

    /** The Q/Qc pair of factor f (0-based). Throws UnsupportedFactorError
     *  unless the factor has type A. Built on first use, then cached. */
    const CoordinateMatrixPair& coordinates(int f) const;

    /** Evaluate an expression into the Laurent algebra of the chart:
     *  a<f>[i,j] -> Q_f[i,j], c<f>[i,j] -> Qc_f[i,j], u[k] -> the k-th torus
     *  circle variable. Throws IndexError on out-of-range indices and
     *  UnsupportedFactorError on entry symbols of non-A factors. */
    LaurentPoly reduce(const Expr& e) const;

    /** Exact normalized integral of an expression over the group. */
    GaussianRational integrate(const Expr& e) const;

    /** The unitary matrix of factor f at parameters x in [0,1]^L, w and z on
     *  the unit circle:
     *  prod_j embed_{i_j}([[i w_j sqrt(1-x_j^2), i x_j],
     *                      [i x_j, -i w_j^{-1} sqrt(1-x_j^2)]]) * diag(z).
     *  Throws DomainError when parameters leave their domains. */
    CMatrix factor_point(int f, const std::vector<double>& x,
                         const std::vector<std::complex<double>>& w,
                         const std::vector<std::complex<double>>& z) const;

    /** Assemble a full group point from one global coordinate vector,
     *  x sized n_x and circ sized n_circle, in layout order. */
    GroupPoint point(const std::vector<double>& x,
                     const std::vector<std::complex<double>>& circ) const;

    /** Numeric value of an expression at a group point. */
    std::complex<double> eval(const Expr& e, const GroupPoint& p) const;

private:
    MeasureSpec spec_;
    mutable std::vector<CoordinateMatrixPair> coord_cache_;
    mutable std::vector<bool> coord_built_;

    void check_factor_index(int f) const;
};

} // namespace haarpoly
