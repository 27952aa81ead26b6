#include "haarpoly/groupmodel.hpp"

#include "haarpoly/errors.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace haarpoly {

CMatrix CMatrix::identity(int size) {
    CMatrix m(size);
    for (int i = 0; i < size; ++i) m.at(i, i) = 1.0;
    return m;
}

CMatrix operator*(const CMatrix& x, const CMatrix& y) {
    if (x.n != y.n) throw DimensionMismatchError("matrix sizes differ");
    CMatrix out(x.n);
    for (int i = 0; i < x.n; ++i) {
        for (int k = 0; k < x.n; ++k) {
            std::complex<double> v = x.at(i, k);
            if (v == 0.0) continue;
            for (int j = 0; j < x.n; ++j) out.at(i, j) += v * y.at(k, j);
        }
    }
    return out;
}

CMatrix CMatrix::conj_transpose() const {
    CMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) out.at(j, i) = std::conj(at(i, j));
    }
    return out;
}

std::complex<double> CMatrix::det() const {
    CMatrix m = *this;
    std::complex<double> d = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r) {
            if (std::abs(m.at(r, col)) > std::abs(m.at(pivot, col))) pivot = r;
        }
        if (m.at(pivot, col) == 0.0) return 0.0;
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            std::complex<double> f = m.at(r, col) / m.at(col, col);
            for (int j = col; j < n; ++j) m.at(r, j) -= f * m.at(col, j);
        }
    }
    return d;
}

PolyMatrix::PolyMatrix(int size, int n_x, int n_circle)
    : n(size), a(static_cast<std::size_t>(size) * size, LaurentPoly(n_x, n_circle)) {}

PolyMatrix PolyMatrix::identity(int size, int n_x, int n_circle) {
    PolyMatrix m(size, n_x, n_circle);
    for (int i = 0; i < size; ++i) m.at(i, i) = LaurentPoly::constant(n_x, n_circle, GaussianRational(1));
    return m;
}

PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y) {
    if (x.n != y.n) throw DimensionMismatchError("matrix sizes differ");
    PolyMatrix out(x.n, x.a[0].n_x(), x.a[0].n_circle());
    for (int i = 0; i < x.n; ++i) {
        for (int k = 0; k < x.n; ++k) {
            if (x.at(i, k).is_zero()) continue;
            for (int j = 0; j < x.n; ++j) {
                if (y.at(k, j).is_zero()) continue;
                out.at(i, j) += x.at(i, k) * y.at(k, j);
            }
        }
    }
    return out;
}

LaurentPoly PolyMatrix::det() const {
    if (n == 0) throw DimensionMismatchError("determinant of empty matrix");
    const int nx = a[0].n_x(), nc = a[0].n_circle();
    // Cofactor expansion over the first row of each minor; fine for the
    // small sizes this library builds.
    std::vector<int> cols(n);
    for (int j = 0; j < n; ++j) cols[j] = j;
    struct Rec {
        const PolyMatrix& m;
        int nx, nc;
        LaurentPoly run(int row, std::vector<int>& cs) {
            if (cs.empty()) return LaurentPoly::constant(nx, nc, GaussianRational(1));
            LaurentPoly acc(nx, nc);
            for (std::size_t k = 0; k < cs.size(); ++k) {
                const LaurentPoly& entry = m.at(row, cs[k]);
                if (entry.is_zero()) continue;
                std::vector<int> rest;
                rest.reserve(cs.size() - 1);
                for (std::size_t t = 0; t < cs.size(); ++t) {
                    if (t != k) rest.push_back(cs[t]);
                }
                LaurentPoly minor = run(row + 1, rest);
                LaurentPoly contrib = entry * minor;
                if (k % 2 == 1) contrib = -std::move(contrib);
                acc += contrib;
            }
            return acc;
        }
    } rec{*this, nx, nc};
    return rec.run(0, cols);
}

namespace {

/** Right-multiply m in place by the n x n identity with the 2x2 block
 *  [[b11, b12], [b21, b22]] at rows/columns (k, k+1); touches only columns
 *  k and k+1. */
void apply_block_right(PolyMatrix& m, int k, const LaurentPoly& b11, const LaurentPoly& b12,
                       const LaurentPoly& b21, const LaurentPoly& b22) {
    for (int r = 0; r < m.n; ++r) {
        LaurentPoly c0 = m.at(r, k) * b11 + m.at(r, k + 1) * b21;
        LaurentPoly c1 = m.at(r, k) * b12 + m.at(r, k + 1) * b22;
        m.at(r, k) = std::move(c0);
        m.at(r, k + 1) = std::move(c1);
    }
}

constexpr double kUnitTol = 1e-9;

} // namespace

GroupModel::GroupModel(MeasureSpec spec) : spec_(std::move(spec)) {
    coord_cache_.resize(spec_.factors.size());
    coord_built_.assign(spec_.factors.size(), false);
}

void GroupModel::check_factor_index(int f) const {
    if (f < 0 || f >= static_cast<int>(spec_.factors.size())) {
        throw IndexError("factor index " + std::to_string(f + 1) + " out of range (group has " +
                         std::to_string(spec_.factors.size()) + " simple factors)");
    }
}

const CoordinateMatrixPair& GroupModel::coordinates(int f) const {
    check_factor_index(f);
    const FactorMeasure& fm = spec_.factors[f];
    if (fm.factor.type != SimpleType::A) {
        throw UnsupportedFactorError(std::string("entry symbols are only available for SU(n) factors, not ") +
                                     simple_type_char(fm.factor.type) + std::to_string(fm.factor.rank));
    }
    if (coord_built_[f]) return coord_cache_[f];

    const int n = fm.factor.rank + 1;
    const int nx = spec_.n_x, nc = spec_.n_circle;
    const GaussianRational I = GaussianRational::i();
    auto one = [&](  ) { return LaurentPoly::constant(nx, nc, GaussianRational(1)); };

    PolyMatrix Q = PolyMatrix::identity(n, nx, nc);
    PolyMatrix Qc = PolyMatrix::identity(n, nx, nc);
    for (int j = 0; j < fm.length; ++j) {
        int k = fm.word.letters[j] - 1; // block rows/cols (k, k+1)
        LaurentPoly x = LaurentPoly::x_var(nx, nc, fm.x_offset + j);
        LaurentPoly w = LaurentPoly::circle_var(nx, nc, fm.w_offset + j, 1);
        LaurentPoly winv = LaurentPoly::circle_var(nx, nc, fm.w_offset + j, -1);
        LaurentPoly ix = I * x;
        LaurentPoly one_minus_x2 = one() - x * x;
        // B = [[i w (1-x^2), i x], [i x, -i w^{-1}]]
        apply_block_right(Q, k, I * (w * one_minus_x2), ix, ix, -(I * winv));
        // Bc = (B^{-1})^T = [[-i w^{-1}, -i x], [-i x, i w (1-x^2)]]
        apply_block_right(Qc, k, -(I * winv), -ix, -ix, I * (w * one_minus_x2));
    }
    // Torus part: diag(z_1, ..., z_{n-1}, (z_1 ... z_{n-1})^{-1}) for Q and
    // the inverse diagonal for Qc.
    for (int t = 0; t < fm.rank; ++t) {
        LaurentPoly z = LaurentPoly::circle_var(nx, nc, fm.z_offset + t, 1);
        LaurentPoly zinv = LaurentPoly::circle_var(nx, nc, fm.z_offset + t, -1);
        for (int r = 0; r < n; ++r) {
            Q.at(r, t) = Q.at(r, t) * z;
            Qc.at(r, t) = Qc.at(r, t) * zinv;
        }
    }
    {
        LaurentPoly last = one();
        LaurentPoly last_inv = one();
        for (int t = 0; t < fm.rank; ++t) {
            last = last * LaurentPoly::circle_var(nx, nc, fm.z_offset + t, -1);
            last_inv = last_inv * LaurentPoly::circle_var(nx, nc, fm.z_offset + t, 1);
        }
        for (int r = 0; r < n; ++r) {
            Q.at(r, n - 1) = Q.at(r, n - 1) * last;
            Qc.at(r, n - 1) = Qc.at(r, n - 1) * last_inv;
        }
    }

    coord_cache_[f] = CoordinateMatrixPair{std::move(Q), std::move(Qc)};
    coord_built_[f] = true;
    return coord_cache_[f];
}

LaurentPoly GroupModel::reduce(const Expr& e) const {
    const int nx = spec_.n_x, nc = spec_.n_circle;
    switch (e.kind()) {
    case Expr::Kind::Const: return LaurentPoly::constant(nx, nc, e.const_value());
    case Expr::Kind::EntryA:
    case Expr::Kind::EntryC: {
        int f = e.factor() - 1;
        check_factor_index(f);
        const CoordinateMatrixPair& cm = coordinates(f);
        int n = cm.Q.n;
        if (e.row() < 1 || e.row() > n || e.col() < 1 || e.col() > n) {
            throw IndexError("entry (" + std::to_string(e.row()) + "," + std::to_string(e.col()) +
                             ") out of range for a " + std::to_string(n) + "x" + std::to_string(n) + " factor");
        }
        const PolyMatrix& m = e.kind() == Expr::Kind::EntryA ? cm.Q : cm.Qc;
        return m.at(e.row() - 1, e.col() - 1);
    }
    case Expr::Kind::TorusU: {
        int k = e.torus_index() - 1;
        if (k < 0 || k >= spec_.group.torus_dim) {
            throw IndexError("torus coordinate u[" + std::to_string(e.torus_index()) +
                             "] out of range (torus dimension " + std::to_string(spec_.group.torus_dim) + ")");
        }
        return LaurentPoly::circle_var(nx, nc, spec_.torus_offset + k, e.torus_sign());
    }
    case Expr::Kind::Add: return reduce(e.lhs()) + reduce(e.rhs());
    case Expr::Kind::Sub: return reduce(e.lhs()) - reduce(e.rhs());
    case Expr::Kind::Mul: return reduce(e.lhs()) * reduce(e.rhs());
    case Expr::Kind::Pow: return reduce(e.lhs()).pow(e.pow_exponent());
    }
    throw InternalError("unhandled expression kind");
}

GaussianRational GroupModel::integrate(const Expr& e) const { return weighted_integral(reduce(e), spec_); }

CMatrix GroupModel::factor_point(int f, const std::vector<double>& x,
                                 const std::vector<std::complex<double>>& w,
                                 const std::vector<std::complex<double>>& z) const {
    check_factor_index(f);
    const FactorMeasure& fm = spec_.factors[f];
    if (fm.factor.type != SimpleType::A) {
        throw UnsupportedFactorError("numeric chart is only available for SU(n) factors");
    }
    if (static_cast<int>(x.size()) != fm.length || static_cast<int>(w.size()) != fm.length ||
        static_cast<int>(z.size()) != fm.rank) {
        throw DimensionMismatchError("factor point slice sizes do not match the word/rank");
    }
    for (double v : x) {
        if (!(v >= -1e-12 && v <= 1.0 + 1e-12)) throw DomainError("x coordinate outside [0,1]");
    }
    for (const auto& v : w) {
        if (std::abs(std::abs(v) - 1.0) > kUnitTol) throw DomainError("w coordinate off the unit circle");
    }
    for (const auto& v : z) {
        if (std::abs(std::abs(v) - 1.0) > kUnitTol) throw DomainError("z coordinate off the unit circle");
    }

    const int n = fm.factor.rank + 1;
    CMatrix m = CMatrix::identity(n);
    const std::complex<double> I(0.0, 1.0);
    for (int j = 0; j < fm.length; ++j) {
        int k = fm.word.letters[j] - 1;
        double s = std::sqrt(std::max(0.0, 1.0 - x[j] * x[j]));
        std::complex<double> b11 = I * w[j] * s;
        std::complex<double> b12 = I * x[j];
        std::complex<double> b21 = I * x[j];
        std::complex<double> b22 = -I * s / w[j];
        for (int r = 0; r < n; ++r) {
            std::complex<double> c0 = m.at(r, k) * b11 + m.at(r, k + 1) * b21;
            std::complex<double> c1 = m.at(r, k) * b12 + m.at(r, k + 1) * b22;
            m.at(r, k) = c0;
            m.at(r, k + 1) = c1;
        }
    }
    std::complex<double> last(1.0, 0.0);
    for (int t = 0; t < fm.rank; ++t) {
        for (int r = 0; r < n; ++r) m.at(r, t) *= z[t];
        last /= z[t];
    }
    for (int r = 0; r < n; ++r) m.at(r, n - 1) *= last;
    return m;
}

GroupPoint GroupModel::point(const std::vector<double>& x,
                             const std::vector<std::complex<double>>& circ) const {
    if (static_cast<int>(x.size()) != spec_.n_x || static_cast<int>(circ.size()) != spec_.n_circle) {
        throw DimensionMismatchError("point coordinate counts do not match the layout");
    }
    GroupPoint p;
    for (std::size_t f = 0; f < spec_.factors.size(); ++f) {
        const FactorMeasure& fm = spec_.factors[f];
        std::vector<double> xs(x.begin() + fm.x_offset, x.begin() + fm.x_offset + fm.length);
        std::vector<std::complex<double>> ws(circ.begin() + fm.w_offset,
                                             circ.begin() + fm.w_offset + fm.length);
        std::vector<std::complex<double>> zs(circ.begin() + fm.z_offset,
                                             circ.begin() + fm.z_offset + fm.rank);
        p.factors.push_back(factor_point(static_cast<int>(f), xs, ws, zs));
    }
    p.torus.assign(circ.begin() + spec_.torus_offset, circ.begin() + spec_.torus_offset + spec_.group.torus_dim);
    return p;
}

std::complex<double> GroupModel::eval(const Expr& e, const GroupPoint& p) const {
    switch (e.kind()) {
    case Expr::Kind::Const: return e.const_value().to_complex();
    case Expr::Kind::EntryA:
    case Expr::Kind::EntryC: {
        int f = e.factor() - 1;
        if (f < 0 || f >= static_cast<int>(p.factors.size())) throw IndexError("factor index out of range");
        const CMatrix& m = p.factors[f];
        if (e.row() < 1 || e.row() > m.n || e.col() < 1 || e.col() > m.n) {
            throw IndexError("entry index out of range");
        }
        std::complex<double> v = m.at(e.row() - 1, e.col() - 1);
        return e.kind() == Expr::Kind::EntryA ? v : std::conj(v);
    }
    case Expr::Kind::TorusU: {
        int k = e.torus_index() - 1;
        if (k < 0 || k >= static_cast<int>(p.torus.size())) throw IndexError("torus coordinate out of range");
        std::complex<double> v = p.torus[k];
        return e.torus_sign() > 0 ? v : 1.0 / v;
    }
    case Expr::Kind::Add: return eval(e.lhs(), p) + eval(e.rhs(), p);
    case Expr::Kind::Sub: return eval(e.lhs(), p) - eval(e.rhs(), p);
    case Expr::Kind::Mul: return eval(e.lhs(), p) * eval(e.rhs(), p);
    case Expr::Kind::Pow: {
        std::complex<double> b = eval(e.lhs(), p);
        std::complex<double> acc = 1.0;
        for (unsigned t = 0; t < e.pow_exponent(); ++t) acc *= b;
        return acc;
    }
    }
    throw InternalError("unhandled expression kind");
}

} // namespace haarpoly
