#include "haarpoly/mathieu.hpp"

#include "haarpoly/errors.hpp"

#include <algorithm>
#include <cmath>

namespace haarpoly {

HullCertificate origin_in_hull(const std::vector<std::vector<int>>& spectrum) {
    if (spectrum.empty()) throw EmptySpectrumError("hull query on an empty spectrum");
    HullCertificate cert;
    cert.points = spectrum;
    std::sort(cert.points.begin(), cert.points.end());
    cert.points.erase(std::unique(cert.points.begin(), cert.points.end()), cert.points.end());
    const std::size_t dim = cert.points[0].size();
    for (const auto& p : cert.points) {
        if (p.size() != dim) throw DimensionMismatchError("spectrum points of mixed dimension");
    }
    const std::size_t K = cert.points.size();

    // Feasibility of sum_k lambda_k m_k = 0, sum_k lambda_k = 1, lambda >= 0.
    std::vector<std::vector<Rational>> A(dim + 1, std::vector<Rational>(K, Rational(0)));
    std::vector<Rational> b(dim + 1, Rational(0));
    for (std::size_t k = 0; k < K; ++k) {
        for (std::size_t d = 0; d < dim; ++d) A[d][k] = cert.points[k][d];
        A[dim][k] = 1;
    }
    b[dim] = 1;

    LPFeasibility lp = solve_equality_feasibility(A, b);
    if (lp.feasible) {
        cert.origin_inside = true;
        cert.weights = std::move(lp.solution);
    } else {
        cert.origin_inside = false;
        // Farkas y = (u, t): u . m + t <= 0 for every point m and t > 0,
        // so v = -u / t satisfies v . m >= 1.
        const Rational& t = lp.farkas[dim];
        if (t <= 0) throw InternalError("Farkas certificate with nonpositive affine part");
        cert.separator.assign(dim, Rational(0));
        for (std::size_t d = 0; d < dim; ++d) cert.separator[d] = -lp.farkas[d] / t;
    }
    if (!verify_certificate(cert)) throw InternalError("hull certificate failed its own re-check");
    return cert;
}

bool verify_certificate(const HullCertificate& cert) {
    if (cert.points.empty()) return false;
    const std::size_t dim = cert.points[0].size();
    if (cert.origin_inside) {
        if (cert.weights.size() != cert.points.size()) return false;
        Rational total(0);
        std::vector<Rational> combo(dim, Rational(0));
        for (std::size_t k = 0; k < cert.points.size(); ++k) {
            if (cert.weights[k] < 0) return false;
            total += cert.weights[k];
            for (std::size_t d = 0; d < dim; ++d) combo[d] += cert.weights[k] * cert.points[k][d];
        }
        if (total != 1) return false;
        return std::all_of(combo.begin(), combo.end(), [](const Rational& c) { return c == 0; });
    }
    if (cert.separator.size() != dim) return false;
    for (const auto& p : cert.points) {
        Rational dot(0);
        for (std::size_t d = 0; d < dim; ++d) dot += cert.separator[d] * p[d];
        if (dot < 1) return false;
    }
    return true;
}

long vanishing_threshold(const std::vector<std::vector<int>>& sp_f,
                         const std::vector<std::vector<int>>& sp_g, const std::vector<Rational>& v) {
    if (sp_f.empty()) throw EmptySpectrumError("threshold query needs a nonempty spectrum for f");
    for (const auto& m : sp_f) {
        if (m.size() != v.size()) throw DimensionMismatchError("separator dimension mismatch");
        Rational dot(0);
        for (std::size_t d = 0; d < v.size(); ++d) dot += v[d] * m[d];
        if (dot < 1) throw InvalidSeparatorError("v . m < 1 on a spectrum point of f");
    }
    Integer best(0); // max(0, floor(max_{m'} -v.m'))
    for (const auto& mp : sp_g) {
        if (mp.size() != v.size()) throw DimensionMismatchError("separator dimension mismatch");
        Rational dot(0);
        for (std::size_t d = 0; d < v.size(); ++d) dot += v[d] * mp[d];
        Integer fl = rational_floor(-dot);
        if (fl > best) best = fl;
    }
    return 1 + best.convert_to<long>();
}

std::vector<GaussianRational> power_integral_sequence(const LaurentPoly& f, const MeasureSpec& spec,
                                                      int n_max) {
    if (n_max < 0) throw DomainError("n_max must be >= 0");
    std::vector<GaussianRational> out;
    out.reserve(n_max);
    LaurentPoly power = LaurentPoly::constant(f.n_x(), f.n_circle(), GaussianRational(1));
    for (int n = 1; n <= n_max; ++n) {
        power = power * f;
        out.push_back(weighted_integral(power, spec));
    }
    return out;
}

MathieuReport mathieu_report(const GroupModel& model, const Expr& f, const Expr& g, int n_max) {
    if (n_max < 1) throw DomainError("n_max must be >= 1");
    MathieuReport rep;
    rep.n_max = n_max;

    LaurentPoly rf = model.reduce(f);
    LaurentPoly rg = model.reduce(g);

    rep.power_integrals = power_integral_sequence(rf, model.measure(), n_max);
    rep.hypothesis_holds_up_to_n_max =
        std::all_of(rep.power_integrals.begin(), rep.power_integrals.end(),
                    [](const GaussianRational& v) { return v.is_zero(); });

    for (int n = 1; n <= n_max; ++n) {
        const GaussianRational& v = rep.power_integrals[n - 1];
        if (!v.is_zero()) {
            double mag = std::abs(v.to_complex());
            rep.moment_growth.push_back(std::pow(mag, 1.0 / n));
        }
    }

    rep.spectrum_empty = rf.is_zero();
    if (rep.spectrum_empty) {
        // f reduces to 0: every integral involving f vanishes trivially and
        // there is no hull question to ask.
        rep.conclusion_applies = false;
        return rep;
    }

    rep.hull = origin_in_hull(rf.spectrum());
    if (rep.hull.origin_inside) return rep;

    rep.conclusion_applies = true;
    rep.n0 = vanishing_threshold(rf.spectrum(), rg.spectrum(), rep.hull.separator);

    LaurentPoly power = rf.pow(static_cast<unsigned long>(rep.n0));
    rep.conclusion_verified = true;
    for (long n = rep.n0; n < rep.n0 + 6; ++n) {
        GaussianRational val = weighted_integral(power * rg, model.measure());
        rep.conclusion_integrals.push_back(val);
        if (!val.is_zero()) rep.conclusion_verified = false;
        power = power * rf;
    }
    return rep;
}

} // namespace haarpoly
