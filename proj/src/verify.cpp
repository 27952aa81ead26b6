#include "haarpoly/verify.hpp"

#include "haarpoly/errors.hpp"
#include "haarpoly/json_io.hpp"
#include "haarpoly/mathieu.hpp"
#include "haarpoly/numeric.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <sstream>

namespace haarpoly {

namespace {

// ---------------------------------------------------------------------------
// Shared helpers

GroupModel make_model(const std::string& group) {
    return GroupModel(measure_spec(GroupSpec::parse(group)));
}

Rational factorial(int n) {
    Rational f(1);
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

/** Deterministic random expressions over an SU(n) factor (factor index 1),
 *  optionally with torus coordinates: a sum of up to max_terms monomials in
 *  the a/c entry symbols with small Gaussian-rational coefficients. Every
 *  monomial has degree >= 1 unless allow_constant. */
Expr random_expression(SplitMix64& rng, int n, int torus_dim, int max_degree, int max_terms,
                       bool allow_constant = true) {
    int terms = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(max_terms));
    Expr acc = Expr::constant(GaussianRational(0));
    for (int t = 0; t < terms; ++t) {
        long num = 1 + static_cast<long>(rng.next_u64() % 3);
        if (rng.next_u64() % 2 == 0) num = -num;
        long den = 1 + static_cast<long>(rng.next_u64() % 3);
        GaussianRational coeff = GaussianRational(Rational(num, den));
        if (rng.next_u64() % 3 == 0) coeff *= GaussianRational::i();

        int lo = allow_constant ? 0 : 1;
        int degree = lo + static_cast<int>(rng.next_u64() %
                                           static_cast<std::uint64_t>(max_degree - lo + 1));
        Expr mono = Expr::constant(coeff);
        for (int d = 0; d < degree; ++d) {
            std::uint64_t pick = rng.next_u64() % (torus_dim > 0 ? 3 : 2);
            if (pick == 2) {
                int k = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(torus_dim));
                mono = mono * Expr::u(k, rng.next_u64() % 2 == 0 ? 1 : -1);
            } else {
                int i = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n));
                int j = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n));
                mono = mono * (pick == 0 ? Expr::a(1, i, j) : Expr::c(1, i, j));
            }
        }
        acc = acc + mono;
    }
    return acc;
}

/** Exhaustive Carathéodory oracle: the origin lies in the hull iff some
 *  affinely independent subset of at most dim+1 points contains it with
 *  nonnegative barycentric coordinates. Exact Gaussian elimination. */
bool brute_origin_in_hull(const std::vector<std::vector<int>>& pts) {
    if (pts.empty()) throw EmptySpectrumError("empty point set");
    const int dim = static_cast<int>(pts[0].size());
    const int K = static_cast<int>(pts.size());

    std::vector<int> subset;
    std::function<bool(int, int)> search = [&](int start, int want) -> bool {
        if (want == 0) {
            const int rows = dim + 1;
            const int cols = static_cast<int>(subset.size());
            std::vector<std::vector<Rational>> M(rows, std::vector<Rational>(cols + 1, Rational(0)));
            for (int c = 0; c < cols; ++c) {
                for (int d = 0; d < dim; ++d) M[d][c] = pts[subset[c]][d];
                M[dim][c] = 1;
            }
            M[dim][cols] = 1; // rhs: origin with affine coordinate 1

            // Forward elimination with row pivoting.
            std::vector<int> pivot_row(cols, -1);
            int r = 0;
            for (int c = 0; c < cols && r < rows; ++c) {
                int pr = -1;
                for (int rr = r; rr < rows; ++rr) {
                    if (M[rr][c] != 0) {
                        pr = rr;
                        break;
                    }
                }
                if (pr < 0) return false; // rank-deficient: not affinely independent, skip
                std::swap(M[pr], M[r]);
                for (int rr = 0; rr < rows; ++rr) {
                    if (rr == r || M[rr][c] == 0) continue;
                    Rational f = M[rr][c] / M[r][c];
                    for (int cc = c; cc <= cols; ++cc) M[rr][cc] -= f * M[r][cc];
                }
                pivot_row[c] = r;
                ++r;
            }
            for (int rr = r; rr < rows; ++rr) {
                if (M[rr][cols] != 0) return false; // inconsistent
            }
            for (int c = 0; c < cols; ++c) {
                Rational lambda = M[pivot_row[c]][cols] / M[pivot_row[c]][c];
                if (lambda < 0) return false;
            }
            return true;
        }
        for (int k = start; k + want <= K; ++k) {
            subset.push_back(k);
            if (search(k + 1, want - 1)) {
                subset.pop_back();
                return true;
            }
            subset.pop_back();
        }
        return false;
    };

    for (int size = 1; size <= dim + 1 && size <= K; ++size) {
        if (search(0, size)) return true;
    }
    return false;
}

struct Failure {
    std::ostringstream msg;
    bool failed = false;

    template <typename T> void check(bool ok, const T& describe) {
        if (!ok && !failed) {
            failed = true;
            msg << describe;
        }
    }
    std::string str() const { return msg.str(); }
};

// ---------------------------------------------------------------------------
// Criterion 1: exact normalization on a battery of groups.

SuiteResult suite_normalization() {
    SuiteResult r{1, "normalization", true, 0, 1.0, ""};
    Failure f;
    const Expr one = Expr::constant(GaussianRational(1));
    for (const std::string& g : {"SU(2)", "SU(3)", "SU(4)", "SU(2)xSU(2)xT^1", "T^3"}) {
        GroupModel model = make_model(g);
        GaussianRational v = model.integrate(one);
        f.check(v == GaussianRational(1), g + ": integral of 1 is " + v.str() + ", expected 1");
        if (f.failed) break;
    }
    r.pass = !f.failed;
    r.detail = f.failed ? f.str() : "5 groups normalize to exactly 1";
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 2: the classical monomial table on SU(2).

SuiteResult suite_monomial_table() {
    SuiteResult r{2, "monomial-table", true, 0, 10.0, ""};
    Failure f;
    GroupModel model = make_model("SU(2)");
    // With the matrix written ((a, c), (b, d)): a = (1,1), c = (1,2),
    // b = (2,1), d = (2,2). The exact value of the integral of
    // a^n1 b^n2 c^n3 d^n4 is (-1)^n2 delta(n1,n4) delta(n2,n3)
    // n1! n2! / (n1+n2+1)!.
    int cases = 0;
    for (int n1 = 0; n1 <= 3 && !f.failed; ++n1) {
        for (int n2 = 0; n2 <= 3 && !f.failed; ++n2) {
            for (int n3 = 0; n3 <= 3 && !f.failed; ++n3) {
                for (int n4 = 0; n4 <= 3 && !f.failed; ++n4) {
                    Expr e = Expr::a(1, 1, 1).pow(n1) * Expr::a(1, 2, 1).pow(n2) *
                             Expr::a(1, 1, 2).pow(n3) * Expr::a(1, 2, 2).pow(n4);
                    GaussianRational got = model.integrate(e);
                    GaussianRational want;
                    if (n1 == n4 && n2 == n3) {
                        Rational value = factorial(n1) * factorial(n2) / factorial(n1 + n2 + 1);
                        if (n2 % 2 == 1) value = -value;
                        want = GaussianRational(value);
                    }
                    ++cases;
                    f.check(got == want, "a^" + std::to_string(n1) + " b^" + std::to_string(n2) + " c^" +
                                             std::to_string(n3) + " d^" + std::to_string(n4) + " = " +
                                             got.str() + ", expected " + want.str());
                }
            }
        }
    }
    r.pass = !f.failed;
    r.detail = f.failed ? f.str() : std::to_string(cases) + " monomials match the closed form";
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 3: Schur orthogonality of matrix entries on SU(2) and SU(3).

SuiteResult suite_schur() {
    SuiteResult r{3, "schur", true, 0, 60.0, ""};
    Failure f;
    int cases = 0;
    for (int n : {2, 3}) {
        GroupModel model = make_model("SU(" + std::to_string(n) + ")");
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                for (int k = 1; k <= n; ++k) {
                    for (int l = 1; l <= n; ++l) {
                        GaussianRational got = model.integrate(Expr::a(1, i, j) * Expr::c(1, k, l));
                        GaussianRational want =
                            (i == k && j == l) ? GaussianRational(Rational(1, n)) : GaussianRational(0);
                        ++cases;
                        f.check(got == want, "SU(" + std::to_string(n) + ") entry pair (" +
                                                 std::to_string(i) + "," + std::to_string(j) + ")x(" +
                                                 std::to_string(k) + "," + std::to_string(l) + ") = " +
                                                 got.str() + ", expected " + want.str());
                        if (f.failed) goto done;
                    }
                }
            }
        }
    }
done:
    r.pass = !f.failed;
    r.detail = f.failed ? f.str() : std::to_string(cases) + " orthogonality relations hold exactly";
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 4: weight exponents across all simple types of rank <= 8.

SuiteResult suite_lemma_exp() {
    SuiteResult r{4, "lemma-exp", true, 0, 5.0, ""};
    Failure f;
    std::vector<std::pair<SimpleType, std::vector<int>>> families = {
        {SimpleType::A, {1, 2, 3, 4, 5, 6, 7, 8}}, {SimpleType::B, {2, 3, 4, 5, 6, 7, 8}},
        {SimpleType::C, {2, 3, 4, 5, 6, 7, 8}},    {SimpleType::D, {3, 4, 5, 6, 7, 8}},
        {SimpleType::E, {6, 7, 8}},                {SimpleType::F, {4}},
        {SimpleType::G, {2}},
    };
    int roots_checked = 0;
    for (const auto& [type, ranks] : families) {
        for (int rank : ranks) {
            RootSystem rs(type, rank);
            bool simply_laced =
                type == SimpleType::A || type == SimpleType::D || type == SimpleType::E;
            for (const Root& beta : rs.positive_roots()) {
                int e = rs.weight_exponent(beta); // throws unless a positive integer
                int height = 0;
                bool simple = false;
                for (int c : beta) height += c;
                simple = height == 1;
                std::string name = std::string(1, simple_type_char(type)) + std::to_string(rank);
                f.check(e >= 1, name + ": exponent < 1");
                if (simple) f.check(e == 1, name + ": simple root with exponent != 1");
                if (simply_laced) {
                    f.check(e == height, name + ": simply-laced exponent != height");
                }
                ++roots_checked;
                if (f.failed) goto done;
            }
        }
    }
done:
    r.pass = !f.failed;
    r.detail = f.failed ? f.str() : std::to_string(roots_checked) + " positive roots across 27 systems";
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 5: exact / chart quadrature / Euler-angle oracle triangle.

SuiteResult suite_oracle_triangle() {
    SuiteResult r{5, "oracle-triangle", true, 0, 120.0, ""};
    Failure f;
    GroupModel model = make_model("SU(2)");
    SplitMix64 rng(20260817, 5);
    double worst_quad = 0.0, worst_euler = 0.0;
    for (int t = 0; t < 50 && !f.failed; ++t) {
        Expr e = random_expression(rng, 2, 0, 6, 4);
        std::complex<double> exact = model.integrate(e).to_complex();
        GroupFunction fn = [&](const GroupPoint& p) { return model.eval(e, p); };
        std::complex<double> quad = haar_quadrature(model, fn, 6);
        std::complex<double> euler = euler_su2_integral(
            [&](const CMatrix& u) {
                GroupPoint p;
                p.factors.push_back(u);
                return model.eval(e, p);
            },
            EulerNodes::for_degree(6));
        worst_quad = std::max(worst_quad, std::abs(quad - exact));
        worst_euler = std::max(worst_euler, std::abs(euler - exact));
        f.check(std::abs(quad - exact) <= 1e-10,
                "expression " + std::to_string(t) + ": |quadrature - exact| = " +
                    std::to_string(std::abs(quad - exact)));
        f.check(std::abs(euler - exact) <= 1e-9,
                "expression " + std::to_string(t) + ": |euler - exact| = " +
                    std::to_string(std::abs(euler - exact)));
    }
    r.pass = !f.failed;
    std::ostringstream ok;
    ok << "50 expressions; worst quadrature gap " << worst_quad << ", worst Euler gap " << worst_euler;
    r.detail = f.failed ? f.str() : ok.str();
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 6: Monte Carlo agrees with exact values within 4 standard errors.

SuiteResult suite_mc_consistency() {
    SuiteResult r{6, "mc-consistency", true, 0, 300.0, ""};
    Failure f;
    GroupModel model = make_model("SU(3)");
    SplitMix64 rng(20260817, 6);
    int within = 0;
    std::ostringstream log;
    for (int t = 0; t < 10; ++t) {
        Expr e = random_expression(rng, 3, 0, 3, 3, /*allow_constant=*/false);
        std::complex<double> exact = model.integrate(e).to_complex();
        GroupFunction fn = [&](const GroupPoint& p) { return model.eval(e, p); };
        MonteCarloResult mc = haar_monte_carlo(model, fn, 1000000, 97531 + t);
        double gap = std::abs(mc.estimate - exact);
        f.check(mc.std_error > 0, "expression " + std::to_string(t) + " has zero variance");
        if (gap <= 4.0 * mc.std_error) {
            ++within;
        } else {
            log << "expression " << t << ": gap " << gap << " vs 4*SE " << 4.0 * mc.std_error << "; ";
        }
    }
    f.check(within >= 9, "only " + std::to_string(within) + "/10 within 4 standard errors: " + log.str());
    r.pass = !f.failed;
    r.detail = f.failed ? f.str() : std::to_string(within) + "/10 estimates within 4 standard errors";
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 7: the square-root-free reduction integrates like the unitary
// (square-root) chart.

SuiteResult suite_sqrt_elimination() {
    SuiteResult r{7, "sqrt-elimination", true, 0, 120.0, ""};
    Failure f;
    SplitMix64 rng(20260817, 7);
    double worst = 0.0;
    for (int t = 0; t < 20 && !f.failed; ++t) {
        bool su2 = t < 10;
        GroupModel model = make_model(su2 ? "SU(2)" : "SU(3)");
        int degree = su2 ? 6 : 4;
        Expr e = random_expression(rng, su2 ? 2 : 3, 0, degree, 4);
        std::complex<double> exact = model.integrate(e).to_complex();
        GroupFunction fn = [&](const GroupPoint& p) { return model.eval(e, p); };
        std::complex<double> quad = haar_quadrature(model, fn, degree);
        double gap = std::abs(quad - exact);
        worst = std::max(worst, gap);
        f.check(gap <= 1e-9, "expression " + std::to_string(t) + ": |quad - exact| = " + std::to_string(gap));
    }
    r.pass = !f.failed;
    std::ostringstream ok;
    ok << "20 expressions; worst gap " << worst;
    r.detail = f.failed ? f.str() : ok.str();
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 8: det Q = 1 and Q Qc^T = I as exact polynomial identities.

SuiteResult suite_matrix_identities() {
    SuiteResult r{8, "matrix-identities", true, 0, 30.0, ""};
    Failure f;
    for (int n = 2; n <= 4 && !f.failed; ++n) {
        GroupModel model = make_model("SU(" + std::to_string(n) + ")");
        const CoordinateMatrixPair& cm = model.coordinates(0);
        const int nx = model.measure().n_x, nc = model.measure().n_circle;
        LaurentPoly one = LaurentPoly::constant(nx, nc, GaussianRational(1));
        f.check(cm.Q.det() == one, "SU(" + std::to_string(n) + "): det Q != 1");
        for (int i = 0; i < n && !f.failed; ++i) {
            for (int j = 0; j < n && !f.failed; ++j) {
                LaurentPoly dot(nx, nc);
                for (int k = 0; k < n; ++k) dot += cm.Q.at(i, k) * cm.Qc.at(j, k);
                f.check(dot == (i == j ? one : LaurentPoly(nx, nc)),
                        "SU(" + std::to_string(n) + "): (Q Qc^T)[" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + "] != identity entry");
            }
        }
    }
    r.pass = !f.failed;
    r.detail = f.failed ? f.str() : "SU(2), SU(3), SU(4): det Q = 1 and Q Qc^T = I exactly";
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 9: integrals do not depend on the chosen longest word.

SuiteResult suite_word_independence() {
    SuiteResult r{9, "word-independence", true, 0, 60.0, ""};
    Failure f;
    GroupSpec group = GroupSpec::parse("SU(3)");
    std::vector<ReducedWord> w1 = {ReducedWord{{1, 2, 1}}};
    std::vector<ReducedWord> w2 = {ReducedWord{{2, 1, 2}}};
    GroupModel m1(measure_spec(group, w1));
    GroupModel m2(measure_spec(group, w2));
    SplitMix64 rng(20260817, 9);
    for (int t = 0; t < 20 && !f.failed; ++t) {
        Expr e = random_expression(rng, 3, 0, 4, 4);
        GaussianRational v1 = m1.integrate(e);
        GaussianRational v2 = m2.integrate(e);
        f.check(v1 == v2, "expression " + std::to_string(t) + ": word [1,2,1] gives " + v1.str() +
                              ", word [2,1,2] gives " + v2.str());
    }
    r.pass = !f.failed;
    r.detail = f.failed ? f.str() : "20 expressions integrate identically under both longest words";
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 10: hull certificates agree with the exhaustive oracle.

SuiteResult suite_hull_certificates() {
    SuiteResult r{10, "hull-certificates", true, 0, 30.0, ""};
    Failure f;
    SplitMix64 rng(20260817, 10);
    int inside_count = 0;
    for (int t = 0; t < 100 && !f.failed; ++t) {
        int dim = t < 50 ? 2 : 3;
        int size = 1 + static_cast<int>(rng.next_u64() % 8);
        std::vector<std::vector<int>> pts(size, std::vector<int>(dim));
        for (auto& p : pts) {
            for (int& c : p) c = static_cast<int>(rng.next_u64() % 9) - 4;
        }
        HullCertificate cert = origin_in_hull(pts);
        bool brute = brute_origin_in_hull(pts);
        f.check(cert.origin_inside == brute,
                "set " + std::to_string(t) + ": simplex says " +
                    (cert.origin_inside ? "inside" : "outside") + ", oracle says " +
                    (brute ? "inside" : "outside"));
        f.check(verify_certificate(cert), "set " + std::to_string(t) + ": certificate fails re-check");
        if (cert.origin_inside) ++inside_count;
    }
    r.pass = !f.failed;
    r.detail = f.failed ? f.str()
                        : "100 random spectra agree with the oracle (" + std::to_string(inside_count) +
                              " inside, " + std::to_string(100 - inside_count) + " outside)";
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 11: the separating-vector conclusion, end to end on SU(2).

SuiteResult suite_prop3() {
    SuiteResult r{11, "prop3", true, 0, 10.0, ""};
    Failure f;
    GroupModel model = make_model("SU(2)");
    Expr fe = Expr::a(1, 1, 1);
    Expr ge = Expr::c(1, 1, 1);

    LaurentPoly rf = model.reduce(fe);
    std::vector<GaussianRational> powers = power_integral_sequence(rf, model.measure(), 20);
    for (int n = 1; n <= 20 && !f.failed; ++n) {
        f.check(powers[n - 1].is_zero(),
                "integral of f^" + std::to_string(n) + " = " + powers[n - 1].str() + ", expected 0");
    }

    MathieuReport rep = mathieu_report(model, fe, ge, 20);
    f.check(rep.hypothesis_holds_up_to_n_max, "hypothesis does not hold up to n_max");
    f.check(!rep.spectrum_empty, "spectrum unexpectedly empty");
    f.check(!rep.hull.origin_inside, "origin unexpectedly inside the hull");
    f.check(rep.conclusion_applies, "conclusion branch did not trigger");
    if (!f.failed) {
        // v separates {(1,1)}, so v.(1,1) >= 1, forcing n0 >= 2; and the
        // n = 1 integral of f g is 1/2, so n0 = 2 is tight here.
        f.check(rep.n0 >= 2, "n0 = " + std::to_string(rep.n0) + ", expected >= 2");
        GaussianRational fg = model.integrate(fe * ge);
        f.check(fg == GaussianRational(Rational(1, 2)),
                "integral of f g = " + fg.str() + ", expected 1/2");
        f.check(rep.conclusion_verified, "some integral in n0..n0+5 is nonzero");
        f.check(static_cast<int>(rep.conclusion_integrals.size()) == 6, "window size != 6");
    }
    r.pass = !f.failed;
    r.detail = f.failed ? f.str()
                        : "f = a[1,1], g = c[1,1]: 20 vanishing powers, separator found, n0 = " +
                              std::to_string(rep.n0) + ", window n0..n0+5 vanishes exactly";
    return r;
}

using SuiteFn = SuiteResult (*)();

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> reg = {
        {"normalization", suite_normalization},
        {"monomial-table", suite_monomial_table},
        {"schur", suite_schur},
        {"lemma-exp", suite_lemma_exp},
        {"oracle-triangle", suite_oracle_triangle},
        {"mc-consistency", suite_mc_consistency},
        {"sqrt-elimination", suite_sqrt_elimination},
        {"matrix-identities", suite_matrix_identities},
        {"word-independence", suite_word_independence},
        {"hull-certificates", suite_hull_certificates},
        {"prop3", suite_prop3},
    };
    return reg;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

SuiteResult run_suite(const std::string& name) {
    static const double limits[] = {1, 10, 60, 5, 120, 300, 120, 30, 60, 30, 10};
    int index = 0;
    for (const auto& [n, fn] : registry()) {
        ++index;
        if (n != name) continue;
        auto start = std::chrono::steady_clock::now();
        SuiteResult res;
        try {
            res = fn();
        } catch (const std::exception& ex) {
            res.criterion = index;
            res.limit_seconds = limits[index - 1];
            res.pass = false;
            res.detail = std::string("exception: ") + ex.what();
        }
        res.name = name;
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (res.limit_seconds > 0 && res.seconds > res.limit_seconds) {
            res.pass = false;
            res.detail += (res.detail.empty() ? "" : "; ") + std::string("over time budget");
        }
        return res;
    }
    throw IndexError("unknown suite '" + name + "'");
}

std::vector<SuiteResult> run_all_suites() {
    std::vector<SuiteResult> out;
    for (const std::string& name : suite_names()) out.push_back(run_suite(name));
    return out;
}

} // namespace haarpoly
