#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "haarpoly/errors.hpp"
#include "haarpoly/mathieu.hpp"
#include "haarpoly/simplex.hpp"

using namespace haarpoly;

TEST_CASE("equality-form feasibility with exact certificates") {
    SUBCASE("feasible system returns a nonnegative solution") {
        LPFeasibility r = solve_equality_feasibility({{1, 1}}, {Rational(1)});
        REQUIRE(r.feasible);
        REQUIRE(r.solution.size() == 2);
        CHECK(r.solution[0] >= 0);
        CHECK(r.solution[1] >= 0);
        CHECK(r.solution[0] + r.solution[1] == Rational(1));
    }
    SUBCASE("infeasible system returns a separating row certificate") {
        // The unique solve of lambda1 (1,2) + lambda2 (3,4) = (1,1) is
        // lambda = (-1/2, 1/2), so no nonnegative solution exists.
        LPFeasibility r = solve_equality_feasibility({{1, 3}, {2, 4}}, {Rational(1), Rational(1)});
        REQUIRE_FALSE(r.feasible);
        REQUIRE(r.farkas.size() == 2);
        // y . b > 0 and y^T A <= 0 certify infeasibility.
        Rational yb = r.farkas[0] * Rational(1) + r.farkas[1] * Rational(1);
        CHECK(yb > 0);
        CHECK(r.farkas[0] * Rational(1) + r.farkas[1] * Rational(2) <= 0);
        CHECK(r.farkas[0] * Rational(3) + r.farkas[1] * Rational(4) <= 0);
    }
    SUBCASE("negative right-hand sides are rejected") {
        CHECK_THROWS_AS(solve_equality_feasibility({{1}}, {Rational(-1)}), DomainError);
    }
}

TEST_CASE("origin-in-hull certificates") {
    SUBCASE("opposite points straddle the origin") {
        HullCertificate cert = origin_in_hull({{1, 0}, {-1, 0}});
        CHECK(cert.origin_inside);
        CHECK(verify_certificate(cert));
        REQUIRE(cert.weights.size() == cert.points.size());
        Rational total(0);
        for (const Rational& w : cert.weights) total += w;
        CHECK(total == Rational(1));
    }
    SUBCASE("the origin itself is inside") {
        CHECK(origin_in_hull({{0, 0}}).origin_inside);
        CHECK(origin_in_hull({{0, 0, 0}}).origin_inside);
    }
    SUBCASE("points on one side are separated") {
        HullCertificate cert = origin_in_hull({{1, 1}, {-1, 1}});
        CHECK_FALSE(cert.origin_inside);
        CHECK(verify_certificate(cert));
        REQUIRE(cert.separator.size() == 2);
        for (const auto& m : cert.points) {
            Rational dot = cert.separator[0] * m[0] + cert.separator[1] * m[1];
            CHECK(dot >= Rational(1));
        }
    }
    SUBCASE("single off-origin point") {
        HullCertificate cert = origin_in_hull({{1, 0}});
        CHECK_FALSE(cert.origin_inside);
        CHECK(verify_certificate(cert));
    }
    SUBCASE("one dimensional") {
        CHECK(origin_in_hull({{2}, {-3}}).origin_inside);
        CHECK_FALSE(origin_in_hull({{1}, {2}}).origin_inside);
    }
    SUBCASE("duplicate points collapse") {
        HullCertificate cert = origin_in_hull({{1, 0}, {1, 0}, {-1, 0}});
        CHECK(cert.origin_inside);
        CHECK(cert.points.size() == 2);
    }
    SUBCASE("degenerate and error inputs") {
        CHECK_THROWS_AS(origin_in_hull({}), EmptySpectrumError);
        CHECK_THROWS_AS(origin_in_hull({{1, 0}, {1}}), DimensionMismatchError);
    }
    SUBCASE("interior three-point example") {
        HullCertificate cert = origin_in_hull({{2, 1}, {-1, 1}, {0, -2}});
        CHECK(cert.origin_inside);
        CHECK(verify_certificate(cert));
    }
}

TEST_CASE("tampered certificates fail the re-check") {
    HullCertificate inside = origin_in_hull({{1, 0}, {-1, 0}});
    inside.weights[0] += Rational(1, 10);
    CHECK_FALSE(verify_certificate(inside));

    HullCertificate outside = origin_in_hull({{1, 1}, {-1, 1}});
    outside.separator[1] = Rational(0);
    CHECK_FALSE(verify_certificate(outside));
}

TEST_CASE("vanishing threshold formula") {
    std::vector<Rational> v = {Rational(1), Rational(0)};
    SUBCASE("favourable companion spectra give the base threshold") {
        CHECK(vanishing_threshold({{1, 0}}, {{3, 0}}, v) == 1);
        CHECK(vanishing_threshold({{1, 0}}, {{0, 0}}, v) == 1);
        CHECK(vanishing_threshold({{1, 0}}, {}, v) == 1);
    }
    SUBCASE("opposing companion spectra push the threshold up") {
        CHECK(vanishing_threshold({{1, 0}}, {{-3, 0}}, v) == 4);
        CHECK(vanishing_threshold({{1, 0}}, {{-3, 7}, {2, 0}}, v) == 4);
    }
    SUBCASE("fractional separators round via floor") {
        std::vector<Rational> frac = {Rational(2, 3), Rational(0)};
        // v . m = 4/3 >= 1 on sp_f; max(-v . m') = 4/3, floor = 1, n0 = 2.
        CHECK(vanishing_threshold({{2, 0}}, {{-2, 1}}, frac) == 2);
    }
    SUBCASE("invalid separators are rejected") {
        CHECK_THROWS_AS(vanishing_threshold({{0, 1}}, {{1, 1}}, v), InvalidSeparatorError);
        CHECK_THROWS_AS(vanishing_threshold({}, {{1, 1}}, v), EmptySpectrumError);
    }
}

TEST_CASE("power integral sequences") {
    GroupModel m(measure_spec(GroupSpec::parse("SU(2)")));
    SUBCASE("moments of a11 c11 are 1/(n+1)") {
        LaurentPoly f = m.reduce(Expr::parse("a1[1,1]*c1[1,1]"));
        std::vector<GaussianRational> seq = power_integral_sequence(f, m.measure(), 5);
        REQUIRE(seq.size() == 5);
        for (int n = 1; n <= 5; ++n) CHECK(seq[n - 1] == GaussianRational(Rational(1, n + 1)));
    }
    SUBCASE("moments of a single entry all vanish") {
        LaurentPoly f = m.reduce(Expr::parse("a1[1,1]"));
        for (const GaussianRational& v : power_integral_sequence(f, m.measure(), 8)) {
            CHECK(v.is_zero());
        }
    }
}

TEST_CASE("full reports") {
    GroupModel m(measure_spec(GroupSpec::parse("SU(2)")));

    SUBCASE("separator branch: f = a[1,1], g = c[1,1]") {
        MathieuReport rep = mathieu_report(m, Expr::parse("a1[1,1]"), Expr::parse("c1[1,1]"), 12);
        CHECK(rep.n_max == 12);
        CHECK(rep.hypothesis_holds_up_to_n_max);
        CHECK_FALSE(rep.spectrum_empty);
        CHECK_FALSE(rep.hull.origin_inside);
        CHECK(rep.conclusion_applies);
        CHECK(rep.n0 >= 2);
        CHECK(rep.conclusion_integrals.size() == 6);
        CHECK(rep.conclusion_verified);
        // The window really is tight: at n = n0 - 1 = 1 the integral of
        // f^1 g is the Schur moment 1/2.
        CHECK(m.integrate(Expr::parse("a1[1,1]*c1[1,1]")) == GaussianRational(Rational(1, 2)));
    }
    SUBCASE("hypothesis fails immediately for a nonvanishing f") {
        MathieuReport rep =
            mathieu_report(m, Expr::parse("a1[1,1]*c1[1,1]"), Expr::parse("a1[1,1]"), 6);
        CHECK_FALSE(rep.hypothesis_holds_up_to_n_max);
        CHECK(rep.power_integrals[0] == GaussianRational(Rational(1, 2)));
        CHECK_FALSE(rep.spectrum_empty);
        // The spectrum is {(0,0)}, so the origin is inside the hull and no
        // separator exists.
        CHECK(rep.hull.origin_inside);
        CHECK_FALSE(rep.conclusion_applies);
        CHECK_FALSE(rep.moment_growth.empty());
    }
    SUBCASE("hypothesis fails at the second power") {
        MathieuReport rep = mathieu_report(m, Expr::parse("a1[1,1]*c1[1,1] - 1/2"),
                                           Expr::parse("a1[1,1]"), 6);
        CHECK_FALSE(rep.hypothesis_holds_up_to_n_max);
        CHECK(rep.power_integrals[0].is_zero());
        CHECK(rep.power_integrals[1] == GaussianRational(Rational(1, 12)));
    }
    SUBCASE("zero reductions short-circuit") {
        MathieuReport rep = mathieu_report(
            m, Expr::parse("a1[1,1]*a1[2,2] - a1[1,2]*a1[2,1] - 1"), Expr::parse("a1[1,1]"), 6);
        CHECK(rep.spectrum_empty);
        CHECK(rep.hypothesis_holds_up_to_n_max);
        CHECK_FALSE(rep.conclusion_applies);
    }
}
