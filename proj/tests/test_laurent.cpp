#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "haarpoly/errors.hpp"
#include "haarpoly/json_io.hpp"
#include "haarpoly/laurent.hpp"

#include <cmath>
#include <complex>

using namespace haarpoly;

namespace {
const GaussianRational kOne(1);
const GaussianRational kI = GaussianRational::i();
} // namespace

TEST_CASE("constructors and term access") {
    LaurentPoly zero(2, 1);
    CHECK(zero.is_zero());
    CHECK(zero.term_count() == 0);

    LaurentPoly c = LaurentPoly::constant(2, 1, GaussianRational(Rational(3, 4)));
    CHECK(c.coeff({0, 0, 0}) == GaussianRational(Rational(3, 4)));
    CHECK(c.coeff({1, 0, 0}) == GaussianRational(0));

    LaurentPoly x1 = LaurentPoly::x_var(2, 1, 0);
    CHECK(x1.coeff({1, 0, 0}) == kOne);

    LaurentPoly z_inv = LaurentPoly::circle_var(2, 1, 0, -1);
    CHECK(z_inv.coeff({0, 0, -1}) == kOne);

    CHECK(LaurentPoly::constant(2, 1, GaussianRational(0)).is_zero());
    CHECK_THROWS_AS(LaurentPoly::x_var(2, 1, 0, -1), DomainError);
    CHECK_THROWS_AS(LaurentPoly::monomial(2, 1, {-1, 0, 0}, kOne), DomainError);
    CHECK_THROWS_AS(LaurentPoly::x_var(2, 1, 5), IndexError);
}

TEST_CASE("ring arithmetic") {
    const int nx = 1, nc = 1;
    LaurentPoly x = LaurentPoly::x_var(nx, nc, 0);
    LaurentPoly z = LaurentPoly::circle_var(nx, nc, 0);
    LaurentPoly zi = LaurentPoly::circle_var(nx, nc, 0, -1);

    SUBCASE("difference of squares") {
        LaurentPoly lhs = (x + z) * (x - z);
        LaurentPoly rhs = x * x - z * z;
        CHECK(lhs == rhs);
    }
    SUBCASE("cancellation erases terms") {
        LaurentPoly p = x + z;
        p -= z;
        CHECK(p == x);
        p -= x;
        CHECK(p.is_zero());
    }
    SUBCASE("circle inverses multiply to 1") {
        CHECK(z * zi == LaurentPoly::constant(nx, nc, kOne));
    }
    SUBCASE("binary powers") {
        LaurentPoly p = x + z;
        CHECK(p.pow(0) == LaurentPoly::constant(nx, nc, kOne));
        CHECK(p.pow(1) == p);
        CHECK(p.pow(3) == p * p * p);
    }
    SUBCASE("scalar multiples and negation") {
        LaurentPoly p = GaussianRational(Rational(2)) * x - z;
        CHECK(p.coeff({1, 0}) == GaussianRational(2));
        CHECK((-p).coeff({1, 0}) == GaussianRational(-2));
    }
    SUBCASE("shape mismatches are rejected") {
        LaurentPoly other = LaurentPoly::x_var(2, 1, 0);
        CHECK_THROWS_AS(x + other, DimensionMismatchError);
    }
}

TEST_CASE("conjugation negates circle exponents and conjugates coefficients") {
    const int nx = 1, nc = 2;
    LaurentPoly p = kI * (LaurentPoly::x_var(nx, nc, 0) * LaurentPoly::circle_var(nx, nc, 0)) +
                    LaurentPoly::constant(nx, nc, GaussianRational(Rational(1, 2), Rational(1, 3)));
    LaurentPoly q = p.conjugate();
    CHECK(q.coeff({1, -1, 0}) == GaussianRational(Rational(0), Rational(-1)));
    CHECK(q.coeff({0, 0, 0}) == GaussianRational(Rational(1, 2), Rational(-1, 3)));
    CHECK(q.conjugate() == p); // involution
}

TEST_CASE("numeric evaluation matches the symbolic terms") {
    const int nx = 1, nc = 1;
    LaurentPoly p = LaurentPoly::x_var(nx, nc, 0, 2) * LaurentPoly::circle_var(nx, nc, 0, -1) +
                    LaurentPoly::constant(nx, nc, kI);
    std::complex<double> z(0.6, 0.8);
    std::complex<double> got = p.eval({0.5}, {z});
    std::complex<double> want = 0.25 / z + std::complex<double>(0, 1);
    CHECK(std::abs(got - want) < 1e-15);
}

TEST_CASE("spectrum lists each circle exponent vector once, sorted") {
    const int nx = 1, nc = 2;
    LaurentPoly x = LaurentPoly::x_var(nx, nc, 0);
    LaurentPoly w = LaurentPoly::circle_var(nx, nc, 0);
    LaurentPoly z = LaurentPoly::circle_var(nx, nc, 1);
    LaurentPoly p = x * w * z.pow(1) + w + x * x * w; // circle support {(1,1),(1,0)}
    auto sp = p.spectrum();
    CHECK(sp == std::vector<std::vector<int>>{{1, 0}, {1, 1}});
    CHECK(LaurentPoly(nx, nc).spectrum().empty());
}

TEST_CASE("weighted integral against a one-factor measure") {
    MeasureSpec spec = measure_spec(GroupSpec::parse("SU(2)")); // n_x=1, n_circle=2, e=[1]
    const int nx = 1, nc = 2;

    SUBCASE("mass is one") {
        CHECK(weighted_integral(LaurentPoly::constant(nx, nc, kOne), spec) == kOne);
    }
    SUBCASE("circle terms average to zero") {
        CHECK(weighted_integral(LaurentPoly::circle_var(nx, nc, 0), spec) == GaussianRational(0));
        CHECK(weighted_integral(LaurentPoly::circle_var(nx, nc, 1, -3), spec) == GaussianRational(0));
    }
    SUBCASE("cell moments") {
        // integral of x^a against 2x dx on [0,1] is 2/(a+2)
        LaurentPoly x = LaurentPoly::x_var(nx, nc, 0);
        CHECK(weighted_integral(x, spec) == GaussianRational(Rational(2, 3)));
        LaurentPoly one_minus_x2 = LaurentPoly::constant(nx, nc, kOne) - x * x;
        CHECK(weighted_integral(one_minus_x2, spec) == GaussianRational(Rational(1, 2)));
    }
    SUBCASE("shape mismatch is rejected") {
        CHECK_THROWS_AS(weighted_integral(LaurentPoly::constant(2, 2, kOne), spec),
                        DimensionMismatchError);
    }
}

TEST_CASE("canonical text form") {
    const int nx = 1, nc = 2;
    LaurentPoly p = GaussianRational(Rational(1, 2)) * LaurentPoly::x_var(nx, nc, 0, 2) *
                        LaurentPoly::circle_var(nx, nc, 1, -1) +
                    LaurentPoly::constant(nx, nc, kOne);
    CHECK(p.str() == "1 + 1/2*x1^2*z2^-1");
    CHECK(LaurentPoly(nx, nc).str() == "0");
}

TEST_CASE("JSON round trip") {
    const int nx = 2, nc = 3;
    LaurentPoly p = kI * LaurentPoly::x_var(nx, nc, 1, 3) * LaurentPoly::circle_var(nx, nc, 2, -2) +
                    GaussianRational(Rational(-7, 5)) * LaurentPoly::circle_var(nx, nc, 0) +
                    LaurentPoly::constant(nx, nc, GaussianRational(Rational(1), Rational(-2)));
    Json j = to_json(p);
    LaurentPoly q = poly_from_json(j);
    CHECK(q == p);
}
