#include "doctest.h"
#include "moutard/error.hpp"
#include "moutard/transform.hpp"
#include "support.hpp"

using namespace moutard;
using moutard::testing::random_harmonic;
using moutard::testing::random_poly;
using moutard::testing::random_rational;

namespace {

const BivariatePoly X = BivariatePoly::x();
const BivariatePoly Y = BivariatePoly::y();

BivariatePoly P(const char* s) { return parse_poly(s); }

const char* kOmega1 = "x + 2*(x^2 - y^2) + x*y";
const char* kOmega2 = "x + y + 3/2*(x^2 - y^2) + 5*x*y";

}  // namespace

TEST_CASE("moutard_potential") {
    CHECK(moutard_potential(RationalFn(), BivariatePoly(1)).num.is_zero());
    CHECK(rf_equal(moutard_potential(RationalFn(), X), {2, X * X}));

    BivariatePoly w1 = P(kOmega1);
    RationalFn expected{scale(pow(P("1 + 4*x + y"), 2) + pow(P("-4*y + x"), 2), 2), w1 * w1};
    RationalFn got = moutard_potential(RationalFn(), w1);
    CHECK(rf_equal(got, expected));
    // same potential as u - 2Δ log ω
    CHECK(rf_equal(got, rf_scale(log_laplacian(w1), -2)));

    CHECK_THROWS_AS(moutard_potential(RationalFn(), X * X), Error);
    CHECK_THROWS_AS(moutard_potential(RationalFn(), BivariatePoly()), Error);
}

TEST_CASE("solution_one_form") {
    ClosedOneForm a = solution_one_form(1, X);
    CHECK(a.dx.is_zero());
    CHECK(a.dy == BivariatePoly(1));
    ClosedOneForm b = solution_one_form(X, Y);
    CHECK(b.dx == -X);
    CHECK(b.dy == -Y);
    ClosedOneForm c = solution_one_form(P(kOmega1), P(kOmega2));
    CHECK(c.dx.degree() == 3u);
    CHECK(c.dy.degree() == 3u);
    CHECK(diff_y(c.dx) == diff_x(c.dy));
    CHECK_THROWS_AS(solution_one_form(X, X * X), Error);
}

TEST_CASE("integrate_closed") {
    CHECK(integrate_closed({0, 1}) == Y);
    CHECK(integrate_closed({-X, -Y}) == scale(X * X + Y * Y, make_rational(-1, 2)));
    // independent CAS oracle for the Example 1 quadrature
    BivariatePoly f = integrate_closed(solution_one_form(P(kOmega1), P(kOmega2)));
    CHECK(f == P("-17/8*x^4 - 2*x^3 - 17/4*x^2*y^2 - 1/2*x^2*y - 1/2*x^2 - 2*x*y^2 - 17/8*y^4 - 1/2*y^3 - "
                 "1/2*y^2"));
    CHECK(evaluate(f, 0, 0) == 0);
    CHECK_THROWS_AS(integrate_closed({Y, BivariatePoly()}), Error);
}

TEST_CASE("moutard_solution") {
    TransformFamily a = moutard_solution(RationalFn(), 1, X);
    CHECK(rf_equal(a.member(3), {Y + 3, 1}));
    CHECK(verify_solution(RationalFn(), a.member(3)));

    TransformFamily b = moutard_solution(RationalFn(), X, Y);
    RationalFn u = moutard_potential(RationalFn(), X);
    for (int c : {-2, 0, 5}) {
        RationalFn m = b.member(c);
        CHECK(rf_equal(m, {BivariatePoly(c) - scale(X * X + Y * Y, make_rational(1, 2)), X}));
        CHECK(verify_solution(u, m));
    }
    CHECK_THROWS_AS(moutard_solution(RationalFn(), X * X, Y), Error);
}

TEST_CASE("verify_solution") {
    CHECK(verify_solution(RationalFn(), RationalFn(P("x^2 - y^2"))));
    CHECK_FALSE(verify_solution(RationalFn(), RationalFn(P("x^2"))));
    BivariatePoly w = P("160 + 4*x^2 + 4*y^2 + 17*(x^2 + y^2)^2 + 16*x^3 + 4*x^2*y + 16*x*y^2 + 4*y^3");
    RationalFn u{P("-5120*(17*x^2 + 8*x + 17*y^2 + 2*y + 1)"), w * w};
    CHECK(verify_solution(u, {P("8*(x + 2*x^2 + x*y - 2*y^2)"), w}));
    CHECK(verify_solution(u, {P("4*(2*x + 2*y + 3*x^2 + 10*x*y - 3*y^2)"), w}));
    CHECK_FALSE(verify_solution(u, {P("x"), w}));
}

TEST_CASE("property: Moutard image solves the transformed equation") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 40; ++k) {
        BivariatePoly omega = random_harmonic(rng, 4, 5);
        BivariatePoly phi = random_harmonic(rng, 4, 5);
        TransformFamily fam = moutard_solution(RationalFn(), omega, phi);
        RationalFn ut = moutard_potential(RationalFn(), omega);
        CHECK(verify_solution(ut, fam.member(random_rational(rng))));
        // the reciprocal seed lies in the new kernel
        CHECK(verify_solution(ut, {1, omega}));
    }
}

TEST_CASE("property: quadrature inverts the exterior derivative") {
    std::mt19937_64 rng(12);
    for (int k = 0; k < 100; ++k) {
        BivariatePoly f0 = random_poly(rng, 6, 8);
        f0 -= BivariatePoly(f0.coefficient(0, 0));
        CHECK(integrate_closed(exterior_derivative(f0)) == f0);
    }
}

TEST_CASE("property: quadrature is linear in the co-seed") {
    std::mt19937_64 rng(13);
    for (int k = 0; k < 40; ++k) {
        BivariatePoly omega = random_harmonic(rng, 3, 6);
        BivariatePoly p1 = random_harmonic(rng, 3, 6), p2 = random_harmonic(rng, 3, 6);
        BigRational a = random_rational(rng), b = random_rational(rng);
        BivariatePoly f1 = moutard_solution(RationalFn(), omega, p1).antiderivative;
        BivariatePoly f2 = moutard_solution(RationalFn(), omega, p2).antiderivative;
        BivariatePoly f = moutard_solution(RationalFn(), omega, scale(p1, a) + scale(p2, b)).antiderivative;
        CHECK(f == scale(f1, a) + scale(f2, b));
    }
}
