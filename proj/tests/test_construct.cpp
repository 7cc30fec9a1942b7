#include "doctest.h"
#include "moutard/construct.hpp"
#include "moutard/error.hpp"
#include "moutard/transform.hpp"
#include "support.hpp"

using namespace moutard;
using moutard::testing::random_harmonic;
using moutard::testing::random_rational;

namespace {

const BivariatePoly X = BivariatePoly::x();
const BivariatePoly Y = BivariatePoly::y();

BivariatePoly P(const char* s) { return parse_poly(s); }

SeedPair example1() { return {RationalFn(), P("x + 2*(x^2 - y^2) + x*y"), P("x + y + 3/2*(x^2 - y^2) + 5*x*y")}; }

SeedPair example2() {
    return {RationalFn(), P("x + (x^2 - y^2 - 3*x*y)/5 + 2*(-x^3 - 3*x^2*y + 3*x*y^2 + y^3)"),
            P("x + y + (x^2 - y^2)/2 - x*y/5 - 4*(3*x^2*y - y^3)")};
}

BivariatePoly reference_w() {
    return P("160 + 4*x^2 + 4*y^2 + 17*(x^2 + y^2)^2 + 16*x^3 + 4*x^2*y + 16*x*y^2 + 4*y^3");
}

}  // namespace

TEST_CASE("double_transform on linear seeds") {
    SeedPair s{RationalFn(), X, Y};
    DoubleMoutardResult r = double_transform(s, 1);
    CHECK(r.W == BivariatePoly(1) - scale(X * X + Y * Y, make_rational(1, 2)));
    CHECK(verify_solution(r.u, r.psi1));
    CHECK(verify_solution(r.u, r.psi2));
    CHECK(verify_lemma(s, 1));
}

TEST_CASE("double_transform on Example 1 matches the reference formulas after calibration") {
    SeedPair s = example1();
    BivariatePoly f = theta_antiderivative(s);
    AffineCalibration cal = calibrate_against(f, reference_w());
    CHECK(cal.lambda == -8);
    CHECK(cal.constant == 160);
    // scaling ω2 by λ scales F by λ and reproduces W exactly
    SeedPair scaled{s.u0, s.omega1, scale(s.omega2, cal.lambda)};
    DoubleMoutardResult r = double_transform(scaled, cal.constant);
    CHECK(r.W == reference_w());
    CHECK(evaluate(r.W, 0, 0) == 160);
    CHECK(rf_equal(r.u, {P("-5120*(17*x^2 + 8*x + 17*y^2 + 2*y + 1)"), reference_w() * reference_w()}));
    CHECK(rf_equal(r.psi1, {P("x + 2*x^2 + x*y - 2*y^2"), reference_w()}));
    CHECK(rf_equal(r.psi2, {P("8*(x + y + 3/2*(x^2 - y^2) + 5*x*y)"), reference_w()}));
    CHECK(verify_lemma(scaled, cal.constant));
}

TEST_CASE("double_transform on Example 2") {
    SeedPair s = example2();
    BivariatePoly f = theta_antiderivative(s);
    CHECK(leading_form(f) == scale(pow(X * X + Y * Y, 3), -4));
    DoubleMoutardResult r = double_transform({s.u0, s.omega1, -s.omega2}, 1);
    CHECK(leading_form(r.W) == scale(pow(X * X + Y * Y, 3), 4));
    CHECK(verify_solution(r.u, r.psi1));
    CHECK(verify_solution(r.u, r.psi2));
    // numerator degree 4 against a degree 12 denominator: decay r^-8
    CHECK(*r.u.den.degree() - *r.u.num.degree() == 8);
}

TEST_CASE("seed validation") {
    CHECK_THROWS_AS(double_transform({RationalFn(), X, scale(X, 2)}, 1), Error);
    try {
        validate_seeds({RationalFn(), X, scale(X, 2)});
        FAIL("expected ProportionalSeeds");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ProportionalSeeds);
    }
    try {
        validate_seeds({RationalFn(), X * X, Y});
        FAIL("expected SeedNotInKernel");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SeedNotInKernel);
    }
    try {
        validate_seeds({RationalFn(), BivariatePoly(), Y});
        FAIL("expected ZeroSeed");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroSeed);
    }
    CHECK(proportional(X, scale(X, make_rational(-3, 7))));
    CHECK_FALSE(proportional(X, Y));
}

TEST_CASE("calibrate_against") {
    BivariatePoly f0 = P("x^2 - 3*x*y + y");
    AffineCalibration c = calibrate_against(scale(f0, 2), f0 + BivariatePoly(5));
    CHECK(c.lambda == make_rational(1, 2));
    CHECK(c.constant == 5);
    CHECK_THROWS_AS(calibrate_against(X, Y), Error);
}

TEST_CASE("property: both branches reach the same potential") {
    std::mt19937_64 rng(21);
    int checked = 0;
    for (int k = 0; k < 40; ++k) {
        SeedPair s{RationalFn(), random_harmonic(rng, 3), random_harmonic(rng, 3)};
        if (proportional(s.omega1, s.omega2)) continue;
        BigRational c = random_rational(rng);
        if (c == 0) c = 1;
        CHECK(verify_lemma(s, c));
        DoubleMoutardResult r = double_transform(s, c);
        CHECK(rf_equal(rf_mul(RationalFn(s.omega2), r.theta2), rf_neg(rf_mul(RationalFn(s.omega1), r.theta1))));
        CHECK(rf_equal(r.u, rf_scale(log_laplacian(r.W), -2)));
        CHECK_FALSE(proportional(r.psi1.num * r.psi2.den, r.psi2.num * r.psi1.den));
        ++checked;
    }
    CHECK(checked > 30);
}

TEST_CASE("property: scaling W") {
    std::mt19937_64 rng(22);
    for (int k = 0; k < 20; ++k) {
        SeedPair s{RationalFn(), random_harmonic(rng, 3), random_harmonic(rng, 3)};
        if (proportional(s.omega1, s.omega2)) continue;
        BigRational c = random_rational(rng), lambda = random_rational(rng);
        if (c == 0) c = 1;
        if (lambda == 0) lambda = -3;
        DoubleMoutardResult r = double_transform(s, c);
        BivariatePoly w = scale(r.W, lambda);
        CHECK(rf_equal(rf_scale(log_laplacian(w), -2), r.u));
        CHECK(rf_equal(RationalFn(s.omega1, w), rf_scale(r.psi1, 1 / lambda)));
        CHECK(rf_equal(RationalFn(-s.omega2, w), rf_scale(r.psi2, 1 / lambda)));
        // the same rescaling reached through the seeds: ω2 -> λω2, C -> λC
        DoubleMoutardResult t = double_transform({s.u0, s.omega1, scale(s.omega2, lambda)}, c * lambda);
        CHECK(t.W == w);
        CHECK(rf_equal(t.u, r.u));
        CHECK(rf_equal(t.psi1, rf_scale(r.psi1, 1 / lambda)));
    }
}

TEST_CASE("proportional seeds give dependent solutions") {
    SeedPair s{RationalFn(), X, Y};
    DoubleMoutardResult r = double_transform(s, 2);
    CHECK_FALSE(proportional(r.psi1.num, r.psi2.num));
    CHECK_THROWS_AS(double_transform({RationalFn(), X, scale(X, 5)}, 2), Error);
}
