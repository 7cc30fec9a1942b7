#include "doctest.h"
#include "moutard/darboux1d.hpp"
#include "moutard/error.hpp"
#include "moutard/transform.hpp"

using namespace moutard;

namespace {

const Poly1D x = Poly1D::x();

RationalFn1D over_x2(long c) { return {Poly1D(c), x * x}; }

}  // namespace

TEST_CASE("darboux_step") {
    CHECK(rf_equal(darboux_step({RationalFn1D(), RationalFn1D(x)}), over_x2(2)));
    CHECK(rf_equal(darboux_step({over_x2(2), RationalFn1D(x * x)}), over_x2(6)));
    CHECK_THROWS_AS(darboux_step({RationalFn1D(), RationalFn1D(x * x)}), Error);
}

TEST_CASE("rational_chain") {
    auto one = rational_chain(1);
    REQUIRE(one.size() == 1);
    CHECK(rf_equal(one[0], over_x2(2)));
    auto five = rational_chain(5);
    REQUIRE(five.size() == 5);
    for (unsigned n = 1; n <= 5; ++n) CHECK(rf_equal(five[n - 1], over_x2(long(n * (n + 1)))));
    // iterating further keeps the closed form
    auto ten = rational_chain(10);
    for (unsigned n = 1; n <= 10; ++n) CHECK(rf_equal(ten[n - 1], over_x2(long(n * (n + 1)))));
}

TEST_CASE("chain kernel elements") {
    auto chain = rational_chain(6);
    for (unsigned n = 1; n <= 6; ++n) {
        // x^(n+1) and x^(-n) solve -g'' + n(n+1)/x² g = 0
        CHECK(verify_solution_1d(chain[n - 1], 0, RationalFn1D(pow(x, n + 1))));
        CHECK(verify_solution_1d(chain[n - 1], 0, {Poly1D(1), pow(x, n)}));
        CHECK_FALSE(verify_solution_1d(chain[n - 1], 0, RationalFn1D(pow(x, n))));
    }
}

TEST_CASE("darboux_solution maps kernels") {
    DarbouxStep step{RationalFn1D(), RationalFn1D(x)};
    RationalFn1D image = darboux_solution(step, RationalFn1D(1));
    CHECK(verify_solution_1d(darboux_step(step), 0, image));
    CHECK(rf_equal(image, {Poly1D(-1), x}));
    CHECK_THROWS_AS(darboux_solution(step, RationalFn1D(x * x)), Error);
}

TEST_CASE("plane Moutard with a y-independent seed reproduces the first step") {
    RationalFn plane = moutard_potential(RationalFn(), lift_to_plane(x));
    CHECK(rf_equal(plane, lift_to_plane(rational_chain(1)[0])));
    auto chain = rational_chain(3);
    for (unsigned n = 1; n < 3; ++n) {
        RationalFn next = moutard_potential(lift_to_plane(chain[n - 1]), lift_to_plane(pow(x, n + 1)));
        CHECK(rf_equal(next, lift_to_plane(chain[n])));
    }
}
