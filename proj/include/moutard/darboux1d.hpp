#pragma once

#include <vector>

#include "moutard/rational_fn.hpp"
#include "moutard/univariate.hpp"

namespace moutard {

/// One Darboux step for L' = −d²/dx² + (u + k²) with seed f in its kernel.
struct DarbouxStep {
    RationalFn1D u;
    RationalFn1D f;
    BigRational k = 0;
};

/// True iff (−d²/dx² + u + k²)g = 0.
bool verify_solution_1d(const RationalFn1D& u, const BigRational& k, const RationalFn1D& g);

/// ũ = u − 2 (log f)''. Throws SeedNotInKernel.
RationalFn1D darboux_step(const DarbouxStep& step);

/// g' − (f'/f) g, the image of a kernel element g. Throws SeedNotInKernel if g
/// does not solve the original equation.
RationalFn1D darboux_solution(const DarbouxStep& step, const RationalFn1D& g);

/// u_1..u_n starting from u_0 = 0 with seeds x, x², ..., x^n.
std::vector<RationalFn1D> rational_chain(unsigned n);

/// The same function viewed on the plane (independent of y).
RationalFn lift_to_plane(const RationalFn1D& f);
BivariatePoly lift_to_plane(const Poly1D& p);

}  // namespace moutard
