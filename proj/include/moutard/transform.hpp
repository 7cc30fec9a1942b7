#pragma once

#include "moutard/rational_fn.hpp"

namespace moutard {

/// P dx + Q dy with polynomial components and dP/dy = dQ/dx.
struct ClosedOneForm {
    BivariatePoly dx;
    BivariatePoly dy;
};

/// The Moutard image of a solution, defined only up to C/omega:
/// member(C) = (antiderivative + C) / omega.
struct TransformFamily {
    BivariatePoly omega;
    BivariatePoly antiderivative;

    RationalFn member(const BigRational& c) const { return {antiderivative + BivariatePoly(c), omega}; }
};

/// (W ΔW − |∇W|²) / W², i.e. Δ log W.
RationalFn log_laplacian(const BivariatePoly& w);

/// ũ = 2(ω_x² + ω_y²)/ω² − u. Checks (−Δ + u)ω = 0 first.
RationalFn moutard_potential(const RationalFn& u, const BivariatePoly& omega);

/// Same map with a rational seed θ = N/D (used for the second step of the
/// double construction): ũ = 2|∇θ|²/θ² − u.
RationalFn moutard_potential(const RationalFn& u, const RationalFn& theta);

/// The 1-form whose potential is ω·φ̃:
/// P = −(ω φ_y − φ ω_y), Q = ω φ_x − φ ω_x.
ClosedOneForm solution_one_form(const BivariatePoly& omega, const BivariatePoly& phi);

/// Polynomial F with dF = form and F(0,0) = 0, by termwise quadrature.
BivariatePoly integrate_closed(const ClosedOneForm& form);

ClosedOneForm exterior_derivative(const BivariatePoly& f);

TransformFamily moutard_solution(const RationalFn& u, const BivariatePoly& omega, const BivariatePoly& phi);

/// True iff (−Δ + u)ψ = 0 exactly.
bool verify_solution(const RationalFn& u, const RationalFn& psi);

}  // namespace moutard
