#pragma once

#include "moutard/transform.hpp"

namespace moutard {

/// Two zero-energy solutions of −Δ + u0.
struct SeedPair {
    RationalFn u0;
    BivariatePoly omega1;
    BivariatePoly omega2;
};

/// Output of the double Moutard construction for a fixed constant C.
///
/// W = F + C where F is the quadrature of the θ1-family, θ1 = W/ω1 and
/// θ2 = −W/ω2. Both second-step transforms land on u = u0 − 2Δ log W, whose
/// kernel contains ψ1 = ω1/W and ψ2 = −ω2/W.
struct DoubleMoutardResult {
    BivariatePoly W;
    BigRational C;
    RationalFn u;
    RationalFn psi1;
    RationalFn psi2;
    RationalFn theta1;
    RationalFn theta2;
};

/// Throws SeedNotInKernel, ZeroSeed or ProportionalSeeds.
void validate_seeds(const SeedPair& seeds);

/// True iff b = c·a for some rational c (either may be zero).
bool proportional(const BivariatePoly& a, const BivariatePoly& b);

/// The antiderivative F of the θ1-family M_{ω1}(ω2), normalized F(0,0) = 0.
BivariatePoly theta_antiderivative(const SeedPair& seeds);

DoubleMoutardResult double_transform(const SeedPair& seeds, const BigRational& c);

/// Checks that both branches (u1, θ1) and (u2, θ2) reach the same potential
/// and that 1/θ1, 1/θ2 are zero-energy solutions for it.
bool verify_lemma(const SeedPair& seeds, const BigRational& c);

struct AffineCalibration {
    BigRational lambda;
    BigRational constant;
};

/// The unique (λ, C) with λ·F + C = target; throws NoAffineMatch.
AffineCalibration calibrate_against(const BivariatePoly& f, const BivariatePoly& target);

}  // namespace moutard
