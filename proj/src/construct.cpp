#include "moutard/construct.hpp"

#include "moutard/error.hpp"

namespace moutard {

bool proportional(const BivariatePoly& a, const BivariatePoly& b) {
    if (a.is_zero() || b.is_zero()) return true;
    const Term& la = a.leading_term();
    const Term& lb = b.leading_term();
    if (!(la.exp == lb.exp)) return false;
    return scale(a, lb.coef / la.coef) == b;
}

void validate_seeds(const SeedPair& seeds) {
    if (seeds.omega1.is_zero() || seeds.omega2.is_zero()) throw Error(ErrorKind::ZeroSeed, "a seed is zero");
    if (!verify_solution(seeds.u0, RationalFn(seeds.omega1)))
        throw Error(ErrorKind::SeedNotInKernel, "omega1 is not a zero-energy solution");
    if (!verify_solution(seeds.u0, RationalFn(seeds.omega2)))
        throw Error(ErrorKind::SeedNotInKernel, "omega2 is not a zero-energy solution");
    if (proportional(seeds.omega1, seeds.omega2))
        throw Error(ErrorKind::ProportionalSeeds, "omega2 is a constant multiple of omega1");
}

BivariatePoly theta_antiderivative(const SeedPair& seeds) {
    validate_seeds(seeds);
    return moutard_solution(seeds.u0, seeds.omega1, seeds.omega2).antiderivative;
}

DoubleMoutardResult double_transform(const SeedPair& seeds, const BigRational& c) {
    BivariatePoly f = theta_antiderivative(seeds);
    DoubleMoutardResult r;
    r.C = c;
    r.W = f + BivariatePoly(c);

    RationalFn minus_two_log{scale(r.W * laplacian(r.W) - (diff_x(r.W) * diff_x(r.W) + diff_y(r.W) * diff_y(r.W)), -2),
                             r.W * r.W};
    r.u = seeds.u0.num.is_zero() ? minus_two_log : rf_add(seeds.u0, minus_two_log);
    r.theta1 = {r.W, seeds.omega1};
    r.theta2 = {-r.W, seeds.omega2};
    r.psi1 = {seeds.omega1, r.W};
    r.psi2 = {-seeds.omega2, r.W};

    if (!verify_solution(r.u, r.psi1))
        throw Error(ErrorKind::AssertionFailed, "psi1 = omega1/W is not in the kernel of -Δ + u");
    if (!verify_solution(r.u, r.psi2))
        throw Error(ErrorKind::AssertionFailed, "psi2 = -omega2/W is not in the kernel of -Δ + u");
    return r;
}

bool verify_lemma(const SeedPair& seeds, const BigRational& c) {
    DoubleMoutardResult r = double_transform(seeds, c);
    RationalFn u1 = moutard_potential(seeds.u0, seeds.omega1);
    RationalFn u2 = moutard_potential(seeds.u0, seeds.omega2);
    RationalFn via1, via2;
    try {
        via1 = moutard_potential(u1, r.theta1);
        via2 = moutard_potential(u2, r.theta2);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::SeedNotInKernel) return false;
        throw;
    }
    // θ2 = −(ω1/ω2)θ1 with denominators cleared.
    if (!(seeds.omega2 * r.theta2.num * r.theta1.den == -(seeds.omega1 * r.theta1.num * r.theta2.den))) return false;
    if (!rf_equal(via1, r.u) || !rf_equal(via2, r.u)) return false;
    return verify_solution(r.u, rf_reciprocal(r.theta1)) && verify_solution(r.u, rf_reciprocal(r.theta2));
}

AffineCalibration calibrate_against(const BivariatePoly& f, const BivariatePoly& target) {
    if (f.is_constant()) throw Error(ErrorKind::InvalidArgument, "calibration needs a nonconstant F");
    const Term& lead = f.leading_term();
    AffineCalibration cal;
    cal.lambda = target.coefficient(lead.exp.i, lead.exp.j) / lead.coef;
    cal.constant = target.coefficient(0, 0) - cal.lambda * f.coefficient(0, 0);
    if (!(scale(f, cal.lambda) + BivariatePoly(cal.constant) == target))
        throw Error(ErrorKind::NoAffineMatch, "target is not of the form λF + C");
    return cal;
}

}  // namespace moutard
