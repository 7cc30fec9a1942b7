#include "moutard/darboux1d.hpp"

#include "moutard/error.hpp"

namespace moutard {
namespace {

// (log P)'' = (P'' P − P'²) / P².
RationalFn1D log_second_derivative(const Poly1D& p) {
    Poly1D d1 = derivative(p);
    return {derivative(d1) * p - d1 * d1, p * p};
}

}  // namespace

bool verify_solution_1d(const RationalFn1D& u, const BigRational& k, const RationalFn1D& g) {
    RationalFn1D second = rf_derivative(rf_derivative(g));
    RationalFn1D shifted = rf_add(u, RationalFn1D(Poly1D(k * k)));
    return rf_equal(second, rf_mul(shifted, g));
}

RationalFn1D darboux_step(const DarbouxStep& step) {
    if (step.f.num.is_zero()) throw Error(ErrorKind::ZeroSeed, "seed f is zero");
    if (!verify_solution_1d(step.u, step.k, step.f))
        throw Error(ErrorKind::SeedNotInKernel, "seed " + to_string(step.f) + " is not in the kernel");
    RationalFn1D log2 = rf_sub(log_second_derivative(step.f.num), log_second_derivative(step.f.den));
    return rf_reduce(rf_sub(step.u, rf_scale(log2, 2)));
}

RationalFn1D darboux_solution(const DarbouxStep& step, const RationalFn1D& g) {
    if (!verify_solution_1d(step.u, step.k, g))
        throw Error(ErrorKind::SeedNotInKernel, "g = " + to_string(g) + " is not in the kernel");
    const RationalFn1D f_log = rf_mul(rf_derivative(step.f), RationalFn1D(step.f.den, step.f.num));
    return rf_reduce(rf_sub(rf_derivative(g), rf_mul(f_log, g)));
}

std::vector<RationalFn1D> rational_chain(unsigned n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "rational_chain needs n >= 1");
    std::vector<RationalFn1D> chain;
    RationalFn1D u;
    for (unsigned level = 0; level < n; ++level) {
        u = darboux_step({u, RationalFn1D(Poly1D::monomial(level + 1)), 0});
        chain.push_back(u);
    }
    return chain;
}

BivariatePoly lift_to_plane(const Poly1D& p) {
    std::vector<Term> terms;
    const auto& c = p.coefficients();
    for (unsigned k = 0; k < c.size(); ++k)
        if (c[k] != 0) terms.push_back({{k, 0}, c[k]});
    return BivariatePoly::from_terms(std::move(terms));
}

RationalFn lift_to_plane(const RationalFn1D& f) { return {lift_to_plane(f.num), lift_to_plane(f.den)}; }

}  // namespace moutard
