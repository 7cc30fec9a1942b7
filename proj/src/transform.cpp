#include "moutard/transform.hpp"

#include "moutard/error.hpp"

namespace moutard {
namespace {

BivariatePoly antiderivative_x(const BivariatePoly& p) {
    std::vector<Term> terms;
    for (const auto& t : p.terms()) terms.push_back({{t.exp.i + 1, t.exp.j}, t.coef / (t.exp.i + 1)});
    return BivariatePoly::from_terms(std::move(terms));
}

BivariatePoly antiderivative_y(const BivariatePoly& p) {
    std::vector<Term> terms;
    for (const auto& t : p.terms()) terms.push_back({{t.exp.i, t.exp.j + 1}, t.coef / (t.exp.j + 1)});
    return BivariatePoly::from_terms(std::move(terms));
}

BivariatePoly gradient_norm2(const BivariatePoly& p) {
    BivariatePoly px = diff_x(p), py = diff_y(p);
    return px * px + py * py;
}

}  // namespace

RationalFn log_laplacian(const BivariatePoly& w) {
    if (w.is_zero()) throw Error(ErrorKind::ZeroSeed, "log of the zero polynomial");
    return {w * laplacian(w) - gradient_norm2(w), w * w};
}

bool verify_solution(const RationalFn& u, const RationalFn& psi) {
    // Δψ and uψ share the denominator b³ whenever u's denominator is b²,
    // which is how every potential in this library is built.
    RationalFn lap = rf_laplacian(psi);
    RationalFn up = rf_mul(u, psi);
    return rf_sub(lap, up).num.is_zero();
}

RationalFn moutard_potential(const RationalFn& u, const BivariatePoly& omega) {
    if (omega.is_zero()) throw Error(ErrorKind::ZeroSeed, "seed omega is zero");
    if (!verify_solution(u, RationalFn(omega)))
        throw Error(ErrorKind::SeedNotInKernel, "(-Δ + u)ω ≠ 0 for ω = " + to_string(omega));
    RationalFn grad{scale(gradient_norm2(omega), 2), omega * omega};
    return rf_sub(grad, u);
}

RationalFn moutard_potential(const RationalFn& u, const RationalFn& theta) {
    if (theta.num.is_zero()) throw Error(ErrorKind::ZeroSeed, "seed theta is zero");
    if (!verify_solution(u, theta))
        throw Error(ErrorKind::SeedNotInKernel, "(-Δ + u)θ ≠ 0 for θ = " + to_string(theta));
    const auto& n = theta.num;
    const auto& d = theta.den;
    // θ_x/θ = (N_x D − N D_x) / (N D), likewise for y.
    BivariatePoly gx = diff_x(n) * d - n * diff_x(d);
    BivariatePoly gy = diff_y(n) * d - n * diff_y(d);
    BivariatePoly nd = n * d;
    RationalFn grad{scale(gx * gx + gy * gy, 2), nd * nd};
    return rf_sub(grad, u);
}

ClosedOneForm solution_one_form(const BivariatePoly& omega, const BivariatePoly& phi) {
    if (!(omega * laplacian(phi) == phi * laplacian(omega)))
        throw Error(ErrorKind::NotCoKernel, "ωΔφ ≠ φΔω: the inputs do not solve a common Schrödinger equation");
    ClosedOneForm form{-(omega * diff_y(phi) - phi * diff_y(omega)), omega * diff_x(phi) - phi * diff_x(omega)};
    return form;
}

BivariatePoly integrate_closed(const ClosedOneForm& form) {
    BivariatePoly f = antiderivative_x(form.dx);
    BivariatePoly rest = form.dy - diff_y(f);
    if (rest.max_x_degree() > 0)
        throw Error(ErrorKind::NotClosed, "dy-remainder depends on x: " + to_string(rest));
    f += antiderivative_y(rest);
    return f;
}

ClosedOneForm exterior_derivative(const BivariatePoly& f) { return {diff_x(f), diff_y(f)}; }

TransformFamily moutard_solution(const RationalFn& u, const BivariatePoly& omega, const BivariatePoly& phi) {
    if (omega.is_zero()) throw Error(ErrorKind::ZeroSeed, "seed omega is zero");
    if (!verify_solution(u, RationalFn(omega)))
        throw Error(ErrorKind::SeedNotInKernel, "(-Δ + u)ω ≠ 0 for ω = " + to_string(omega));
    return {omega, integrate_closed(solution_one_form(omega, phi))};
}

}  // namespace moutard
