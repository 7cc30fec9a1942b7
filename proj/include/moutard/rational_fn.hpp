#pragma once

#include "moutard/poly.hpp"

namespace moutard {

/// num/den with den != 0. Never reduced to lowest terms; compare with
/// rf_equal (cross-multiplication), not with ==.
struct RationalFn {
    BivariatePoly num;
    BivariatePoly den{1};

    RationalFn() = default;
    RationalFn(BivariatePoly n) : num(std::move(n)) {}
    RationalFn(BivariatePoly n, BivariatePoly d);
};

bool rf_equal(const RationalFn& a, const RationalFn& b);

/// Sum over a common denominator. When one denominator divides the other the
/// larger one is reused instead of forming the product.
RationalFn rf_add(const RationalFn& a, const RationalFn& b);
RationalFn rf_sub(const RationalFn& a, const RationalFn& b);
RationalFn rf_mul(const RationalFn& a, const RationalFn& b);
RationalFn rf_neg(const RationalFn& a);
RationalFn rf_scale(const RationalFn& a, const BigRational& c);
RationalFn rf_reciprocal(const RationalFn& a);

RationalFn rf_diff_x(const RationalFn& f);
RationalFn rf_diff_y(const RationalFn& f);

/// Quotient rule in closed form: for f = N/D,
/// Δf = (D²ΔN − 2D ∇N·∇D − N D ΔD + 2N|∇D|²) / D³.
RationalFn rf_laplacian(const RationalFn& f);

/// Divides numerator and denominator by a factor known to divide both;
/// throws InvalidArgument if it does not.
RationalFn rf_cancel(const RationalFn& f, const BivariatePoly& factor);

/// Exact value; throws PoleTooClose when the denominator vanishes.
BigRational rf_evaluate(const RationalFn& f, const BigRational& x0, const BigRational& y0);

std::string to_string(const RationalFn& f);

}  // namespace moutard
