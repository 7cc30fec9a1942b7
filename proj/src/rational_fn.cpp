#include "moutard/rational_fn.hpp"

#include "moutard/error.hpp"

namespace moutard {

RationalFn::RationalFn(BivariatePoly n, BivariatePoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw Error(ErrorKind::InvalidArgument, "rational function with zero denominator");
}

bool rf_equal(const RationalFn& a, const RationalFn& b) {
    if (a.den == b.den) return a.num == b.num;
    return a.num * b.den == b.num * a.den;
}

RationalFn rf_add(const RationalFn& a, const RationalFn& b) {
    if (a.num.is_zero()) return b;
    if (b.num.is_zero()) return a;
    if (a.den == b.den) return {a.num + b.num, a.den};
    if (*a.den.degree() >= *b.den.degree()) {
        if (auto q = divide_exact(a.den, b.den)) return {a.num + b.num * *q, a.den};
    } else if (auto q = divide_exact(b.den, a.den)) {
        return {a.num * *q + b.num, b.den};
    }
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}

RationalFn rf_neg(const RationalFn& a) { return {-a.num, a.den}; }

RationalFn rf_sub(const RationalFn& a, const RationalFn& b) { return rf_add(a, rf_neg(b)); }

RationalFn rf_mul(const RationalFn& a, const RationalFn& b) { return {a.num * b.num, a.den * b.den}; }

RationalFn rf_scale(const RationalFn& a, const BigRational& c) { return {scale(a.num, c), a.den}; }

RationalFn rf_reciprocal(const RationalFn& a) {
    if (a.num.is_zero()) throw Error(ErrorKind::InvalidArgument, "reciprocal of the zero function");
    return {a.den, a.num};
}

RationalFn rf_diff_x(const RationalFn& f) {
    if (f.den.is_constant()) return {diff_x(f.num), f.den};
    return {diff_x(f.num) * f.den - f.num * diff_x(f.den), f.den * f.den};
}

RationalFn rf_diff_y(const RationalFn& f) {
    if (f.den.is_constant()) return {diff_y(f.num), f.den};
    return {diff_y(f.num) * f.den - f.num * diff_y(f.den), f.den * f.den};
}

RationalFn rf_laplacian(const RationalFn& f) {
    const auto& n = f.num;
    const auto& d = f.den;
    if (d.is_constant()) return {laplacian(n), d};
    const BivariatePoly nx = diff_x(n), ny = diff_y(n), dx = diff_x(d), dy = diff_y(d);
    BivariatePoly top = d * d * laplacian(n) - scale(d * (nx * dx + ny * dy), 2) - n * d * laplacian(d) +
                        scale(n * (dx * dx + dy * dy), 2);
    return {std::move(top), d * d * d};
}

RationalFn rf_cancel(const RationalFn& f, const BivariatePoly& factor) {
    auto n = divide_exact(f.num, factor);
    auto d = divide_exact(f.den, factor);
    if (!n || !d) throw Error(ErrorKind::InvalidArgument, "factor does not divide both numerator and denominator");
    return {std::move(*n), std::move(*d)};
}

BigRational rf_evaluate(const RationalFn& f, const BigRational& x0, const BigRational& y0) {
    BigRational d = evaluate(f.den, x0, y0);
    if (d == 0) throw Error(ErrorKind::PoleTooClose, "denominator vanishes at (" + x0.get_str() + ", " + y0.get_str() + ")");
    return evaluate(f.num, x0, y0) / d;
}

std::string to_string(const RationalFn& f) { return "(" + to_string(f.num) + ") / (" + to_string(f.den) + ")"; }

}  // namespace moutard
