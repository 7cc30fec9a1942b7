#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "moutard/rational.hpp"

namespace moutard {

/// Univariate polynomial over the rationals, dense ascending coefficients with
/// no trailing zeros (the zero polynomial is the empty vector).
class Poly1D {
public:
    Poly1D() = default;
    Poly1D(const BigRational& constant);
    Poly1D(long constant) : Poly1D(BigRational(constant)) {}

    static Poly1D x();
    static Poly1D monomial(unsigned n, const BigRational& coef = 1);
    static Poly1D from_coefficients(std::vector<BigRational> ascending);

    const std::vector<BigRational>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::optional<unsigned> degree() const noexcept;
    BigRational coefficient(unsigned n) const;
    const BigRational& leading() const;

    Poly1D operator-() const;
    friend Poly1D operator+(const Poly1D& a, const Poly1D& b);
    friend Poly1D operator-(const Poly1D& a, const Poly1D& b);
    friend Poly1D operator*(const Poly1D& a, const Poly1D& b);
    friend bool operator==(const Poly1D&, const Poly1D&) = default;

private:
    void trim();
    std::vector<BigRational> coeffs_;
};

Poly1D derivative(const Poly1D& p);
Poly1D scale(const Poly1D& p, const BigRational& c);
Poly1D pow(const Poly1D& p, unsigned n);
BigRational evaluate(const Poly1D& p, const BigRational& x0);

/// Euclidean division a = q*b + r with deg r < deg b.
std::pair<Poly1D, Poly1D> divmod(const Poly1D& a, const Poly1D& b);

/// Canonical Sturm chain p, p', -rem(p, p'), ...
std::vector<Poly1D> sturm_sequence(const Poly1D& p);

/// Number of distinct real roots of a nonzero p.
unsigned count_real_roots(const Poly1D& p);

/// Distinct real roots in the half-open interval (a, b].
unsigned count_roots_in(const Poly1D& p, const BigRational& a, const BigRational& b);

std::string to_string(const Poly1D& p);

struct RationalFn1D {
    Poly1D num;
    Poly1D den{1};

    RationalFn1D() = default;
    RationalFn1D(Poly1D n) : num(std::move(n)) {}
    RationalFn1D(Poly1D n, Poly1D d);
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly1D gcd(const Poly1D& a, const Poly1D& b);

bool rf_equal(const RationalFn1D& a, const RationalFn1D& b);
/// Lowest terms with a monic denominator.
RationalFn1D rf_reduce(const RationalFn1D& f);
RationalFn1D rf_add(const RationalFn1D& a, const RationalFn1D& b);
RationalFn1D rf_sub(const RationalFn1D& a, const RationalFn1D& b);
RationalFn1D rf_mul(const RationalFn1D& a, const RationalFn1D& b);
RationalFn1D rf_scale(const RationalFn1D& a, const BigRational& c);
RationalFn1D rf_derivative(const RationalFn1D& f);
BigRational rf_evaluate(const RationalFn1D& f, const BigRational& x0);
std::string to_string(const RationalFn1D& f);

}  // namespace moutard
