#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "moutard/rational.hpp"

namespace moutard {

/// Exponent pair of the monomial x^i y^j.
struct Exponent {
    unsigned i = 0;
    unsigned j = 0;

    unsigned degree() const noexcept { return i + j; }
    bool operator==(const Exponent&) const = default;
};

/// Graded-lex order with x > y; "greater" sorts first in canonical form.
std::strong_ordering grlex_compare(Exponent a, Exponent b) noexcept;

struct Term {
    Exponent exp;
    BigRational coef;
};

/// Exact polynomial in x, y over the rationals.
///
/// Terms are stored sparse, without zero coefficients, in descending graded
/// lexicographic order, so two equal polynomials have identical term vectors.
/// The zero polynomial has no degree (`degree()` returns nullopt).
class BivariatePoly {
public:
    BivariatePoly() = default;
    BivariatePoly(const BigRational& constant);
    BivariatePoly(long constant) : BivariatePoly(BigRational(constant)) {}

    static BivariatePoly x();
    static BivariatePoly y();
    static BivariatePoly monomial(unsigned i, unsigned j, const BigRational& coef = 1);
    /// Sums duplicate exponents and drops zeros.
    static BivariatePoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    std::optional<unsigned> degree() const noexcept;
    unsigned max_x_degree() const noexcept;
    unsigned max_y_degree() const noexcept;
    bool is_homogeneous() const noexcept;
    BigRational coefficient(unsigned i, unsigned j) const;
    /// Coefficient of the grlex-leading term; requires nonzero.
    const Term& leading_term() const;

    BivariatePoly operator-() const;
    BivariatePoly& operator+=(const BivariatePoly& rhs);
    BivariatePoly& operator-=(const BivariatePoly& rhs);
    BivariatePoly& operator*=(const BivariatePoly& rhs);

    friend BivariatePoly operator+(BivariatePoly lhs, const BivariatePoly& rhs) { return lhs += rhs; }
    friend BivariatePoly operator-(BivariatePoly lhs, const BivariatePoly& rhs) { return lhs -= rhs; }
    friend BivariatePoly operator*(const BivariatePoly& lhs, const BivariatePoly& rhs);
    friend bool operator==(const BivariatePoly& a, const BivariatePoly& b);

private:
    std::vector<Term> terms_;
};

BivariatePoly add(const BivariatePoly& p, const BivariatePoly& q);
BivariatePoly mul(const BivariatePoly& p, const BivariatePoly& q);
BivariatePoly scale(const BivariatePoly& p, const BigRational& c);
BivariatePoly pow(const BivariatePoly& p, unsigned n);

BivariatePoly diff_x(const BivariatePoly& p);
BivariatePoly diff_y(const BivariatePoly& p);
BivariatePoly laplacian(const BivariatePoly& p);

BigRational evaluate(const BivariatePoly& p, const BigRational& x0, const BigRational& y0);
double evaluate_double(const BivariatePoly& p, double x0, double y0);

/// Homogeneous part of top degree; throws InvalidArgument on zero.
BivariatePoly leading_form(const BivariatePoly& p);
/// Homogeneous component of exactly the given degree (possibly zero).
BivariatePoly homogeneous_part(const BivariatePoly& p, unsigned degree);

/// p(x + dx, y + dy).
BivariatePoly shift(const BivariatePoly& p, const BigRational& dx, const BigRational& dy);

/// Quotient q with p = q * divisor, or nullopt when divisor does not divide p.
std::optional<BivariatePoly> divide_exact(const BivariatePoly& p, const BivariatePoly& divisor);

/// Sum of absolute values of all coefficients.
BigRational coefficient_norm1(const BivariatePoly& p);

/// Human-readable form, e.g. "17*x^4 + 34*x^2*y^2 - 1/2*y".
std::string to_string(const BivariatePoly& p);

/// Parses arithmetic over x, y and rational literals: + - * / ^ and parens.
/// Division is only allowed by nonzero constants. Throws ParseError with the
/// offending character offset.
BivariatePoly parse_poly(std::string_view text);

}  // namespace moutard
