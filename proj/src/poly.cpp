#include "moutard/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "moutard/error.hpp"

namespace moutard {

std::strong_ordering grlex_compare(Exponent a, Exponent b) noexcept {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.i <=> b.i;
}

namespace {

bool canonical_before(const Term& a, const Term& b) { return grlex_compare(a.exp, b.exp) > 0; }

BigInteger lcm_of_denominators(const BivariatePoly& p) {
    BigInteger l = 1;
    for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
    return l;
}

// Dense row-major grid of (max_x + 1) x (max_y + 1) cells used as scratch for
// products and shifts.
template <class T>
struct Grid {
    unsigned nx, ny;
    std::vector<T> cells;
    Grid(unsigned nx_, unsigned ny_) : nx(nx_), ny(ny_), cells(std::size_t(nx_) * ny_) {}
    T& at(unsigned i, unsigned j) { return cells[std::size_t(i) * ny + j]; }
};

BivariatePoly collect(Grid<BigRational>& g) {
    std::vector<Term> terms;
    for (unsigned i = 0; i < g.nx; ++i)
        for (unsigned j = 0; j < g.ny; ++j)
            if (g.at(i, j) != 0) terms.push_back({{i, j}, std::move(g.at(i, j))});
    return BivariatePoly::from_terms(std::move(terms));
}

}  // namespace

BivariatePoly::BivariatePoly(const BigRational& constant) {
    if (constant != 0) terms_.push_back({{0, 0}, constant});
}

BivariatePoly BivariatePoly::x() { return monomial(1, 0); }
BivariatePoly BivariatePoly::y() { return monomial(0, 1); }

BivariatePoly BivariatePoly::monomial(unsigned i, unsigned j, const BigRational& coef) {
    BivariatePoly p;
    if (coef != 0) p.terms_.push_back({{i, j}, coef});
    return p;
}

BivariatePoly BivariatePoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), canonical_before);
    BivariatePoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().exp == t.exp)
            p.terms_.back().coef += t.coef;
        else
            p.terms_.push_back(std::move(t));
    }
    std::erase_if(p.terms_, [](const Term& t) { return t.coef == 0; });
    return p;
}

bool BivariatePoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().exp.degree() == 0);
}

std::optional<unsigned> BivariatePoly::degree() const noexcept {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().exp.degree();
}

unsigned BivariatePoly::max_x_degree() const noexcept {
    unsigned m = 0;
    for (const auto& t : terms_) m = std::max(m, t.exp.i);
    return m;
}

unsigned BivariatePoly::max_y_degree() const noexcept {
    unsigned m = 0;
    for (const auto& t : terms_) m = std::max(m, t.exp.j);
    return m;
}

bool BivariatePoly::is_homogeneous() const noexcept {
    return terms_.empty() || terms_.front().exp.degree() == terms_.back().exp.degree();
}

BigRational BivariatePoly::coefficient(unsigned i, unsigned j) const {
    Exponent e{i, j};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, Exponent key) { return grlex_compare(t.exp, key) > 0; });
    if (it != terms_.end() && it->exp == e) return it->coef;
    return 0;
}

const Term& BivariatePoly::leading_term() const {
    if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "leading term of zero polynomial");
    return terms_.front();
}

BivariatePoly BivariatePoly::operator-() const {
    BivariatePoly r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& rhs) {
    std::vector<Term> merged;
    merged.reserve(terms_.size() + rhs.terms_.size());
    auto a = terms_.begin();
    auto b = rhs.terms_.begin();
    while (a != terms_.end() || b != rhs.terms_.end()) {
        if (b == rhs.terms_.end() || (a != terms_.end() && canonical_before(*a, *b))) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || canonical_before(*b, *a)) {
            merged.push_back(*b++);
        } else {
            BigRational c = a->coef + b->coef;
            if (c != 0) merged.push_back({a->exp, std::move(c)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& rhs) { return *this += -rhs; }

BivariatePoly& BivariatePoly::operator*=(const BivariatePoly& rhs) { return *this = *this * rhs; }

BivariatePoly operator*(const BivariatePoly& lhs, const BivariatePoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    // Clear denominators and accumulate in integers; one division at the end.
    const BigInteger lp = lcm_of_denominators(lhs);
    const BigInteger lq = lcm_of_denominators(rhs);
    auto integral = [](const BivariatePoly& p, const BigInteger& l) {
        std::vector<std::pair<Exponent, BigInteger>> out;
        out.reserve(p.terms().size());
        for (const auto& t : p.terms()) out.emplace_back(t.exp, BigInteger(t.coef.get_num() * (l / t.coef.get_den())));
        return out;
    };
    auto a = integral(lhs, lp);
    auto b = integral(rhs, lq);
    Grid<BigInteger> acc(lhs.max_x_degree() + rhs.max_x_degree() + 1, lhs.max_y_degree() + rhs.max_y_degree() + 1);
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b)
            mpz_addmul(acc.at(ea.i + eb.i, ea.j + eb.j).get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    const BigInteger denom = lp * lq;
    std::vector<Term> terms;
    for (unsigned i = 0; i < acc.nx; ++i)
        for (unsigned j = 0; j < acc.ny; ++j)
            if (acc.at(i, j) != 0) {
                BigRational c(acc.at(i, j), denom);
                c.canonicalize();
                terms.push_back({{i, j}, std::move(c)});
            }
    return BivariatePoly::from_terms(std::move(terms));
}

bool operator==(const BivariatePoly& a, const BivariatePoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k)
        if (!(a.terms_[k].exp == b.terms_[k].exp) || a.terms_[k].coef != b.terms_[k].coef) return false;
    return true;
}

BivariatePoly add(const BivariatePoly& p, const BivariatePoly& q) { return p + q; }
BivariatePoly mul(const BivariatePoly& p, const BivariatePoly& q) { return p * q; }

BivariatePoly scale(const BivariatePoly& p, const BigRational& c) {
    if (c == 0) return {};
    std::vector<Term> terms = p.terms();
    for (auto& t : terms) t.coef *= c;
    return BivariatePoly::from_terms(std::move(terms));
}

BivariatePoly pow(const BivariatePoly& p, unsigned n) {
    BivariatePoly result(1);
    BivariatePoly base = p;
    while (n > 0) {
        if (n & 1u) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

BivariatePoly diff_x(const BivariatePoly& p) {
    std::vector<Term> terms;
    for (const auto& t : p.terms())
        if (t.exp.i > 0) terms.push_back({{t.exp.i - 1, t.exp.j}, t.coef * t.exp.i});
    return BivariatePoly::from_terms(std::move(terms));
}

BivariatePoly diff_y(const BivariatePoly& p) {
    std::vector<Term> terms;
    for (const auto& t : p.terms())
        if (t.exp.j > 0) terms.push_back({{t.exp.i, t.exp.j - 1}, t.coef * t.exp.j});
    return BivariatePoly::from_terms(std::move(terms));
}

BivariatePoly laplacian(const BivariatePoly& p) { return diff_x(diff_x(p)) + diff_y(diff_y(p)); }

BigRational evaluate(const BivariatePoly& p, const BigRational& x0, const BigRational& y0) {
    if (p.is_zero()) return 0;
    std::vector<BigRational> xp(p.max_x_degree() + 1), yp(p.max_y_degree() + 1);
    xp[0] = 1;
    yp[0] = 1;
    for (std::size_t k = 1; k < xp.size(); ++k) xp[k] = xp[k - 1] * x0;
    for (std::size_t k = 1; k < yp.size(); ++k) yp[k] = yp[k - 1] * y0;
    BigRational sum = 0;
    for (const auto& t : p.terms()) sum += t.coef * xp[t.exp.i] * yp[t.exp.j];
    return sum;
}

double evaluate_double(const BivariatePoly& p, double x0, double y0) {
    if (p.is_zero()) return 0.0;
    std::vector<double> xp(p.max_x_degree() + 1, 1.0), yp(p.max_y_degree() + 1, 1.0);
    for (std::size_t k = 1; k < xp.size(); ++k) xp[k] = xp[k - 1] * x0;
    for (std::size_t k = 1; k < yp.size(); ++k) yp[k] = yp[k - 1] * y0;
    double sum = 0.0;
    for (const auto& t : p.terms()) sum += t.coef.get_d() * xp[t.exp.i] * yp[t.exp.j];
    return sum;
}

BivariatePoly leading_form(const BivariatePoly& p) {
    if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "leading form of the zero polynomial");
    return homogeneous_part(p, *p.degree());
}

BivariatePoly homogeneous_part(const BivariatePoly& p, unsigned degree) {
    std::vector<Term> terms;
    for (const auto& t : p.terms())
        if (t.exp.degree() == degree) terms.push_back(t);
    return BivariatePoly::from_terms(std::move(terms));
}

BivariatePoly shift(const BivariatePoly& p, const BigRational& dx, const BigRational& dy) {
    if (p.is_zero()) return {};
    const unsigned nx = p.max_x_degree() + 1, ny = p.max_y_degree() + 1;
    const unsigned n = std::max(nx, ny);
    std::vector<std::vector<BigInteger>> binom(n, std::vector<BigInteger>(n));
    for (unsigned a = 0; a < n; ++a) {
        binom[a][0] = 1;
        for (unsigned b = 1; b <= a; ++b) binom[a][b] = binom[a - 1][b - 1] + (b < a ? binom[a - 1][b] : BigInteger(0));
    }
    std::vector<BigRational> xp(nx), yp(ny);
    xp[0] = 1;
    yp[0] = 1;
    for (unsigned k = 1; k < nx; ++k) xp[k] = xp[k - 1] * dx;
    for (unsigned k = 1; k < ny; ++k) yp[k] = yp[k - 1] * dy;
    Grid<BigRational> out(nx, ny);
    for (const auto& t : p.terms()) {
        for (unsigned k = 0; k <= t.exp.i; ++k) {
            BigRational cx = t.coef * binom[t.exp.i][k] * xp[t.exp.i - k];
            if (cx == 0) continue;
            for (unsigned l = 0; l <= t.exp.j; ++l) out.at(k, l) += cx * binom[t.exp.j][l] * yp[t.exp.j - l];
        }
    }
    return collect(out);
}

std::optional<BivariatePoly> divide_exact(const BivariatePoly& p, const BivariatePoly& divisor) {
    if (divisor.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
    if (p.is_zero()) return BivariatePoly{};
    if (*p.degree() < *divisor.degree()) return std::nullopt;
    const Term& lead = divisor.leading_term();
    std::vector<Term> quotient;
    BivariatePoly rem = p;
    while (!rem.is_zero()) {
        const Term& lt = rem.leading_term();
        if (lt.exp.i < lead.exp.i || lt.exp.j < lead.exp.j) return std::nullopt;
        BivariatePoly m = BivariatePoly::monomial(lt.exp.i - lead.exp.i, lt.exp.j - lead.exp.j, lt.coef / lead.coef);
        quotient.push_back(m.terms().front());
        rem -= m * divisor;
    }
    return BivariatePoly::from_terms(std::move(quotient));
}

BigRational coefficient_norm1(const BivariatePoly& p) {
    BigRational s = 0;
    for (const auto& t : p.terms()) s += abs(t.coef);
    return s;
}

std::string to_string(const BivariatePoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.terms()) {
        BigRational c = t.coef;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        c = abs(c);
        bool has_var = t.exp.degree() > 0;
        bool need_star = false;
        if (!has_var || c != 1) {
            os << c.get_str();
            need_star = true;
        }
        auto var = [&](char name, unsigned e) {
            if (e == 0) return;
            if (need_star) os << "*";
            os << name;
            if (e > 1) os << "^" << e;
            need_star = true;
        };
        var('x', t.exp.i);
        var('y', t.exp.j);
        first = false;
    }
    return os.str();
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : s_(text) {}

    BivariatePoly parse() {
        BivariatePoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool starts_primary(char c) const {
        return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'x' || c == 'y' || c == '(';
    }

    BivariatePoly expr() {
        BivariatePoly acc = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc += term();
            } else if (c == '-') {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    BivariatePoly term() {
        BivariatePoly acc = unary();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * unary();
            } else if (c == '/') {
                ++pos_;
                std::size_t at = pos_;
                BivariatePoly d = unary();
                if (!d.is_constant() || d.is_zero()) {
                    pos_ = at;
                    fail("division by a non-constant or zero expression");
                }
                acc = scale(acc, BigRational(1) / d.coefficient(0, 0));
            } else if (starts_primary(c)) {
                acc = acc * power();
            } else {
                return acc;
            }
        }
    }

    BivariatePoly unary() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -unary();
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    BivariatePoly power() {
        BivariatePoly base = primary();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a nonnegative integer exponent");
            unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
            if (e > 1000) fail("exponent too large");
            return pow(base, static_cast<unsigned>(e));
        }
        return base;
    }

    BivariatePoly primary() {
        char c = peek();
        if (c == 'x') {
            ++pos_;
            return BivariatePoly::x();
        }
        if (c == 'y') {
            ++pos_;
            return BivariatePoly::y();
        }
        if (c == '(') {
            ++pos_;
            BivariatePoly inner = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
            return BivariatePoly(parse_rational(s_.substr(start, pos_ - start)));
        }
        if (c == '\0') fail("unexpected end of input");
        fail("unexpected character");
    }
};

}  // namespace

BivariatePoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace moutard
