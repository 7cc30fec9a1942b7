#include "moutard/univariate.hpp"

#include <sstream>

#include "moutard/error.hpp"

namespace moutard {

Poly1D::Poly1D(const BigRational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

Poly1D Poly1D::x() { return monomial(1); }

Poly1D Poly1D::monomial(unsigned n, const BigRational& coef) {
    Poly1D p;
    if (coef == 0) return p;
    p.coeffs_.assign(n + 1, BigRational(0));
    p.coeffs_[n] = coef;
    return p;
}

Poly1D Poly1D::from_coefficients(std::vector<BigRational> ascending) {
    Poly1D p;
    p.coeffs_ = std::move(ascending);
    p.trim();
    return p;
}

void Poly1D::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<unsigned> Poly1D::degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<unsigned>(coeffs_.size() - 1);
}

BigRational Poly1D::coefficient(unsigned n) const { return n < coeffs_.size() ? coeffs_[n] : BigRational(0); }

const BigRational& Poly1D::leading() const {
    if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "leading coefficient of zero polynomial");
    return coeffs_.back();
}

Poly1D Poly1D::operator-() const {
    Poly1D r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly1D operator+(const Poly1D& a, const Poly1D& b) {
    std::vector<BigRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) + b.coefficient(k);
    return Poly1D::from_coefficients(std::move(c));
}

Poly1D operator-(const Poly1D& a, const Poly1D& b) { return a + (-b); }

Poly1D operator*(const Poly1D& a, const Poly1D& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly1D::from_coefficients(std::move(c));
}

Poly1D derivative(const Poly1D& p) {
    const auto& c = p.coefficients();
    if (c.size() <= 1) return {};
    std::vector<BigRational> d(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * static_cast<unsigned long>(k);
    return Poly1D::from_coefficients(std::move(d));
}

Poly1D scale(const Poly1D& p, const BigRational& c) {
    std::vector<BigRational> out = p.coefficients();
    for (auto& v : out) v *= c;
    return Poly1D::from_coefficients(std::move(out));
}

Poly1D pow(const Poly1D& p, unsigned n) {
    Poly1D r(1);
    for (unsigned k = 0; k < n; ++k) r = r * p;
    return r;
}

BigRational evaluate(const Poly1D& p, const BigRational& x0) {
    BigRational acc = 0;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x0 + *it;
    return acc;
}

std::pair<Poly1D, Poly1D> divmod(const Poly1D& a, const Poly1D& b) {
    if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero polynomial");
    Poly1D q, r = a;
    const unsigned db = *b.degree();
    while (!r.is_zero() && *r.degree() >= db) {
        Poly1D t = Poly1D::monomial(*r.degree() - db, r.leading() / b.leading());
        q = q + t;
        r = r - t * b;
    }
    return {q, r};
}

std::vector<Poly1D> sturm_sequence(const Poly1D& p) {
    std::vector<Poly1D> seq;
    if (p.is_zero()) return seq;
    seq.push_back(p);
    Poly1D d = derivative(p);
    if (d.is_zero()) return seq;
    seq.push_back(d);
    for (;;) {
        Poly1D r = -divmod(seq[seq.size() - 2], seq.back()).second;
        if (r.is_zero()) break;
        // Positive rescaling keeps signs and tames coefficient growth.
        BigRational lc = abs(r.leading());
        seq.push_back(scale(r, BigRational(1) / lc));
    }
    return seq;
}

namespace {

int sign_of(const BigRational& v) { return sgn(v); }

unsigned sign_changes(const std::vector<int>& signs) {
    unsigned changes = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

unsigned changes_at(const std::vector<Poly1D>& seq, const BigRational& x0) {
    std::vector<int> signs;
    for (const auto& q : seq) signs.push_back(sign_of(evaluate(q, x0)));
    return sign_changes(signs);
}

}  // namespace

unsigned count_real_roots(const Poly1D& p) {
    if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "root count of zero polynomial");
    auto seq = sturm_sequence(p);
    std::vector<int> minus_inf, plus_inf;
    for (const auto& q : seq) {
        int lead = sign_of(q.leading());
        plus_inf.push_back(lead);
        minus_inf.push_back((*q.degree() % 2 == 0) ? lead : -lead);
    }
    return sign_changes(minus_inf) - sign_changes(plus_inf);
}

unsigned count_roots_in(const Poly1D& p, const BigRational& a, const BigRational& b) {
    if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "root count of zero polynomial");
    auto seq = sturm_sequence(p);
    return changes_at(seq, a) - changes_at(seq, b);
}

std::string to_string(const Poly1D& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const auto& c = p.coefficients();
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        BigRational v = c[k];
        if (first)
            os << (v < 0 ? "-" : "");
        else
            os << (v < 0 ? " - " : " + ");
        v = abs(v);
        if (k == 0 || v != 1) os << v.get_str() << (k > 0 ? "*" : "");
        if (k > 0) os << "x" << (k > 1 ? "^" + std::to_string(k) : "");
        first = false;
    }
    return os.str();
}

RationalFn1D::RationalFn1D(Poly1D n, Poly1D d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw Error(ErrorKind::InvalidArgument, "rational function with zero denominator");
}

Poly1D gcd(const Poly1D& a, const Poly1D& b) {
    Poly1D x = a, y = b;
    while (!y.is_zero()) {
        Poly1D r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return scale(x, BigRational(1) / x.leading());
}

RationalFn1D rf_reduce(const RationalFn1D& f) {
    if (f.num.is_zero()) return {Poly1D(), Poly1D(1)};
    Poly1D g = gcd(f.num, f.den);
    Poly1D n = divmod(f.num, g).first;
    Poly1D d = divmod(f.den, g).first;
    BigRational lc = d.leading();
    return {scale(n, BigRational(1) / lc), scale(d, BigRational(1) / lc)};
}

bool rf_equal(const RationalFn1D& a, const RationalFn1D& b) { return a.num * b.den == b.num * a.den; }

RationalFn1D rf_add(const RationalFn1D& a, const RationalFn1D& b) {
    if (a.den == b.den) return {a.num + b.num, a.den};
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}

RationalFn1D rf_sub(const RationalFn1D& a, const RationalFn1D& b) { return rf_add(a, {-b.num, b.den}); }

RationalFn1D rf_mul(const RationalFn1D& a, const RationalFn1D& b) { return {a.num * b.num, a.den * b.den}; }

RationalFn1D rf_scale(const RationalFn1D& a, const BigRational& c) { return {scale(a.num, c), a.den}; }

RationalFn1D rf_derivative(const RationalFn1D& f) {
    return {derivative(f.num) * f.den - f.num * derivative(f.den), f.den * f.den};
}

BigRational rf_evaluate(const RationalFn1D& f, const BigRational& x0) {
    BigRational d = evaluate(f.den, x0);
    if (d == 0) throw Error(ErrorKind::PoleTooClose, "denominator vanishes at " + x0.get_str());
    return evaluate(f.num, x0) / d;
}

std::string to_string(const RationalFn1D& f) { return "(" + to_string(f.num) + ") / (" + to_string(f.den) + ")"; }

}  // namespace moutard
