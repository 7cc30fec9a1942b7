#include "moutard/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "moutard/error.hpp"

namespace moutard {
namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

BigInteger parse_integer(std::string_view s) {
    if (!is_integer_literal(s)) throw Error(ErrorKind::ParseError, "not an integer: '" + std::string(s) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return BigInteger(std::string(s), 10);
}

BigInteger pow10(unsigned long k) {
    BigInteger r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
    return r;
}

}  // namespace

BigRational make_rational(long num, long den) {
    if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

BigRational parse_rational(std::string_view num, std::string_view den) {
    BigInteger n = parse_integer(num);
    BigInteger d = parse_integer(den);
    if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator");
    BigRational q(n, d);
    q.canonicalize();
    return q;
}

BigRational parse_rational(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos)
        return parse_rational(text.substr(0, slash), text.substr(slash + 1));
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        bool negative = !whole.empty() && whole.front() == '-';
        if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
        if (frac.empty() && whole.empty()) throw Error(ErrorKind::ParseError, "bad decimal '" + std::string(text) + "'");
        if (!frac.empty() && !is_integer_literal(frac)) throw Error(ErrorKind::ParseError, "bad decimal '" + std::string(text) + "'");
        if (!whole.empty() && !is_integer_literal(whole)) throw Error(ErrorKind::ParseError, "bad decimal '" + std::string(text) + "'");
        std::string digits = std::string(whole) + std::string(frac);
        BigRational q(BigInteger(digits.empty() ? "0" : digits, 10), pow10(frac.size()));
        q.canonicalize();
        return negative ? BigRational(-q) : q;
    }
    return BigRational(parse_integer(text));
}

BigRational abs(const BigRational& q) { return q < 0 ? BigRational(-q) : q; }

std::string to_decimal(const BigRational& q, int digits) {
    if (q == 0) return "0";
    if (digits < 1) digits = 1;
    BigRational a = abs(q);
    const BigInteger lo = pow10(digits - 1);
    const BigInteger hi = pow10(digits);

    long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
    BigInteger mant;
    BigRational scaled;
    for (;;) {
        long k = digits - 1 - e;
        scaled = a;
        if (k >= 0)
            scaled *= BigRational(pow10(k));
        else
            scaled /= BigRational(pow10(-k));
        mant = scaled.get_num() / scaled.get_den();
        if (mant < lo) { --e; continue; }
        if (mant >= hi) { ++e; continue; }
        break;
    }
    BigRational frac = scaled - BigRational(mant);
    int cmp = ::cmp(frac, BigRational(1, 2));
    if (cmp > 0 || (cmp == 0 && mpz_odd_p(mant.get_mpz_t()))) mant += 1;
    if (mant == hi) {
        mant /= 10;
        ++e;
    }

    std::string s = mant.get_str();
    std::string out = q < 0 ? "-" : "";
    if (e >= -5 && e < digits) {
        std::string int_part, frac_part;
        if (e >= 0) {
            int_part = s.substr(0, e + 1);
            frac_part = s.substr(e + 1);
        } else {
            int_part = "0";
            frac_part = std::string(-e - 1, '0') + s;
        }
        while (!frac_part.empty() && frac_part.back() == '0') frac_part.pop_back();
        out += int_part;
        if (!frac_part.empty()) out += "." + frac_part;
    } else {
        std::string rest = s.substr(1);
        while (!rest.empty() && rest.back() == '0') rest.pop_back();
        out += s.substr(0, 1);
        if (!rest.empty()) out += "." + rest;
        out += e < 0 ? "e-" : "e+";
        std::string ex = std::to_string(std::labs(e));
        if (ex.size() < 2) ex = "0" + ex;
        out += ex;
    }
    return out;
}

double to_double(const BigRational& q) { return q.get_d(); }

std::string to_string(const BigRational& q) { return q.get_str(); }

}  // namespace moutard
