#include "moutard/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "moutard/error.hpp"
#include "moutard/univariate.hpp"

namespace moutard {

std::string_view to_string(PositivityStatus status) noexcept {
    switch (status) {
        case PositivityStatus::Certified: return "certified";
        case PositivityStatus::Refuted: return "refuted";
        case PositivityStatus::Inconclusive: return "inconclusive";
        case PositivityStatus::NonPositiveLeadingForm: return "non_positive_leading_form";
    }
    return "unknown";
}

namespace {

// q(t) = form(1, t) for a homogeneous form of degree d.
Poly1D dehomogenize(const BivariatePoly& form, unsigned d) {
    std::vector<BigRational> c(d + 1);
    for (const auto& t : form.terms()) c[t.exp.j] = t.coef;
    return Poly1D::from_coefficients(std::move(c));
}

// form >= m on the unit circle, decided through
// h(t) = q(t) − m (1 + t²)^(d/2) having no real roots (or vanishing).
bool bounded_below_by(const Poly1D& q, unsigned d, const BigRational& m) {
    Poly1D circle = pow(Poly1D::from_coefficients({1, 0, 1}), d / 2);
    Poly1D h = q - scale(circle, m);
    if (h.is_zero()) return true;
    if (*h.degree() % 2 != 0 || h.leading() <= 0) return false;
    return count_real_roots(h) == 0;
}

BigRational power_of_two_at_least(const BigRational& v) {
    BigRational r = 1;
    while (r < v) r *= 2;
    return r;
}

BigRational area(const Box& b) { return (b.x_hi - b.x_lo) * (b.y_hi - b.y_lo); }

bool canonical_box_order(const CertifiedCell& a, const CertifiedCell& b) {
    if (a.box.x_lo != b.box.x_lo) return a.box.x_lo < b.box.x_lo;
    if (a.box.y_lo != b.box.y_lo) return a.box.y_lo < b.box.y_lo;
    return a.box.x_hi < b.box.x_hi;
}

std::optional<BivariatePoly> definite_orientation(const BivariatePoly& p) {
    if (p.is_zero()) return std::nullopt;
    const unsigned d = *p.degree();
    if (d % 2 != 0) return std::nullopt;
    BivariatePoly lead = leading_form(p);
    if (leading_form_positive(lead)) return p;
    if (leading_form_positive(-lead)) return -p;
    return std::nullopt;
}


// Taylor shift of a[0..n] in place: a(X) -> a(X + s).
void taylor_shift(std::vector<BigInteger*>& a, const BigInteger& s) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j > i; --j) mpz_addmul(a[j - 1]->get_mpz_t(), s.get_mpz_t(), a[j]->get_mpz_t());
}

struct BoxBound {
    BigRational centre_value;
    BigRational lower_bound;
};

// Same bound as box_lower_bound, computed in integers for square boxes whose
// centre is an integer multiple of the half-width (every quadtree cell).
// Falls back to the rational route otherwise.
BoxBound fast_box_bound(const BivariatePoly& p, const Box& box) {
    const BigRational cx = (box.x_lo + box.x_hi) / 2, cy = (box.y_lo + box.y_hi) / 2;
    const BigRational h = (box.x_hi - box.x_lo) / 2;
    const BigRational sx = cx / h, sy = cy / h;
    if (h != (box.y_hi - box.y_lo) / 2 || sx.get_den() != 1 || sy.get_den() != 1)
        return {evaluate(p, cx, cy), box_lower_bound(p, box)};

    // G(X, Y) = p(h X, h Y) scaled to integer coefficients by a positive factor.
    const unsigned nx = p.max_x_degree() + 1, ny = p.max_y_degree() + 1;
    std::vector<BigRational> hp(nx + ny);
    hp[0] = 1;
    for (std::size_t k = 1; k < hp.size(); ++k) hp[k] = hp[k - 1] * h;
    BigInteger scale = 1;
    std::vector<BigRational> scaled;
    scaled.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        scaled.push_back(t.coef * hp[t.exp.degree()]);
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), scaled.back().get_den_mpz_t());
    }
    std::vector<BigInteger> g(std::size_t(nx) * ny);
    auto at = [&](unsigned i, unsigned j) -> BigInteger& { return g[std::size_t(i) * ny + j]; };
    for (std::size_t k = 0; k < scaled.size(); ++k) {
        const auto& e = p.terms()[k].exp;
        at(e.i, e.j) = scaled[k].get_num() * (scale / scaled[k].get_den());
    }
    const BigInteger ix = sx.get_num(), iy = sy.get_num();
    std::vector<BigInteger*> line;
    for (unsigned j = 0; j < ny; ++j) {
        line.clear();
        for (unsigned i = 0; i < nx; ++i) line.push_back(&at(i, j));
        taylor_shift(line, ix);
    }
    for (unsigned i = 0; i < nx; ++i) {
        line.clear();
        for (unsigned j = 0; j < ny; ++j) line.push_back(&at(i, j));
        taylor_shift(line, iy);
    }
    BigInteger lb = at(0, 0);
    for (unsigned i = 0; i < nx; ++i)
        for (unsigned j = 0; j < ny; ++j) {
            if (i + j == 0) continue;
            const BigInteger& c = at(i, j);
            if (i % 2 == 0 && j % 2 == 0 && sgn(c) > 0) continue;
            if (sgn(c) < 0)
                lb += c;
            else
                lb -= c;
        }
    BoxBound out{BigRational(at(0, 0), scale), BigRational(lb, scale)};
    out.centre_value.canonicalize();
    out.lower_bound.canonicalize();
    return out;
}

}  // namespace

std::optional<BigRational> leading_form_positive(const BivariatePoly& form) {
    if (form.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero form");
    if (!form.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, to_string(form));
    const unsigned d = *form.degree();
    if (d % 2 != 0) throw Error(ErrorKind::OddDegree, "degree " + std::to_string(d) + " form cannot be one-signed");
    if (d == 0) {
        BigRational c = form.coefficient(0, 0);
        return c > 0 ? std::optional(c) : std::nullopt;
    }
    const BigRational at_x = form.coefficient(d, 0);  // form(1, 0)
    const BigRational at_y = form.coefficient(0, d);  // form(0, 1)
    if (at_x <= 0 || at_y <= 0) return std::nullopt;
    Poly1D q = dehomogenize(form, d);
    if (count_real_roots(q) != 0) return std::nullopt;

    BigRational hi = std::min(at_x, at_y);
    if (bounded_below_by(q, d, hi)) return hi;
    BigRational lo = hi / 2;
    for (int k = 0; !bounded_below_by(q, d, lo); ++k) {
        if (k > 400) return std::nullopt;
        hi = lo;
        lo /= 2;
    }
    for (int k = 0; k < 16; ++k) {
        BigRational mid = (lo + hi) / 2;
        if (bounded_below_by(q, d, mid))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

BigRational box_lower_bound(const BivariatePoly& p, const Box& box) {
    const BigRational cx = (box.x_lo + box.x_hi) / 2, cy = (box.y_lo + box.y_hi) / 2;
    const BigRational hx = (box.x_hi - box.x_lo) / 2, hy = (box.y_hi - box.y_lo) / 2;
    BivariatePoly s = shift(p, cx, cy);
    std::vector<BigRational> xp(s.max_x_degree() + 1), yp(s.max_y_degree() + 1);
    xp[0] = 1;
    yp[0] = 1;
    for (std::size_t k = 1; k < xp.size(); ++k) xp[k] = xp[k - 1] * hx;
    for (std::size_t k = 1; k < yp.size(); ++k) yp[k] = yp[k - 1] * hy;
    BigRational lb = 0;
    for (const auto& t : s.terms()) {
        if (t.exp.degree() == 0) {
            lb += t.coef;
            continue;
        }
        // Even-even monomials with positive coefficient are >= 0 on the box.
        if (t.exp.i % 2 == 0 && t.exp.j % 2 == 0 && t.coef > 0) continue;
        lb -= abs(t.coef) * xp[t.exp.i] * yp[t.exp.j];
    }
    return lb;
}

PositivityOutcome global_positivity(const BivariatePoly& w, const PositivityOptions& options) {
    if (w.is_zero()) throw Error(ErrorKind::InvalidArgument, "positivity of the zero polynomial");
    PositivityOutcome out;
    const unsigned d = *w.degree();
    if (d == 0) {
        BigRational c = w.coefficient(0, 0);
        if (c > 0) {
            out.status = PositivityStatus::Certified;
            out.certificate = PositivityCertificate{c, 0, {}, 0};
        } else {
            out.status = PositivityStatus::Refuted;
            out.refutation = RationalPoint{0, 0};
        }
        return out;
    }
    if (d % 2 != 0) {
        out.status = PositivityStatus::NonPositiveLeadingForm;
        out.detail = "odd degree " + std::to_string(d);
        return out;
    }
    BivariatePoly lead = leading_form(w);
    auto bound = leading_form_positive(lead);
    if (!bound) {
        out.status = PositivityStatus::NonPositiveLeadingForm;
        out.detail = "leading form " + to_string(lead) + " is not positive definite";
        return out;
    }
    // For r >= 1: |lower-order part| <= S r^(d-1) and lead >= m r^d.
    const BigRational tail = coefficient_norm1(w - lead);
    const BigRational radius = power_of_two_at_least(std::max(BigRational(1), BigRational(tail / *bound)));

    PositivityCertificate cert{*bound, radius, {}, 0};
    struct Pending {
        Box box;
        unsigned depth;
    };
    std::vector<Pending> stack{{{-radius, radius, -radius, radius}, 0}};
    std::size_t processed = 0;
    while (!stack.empty()) {
        Pending cur = std::move(stack.back());
        stack.pop_back();
        if (++processed > options.max_cells) {
            out.status = PositivityStatus::Inconclusive;
            out.detail = "cell budget of " + std::to_string(options.max_cells) + " exhausted";
            return out;
        }
        const Box& b = cur.box;
        const BigRational cx = (b.x_lo + b.x_hi) / 2, cy = (b.y_lo + b.y_hi) / 2;
        BoxBound bb = fast_box_bound(w, b);
        if (bb.centre_value <= 0) {
            out.status = PositivityStatus::Refuted;
            out.refutation = RationalPoint{cx, cy};
            out.detail = "W(" + cx.get_str() + ", " + cy.get_str() + ") <= 0";
            return out;
        }
        BigRational lb = std::move(bb.lower_bound);
        if (lb > 0) {
            cert.max_depth_used = std::max(cert.max_depth_used, cur.depth);
            cert.cells.push_back({b, std::move(lb)});
            continue;
        }
        if (cur.depth >= options.max_depth) {
            out.status = PositivityStatus::Inconclusive;
            out.detail = "max depth " + std::to_string(options.max_depth) + " reached near (" + cx.get_str() + ", " +
                         cy.get_str() + ")";
            return out;
        }
        // Pushed in reverse so cells are visited lower-left first.
        const unsigned next = cur.depth + 1;
        stack.push_back({{cx, b.x_hi, cy, b.y_hi}, next});
        stack.push_back({{b.x_lo, cx, cy, b.y_hi}, next});
        stack.push_back({{cx, b.x_hi, b.y_lo, cy}, next});
        stack.push_back({{b.x_lo, cx, b.y_lo, cy}, next});
    }
    std::sort(cert.cells.begin(), cert.cells.end(), canonical_box_order);
    out.status = PositivityStatus::Certified;
    out.certificate = std::move(cert);
    return out;
}

bool verify_certificate(const BivariatePoly& w, const PositivityCertificate& cert) {
    if (w.is_zero() || cert.leading_form_min_bound <= 0) return false;
    const unsigned d = *w.degree();
    if (d == 0) return w.coefficient(0, 0) >= cert.leading_form_min_bound && cert.cells.empty();
    if (d % 2 != 0) return false;
    BivariatePoly lead = leading_form(w);
    if (lead.coefficient(0, d) < cert.leading_form_min_bound) return false;
    if (!bounded_below_by(dehomogenize(lead, d), d, cert.leading_form_min_bound)) return false;
    const BigRational& r = cert.cutoff_radius;
    if (r < 1 || r * cert.leading_form_min_bound < coefficient_norm1(w - lead)) return false;

    BigRational covered = 0;
    for (const auto& cell : cert.cells) {
        const Box& b = cell.box;
        if (cell.lower_bound <= 0) return false;
        if (b.x_lo < -r || b.x_hi > r || b.y_lo < -r || b.y_hi > r) return false;
        if (b.x_lo >= b.x_hi || b.y_lo >= b.y_hi) return false;
        if (box_lower_bound(w, b) < cell.lower_bound) return false;
        covered += area(b);
    }
    if (covered != 4 * r * r) return false;
    // Equal total area and containment leave overlap as the only gap.
    std::vector<const CertifiedCell*> order;
    for (const auto& c : cert.cells) order.push_back(&c);
    std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->box.x_lo < b->box.x_lo; });
    for (std::size_t a = 0; a < order.size(); ++a) {
        for (std::size_t b = a + 1; b < order.size() && order[b]->box.x_lo < order[a]->box.x_hi; ++b) {
            const Box& p = order[a]->box;
            const Box& q = order[b]->box;
            if (p.y_lo < q.y_hi && q.y_lo < p.y_hi) return false;
        }
    }
    return true;
}

DecayReport decay_exponent(const RationalFn& f) {
    DecayReport report;
    report.bound_valid = definite_orientation(f.den).has_value();
    if (f.num.is_zero()) return report;
    report.exponent = static_cast<int>(*f.den.degree()) - static_cast<int>(*f.num.degree());
    report.exact_on_generic_ray = true;
    return report;
}

bool l2_membership(const RationalFn& psi, const PositivityOptions& options) {
    if (psi.num.is_zero()) return true;
    auto den = definite_orientation(psi.den);
    if (!den) return false;
    PositivityOutcome pos = global_positivity(*den, options);
    if (pos.status == PositivityStatus::Inconclusive)
        throw Error(ErrorKind::Inconclusive, "denominator positivity: " + pos.detail);
    if (pos.status != PositivityStatus::Certified) return false;
    DecayReport report = decay_exponent(psi);
    return report.bound_valid && report.exponent && *report.exponent >= 2;
}

double numeric_residual(const RationalFn& u, const RationalFn& psi, std::span<const RationalPoint> grid,
                        const BigRational& h) {
    if (h <= 0) throw Error(ErrorKind::InvalidArgument, "step h must be positive");
    auto value = [&](const BigRational& x, const BigRational& y, int reference_sign) -> BigRational {
        BigRational d = evaluate(psi.den, x, y);
        if (d == 0 || (reference_sign != 0 && sgn(d) != reference_sign))
            throw Error(ErrorKind::PoleTooClose, "denominator changes sign within h of (" + x.get_str() + ", " +
                                                     y.get_str() + ")");
        return evaluate(psi.num, x, y) / d;
    };
    const BigRational h2 = h * h;
    BigRational worst = 0;
    for (const auto& p : grid) {
        BigRational dc = evaluate(psi.den, p.x, p.y);
        if (dc == 0) throw Error(ErrorKind::PoleTooClose, "grid point on a pole");
        const int s = sgn(dc);
        BigRational centre = evaluate(psi.num, p.x, p.y) / dc;
        BigRational around = value(p.x + h, p.y, s) + value(p.x - h, p.y, s) + value(p.x, p.y + h, s) +
                             value(p.x, p.y - h, s);
        BigRational lap = (around - 4 * centre) / h2;
        BigRational res = -lap + rf_evaluate(u, p.x, p.y) * centre;
        worst = std::max(worst, abs(res));
    }
    return to_double(worst);
}

std::vector<RationalPoint> uniform_grid(const BigRational& lo, const BigRational& hi, unsigned n) {
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "grid needs at least 2 points per side");
    std::vector<RationalPoint> pts;
    pts.reserve(std::size_t(n) * n);
    const BigRational step = (hi - lo) / (n - 1);
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) pts.push_back({lo + step * a, lo + step * b});
    return pts;
}

L2Estimate numeric_l2_norm(const RationalFn& psi, const BigRational& outer_radius, const L2Options& options) {
    if (outer_radius <= 0) throw Error(ErrorKind::InvalidArgument, "outer radius must be positive");
    if (psi.num.is_zero()) return {};
    auto den = definite_orientation(psi.den);
    if (!den) throw Error(ErrorKind::Inconclusive, "denominator leading form is not definite");
    PositivityOutcome pos = global_positivity(*den, options.positivity);
    if (pos.status != PositivityStatus::Certified)
        throw Error(ErrorKind::Inconclusive, "no positivity certificate for the denominator: " + pos.detail);
    DecayReport report = decay_exponent(psi);
    if (!report.exponent || *report.exponent < 2)
        throw Error(ErrorKind::InvalidArgument, "decay exponent below 2: not square integrable");

    const double big_r = to_double(outer_radius);
    // Radial nodes r = sinh(s), s uniform: fine near the origin, coarse far out.
    const double s_max = std::asinh(big_r);
    const double ds = s_max / options.radial_steps;
    const double dtheta = 2.0 * std::numbers::pi / options.angular_steps;
    double sum = 0.0;
    for (unsigned a = 0; a < options.radial_steps; ++a) {
        const double s = (a + 0.5) * ds;
        const double r = std::sinh(s), dr_ds = std::cosh(s);
        double ring = 0.0;
        for (unsigned b = 0; b < options.angular_steps; ++b) {
            const double th = (b + 0.5) * dtheta;
            const double x = r * std::cos(th), y = r * std::sin(th);
            const double v = evaluate_double(psi.num, x, y) / evaluate_double(psi.den, x, y);
            ring += v * v;
        }
        sum += ring * r * dr_ds;
    }
    L2Estimate est;
    est.disk_integral = sum * ds * dtheta;

    // |num| <= S_num r^deg(num) and den >= m r^d / 2 once r >= 2 S_low / m.
    BivariatePoly lead = leading_form(*den);
    const BigRational m = *leading_form_positive(lead);
    const double s_num = to_double(coefficient_norm1(psi.num));
    const double s_low = to_double(coefficient_norm1(*den - lead));
    const double md = to_double(m);
    const double k = *report.exponent;
    est.tail_valid_from = std::max(1.0, 2.0 * s_low / md);
    if (big_r >= est.tail_valid_from) {
        const double kk = 2.0 * s_num / md;
        est.tail_bound = 2.0 * std::numbers::pi * kk * kk * std::pow(big_r, 2.0 - 2.0 * k) / (2.0 * k - 2.0);
    } else {
        est.tail_bound = std::numeric_limits<double>::infinity();
    }
    return est;
}

}  // namespace moutard
