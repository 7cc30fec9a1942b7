#include "moutard/search.hpp"

#include <algorithm>
#include <random>

#include "moutard/error.hpp"
#include "moutard/harmonic.hpp"

namespace moutard {

std::string_view to_string(SeedFamily family) noexcept {
    return family == SeedFamily::Generic ? "generic" : "conjugate";
}

namespace {

bool certifies(const BivariatePoly& w, const SearchOptions& options, PositivityStatus& last) {
    last = global_positivity(w, options.positivity).status;
    return last == PositivityStatus::Certified;
}

void require(bool condition, const std::string& invariant) {
    if (!condition) throw Error(ErrorKind::AssertionFailed, invariant);
}

}  // namespace

BigRational min_positive_constant(const BivariatePoly& f, const SearchOptions& options) {
    if (f.is_constant()) throw Error(ErrorKind::InvalidArgument, "min_positive_constant needs a nonconstant F");
    const unsigned d = *f.degree();
    if (d % 2 != 0 || !leading_form_positive(leading_form(f)))
        throw Error(ErrorKind::NonPositiveLeadingForm, "leading form of F is not positive definite; no C works");

    PositivityStatus last{};
    BigRational c = 1;
    if (certifies(f + BivariatePoly(c), options, last)) {
        while (c / 2 >= options.c_floor && certifies(f + BivariatePoly(c / 2), options, last)) c /= 2;
        return c;
    }
    while (c < options.c_cap) {
        c *= 2;
        if (certifies(f + BivariatePoly(c), options, last)) return c;
    }
    throw Error(ErrorKind::Inconclusive, "no certified constant up to the cap (last status: " +
                                             std::string(to_string(last)) + ")");
}

SeedPair orient_seeds(const SeedPair& seeds) {
    BivariatePoly f = theta_antiderivative(seeds);
    if (f.leading_term().coef < 0) return {seeds.u0, seeds.omega1, -seeds.omega2};
    return seeds;
}

SearchRecord analyze_pair(const SeedPair& seeds, std::string family, unsigned trial, const SearchOptions& options) {
    SearchRecord rec;
    rec.trial = trial;
    rec.family = std::move(family);
    rec.omega1 = seeds.omega1;
    rec.omega2 = seeds.omega2;
    try {
        SeedPair oriented = orient_seeds(seeds);
        rec.omega2 = oriented.omega2;
        BivariatePoly f = theta_antiderivative(oriented);
        try {
            rec.C = min_positive_constant(f, options);
            rec.positivity = PositivityStatus::Certified;
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::NonPositiveLeadingForm)
                rec.positivity = PositivityStatus::NonPositiveLeadingForm;
            else if (e.kind() == ErrorKind::Inconclusive)
                rec.positivity = PositivityStatus::Inconclusive;
            else
                throw;
            rec.C = 1;
            rec.note = e.what();
        }
        DoubleMoutardResult r = double_transform(oriented, rec.C);
        rec.W_degree = r.W.degree().value_or(0);
        DecayReport du = decay_exponent(r.u);
        DecayReport d1 = decay_exponent(r.psi1);
        DecayReport d2 = decay_exponent(r.psi2);
        rec.valid = du.bound_valid && d1.bound_valid && d2.bound_valid && du.exponent && d1.exponent && d2.exponent;
        if (rec.valid) {
            rec.u_decay = *du.exponent;
            rec.psi_decay = std::min(*d1.exponent, *d2.exponent);
        }
    } catch (const Error& e) {
        rec.valid = false;
        rec.note = e.what();
    }
    return rec;
}

SeedPair draw_seed_pair(unsigned degree, SeedFamily family, std::uint64_t trial_seed, unsigned coefficient_bound) {
    if (degree < 1) throw Error(ErrorKind::InvalidArgument, "degree must be >= 1");
    if (coefficient_bound < 1) throw Error(ErrorKind::InvalidArgument, "coefficient bound must be >= 1");
    std::mt19937_64 rng(trial_seed);
    auto full_degree = [&] {
        for (;;) {
            HarmonicCombo c = random_combo(degree, rng, coefficient_bound);
            if (c.degree() == degree) return c;
        }
    };
    for (;;) {
        HarmonicCombo first = full_degree();
        HarmonicCombo second;
        if (family == SeedFamily::Generic) {
            second = full_degree();
        } else {
            const std::uint64_t span = 2ull * coefficient_bound + 1;
            long re = static_cast<long>(rng() % span) - static_cast<long>(coefficient_bound);
            long im = static_cast<long>(rng() % coefficient_bound) + 1;
            if (rng() & 1u) im = -im;
            second = complex_multiple(first, re, im);
        }
        if (!proportional(first.realized, second.realized)) return {RationalFn(), first.realized, second.realized};
    }
}

std::vector<SearchRecord> sweep(unsigned degree, std::uint64_t rng_seed, unsigned trials, const SearchOptions& options) {
    if (degree < 2) throw Error(ErrorKind::InvalidArgument, "sweep needs degree >= 2");
    std::mt19937_64 master(rng_seed);
    std::vector<SearchRecord> records;
    records.reserve(trials);
    for (unsigned t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = master();
        const SeedFamily family = (t % 2 == 0) ? SeedFamily::Generic : SeedFamily::Conjugate;
        SeedPair seeds = draw_seed_pair(degree, family, trial_seed, options.coefficient_bound);
        records.push_back(analyze_pair(seeds, std::string(to_string(family)), t, options));
    }
    std::stable_sort(records.begin(), records.end(), [](const SearchRecord& a, const SearchRecord& b) {
        if (a.valid != b.valid) return a.valid;
        if (a.u_decay != b.u_decay) return a.u_decay > b.u_decay;
        if (a.W_degree != b.W_degree) return a.W_degree < b.W_degree;
        return a.trial < b.trial;
    });
    return records;
}

SeedPair example_seeds(int example_id) {
    switch (example_id) {
        case 1:
            return {RationalFn(), parse_poly("x + 2*(x^2 - y^2) + x*y"),
                    parse_poly("x + y + 3/2*(x^2 - y^2) + 5*x*y")};
        case 2:
            return {RationalFn(), parse_poly("x + (x^2 - y^2 - 3*x*y)/5 + 2*(-x^3 - 3*x^2*y + 3*x*y^2 + y^3)"),
                    parse_poly("x + y + (x^2 - y^2)/2 - x*y/5 - 4*(3*x^2*y - y^3)")};
        default:
            throw Error(ErrorKind::InvalidArgument, "unknown example id " + std::to_string(example_id));
    }
}

BivariatePoly example1_denominator() {
    return parse_poly("160 + 4*x^2 + 4*y^2 + 16*x^3 + 4*x^2*y + 16*x*y^2 + 4*y^3 + 17*(x^2 + y^2)^2");
}

RationalFn example1_potential() {
    BivariatePoly w = example1_denominator();
    return {parse_poly("-5120*(1 + 8*x + 2*y + 17*x^2 + 17*y^2)"), w * w};
}

RationalFn example1_psi1() { return {parse_poly("x + 2*x^2 + x*y - 2*y^2"), example1_denominator()}; }

RationalFn example1_psi2() { return {parse_poly("2*x + 2*y + 3*x^2 + 10*x*y - 3*y^2"), example1_denominator()}; }

std::optional<BigRational> proportionality_factor(const RationalFn& a, const RationalFn& b) {
    BivariatePoly p = a.num * b.den;
    BivariatePoly q = b.num * a.den;
    if (q.is_zero()) return p.is_zero() ? std::optional<BigRational>(0) : std::nullopt;
    if (p.is_zero()) return BigRational(0);
    if (!(p.leading_term().exp == q.leading_term().exp)) return std::nullopt;
    BigRational s = p.leading_term().coef / q.leading_term().coef;
    if (!(scale(q, s) == p)) return std::nullopt;
    return s;
}

ExampleReport run_example(int example_id, const SearchOptions& options) {
    ExampleReport rep;
    SeedPair oriented = orient_seeds(example_seeds(example_id));
    BivariatePoly f = theta_antiderivative(oriented);
    BigRational c;
    if (example_id == 1) {
        rep.calibration = calibrate_against(f, example1_denominator());
        require(rep.calibration->lambda != 0, "calibration scale is nonzero");
        // λF + C* is the reference W; any rescaling of W leaves u fixed.
        c = rep.calibration->constant / rep.calibration->lambda;
    } else {
        c = min_positive_constant(f, options);
    }
    rep.result = double_transform(oriented, c);
    const auto& r = rep.result;

    if (example_id == 1) {
        require(rf_equal(r.u, example1_potential()), "u equals the reference potential");
        auto s1 = proportionality_factor(r.psi1, example1_psi1());
        auto s2 = proportionality_factor(r.psi2, example1_psi2());
        require(s1 && *s1 != 0, "psi1 is a nonzero multiple of the reference psi1");
        require(s2 && *s2 != 0, "psi2 is a nonzero multiple of the reference psi2");
        rep.psi1_scale = *s1;
        rep.psi2_scale = *s2;
    }
    require(verify_lemma(oriented, c), "both second-step branches give the same potential and kernel");

    PositivityOutcome pos = global_positivity(r.W, options.positivity);
    require(pos.status == PositivityStatus::Certified, "W is certified positive (" + pos.detail + ")");
    rep.certificate = std::move(*pos.certificate);

    rep.u_decay = decay_exponent(r.u);
    rep.psi1_decay = decay_exponent(r.psi1);
    rep.psi2_decay = decay_exponent(r.psi2);
    const int want_u = example_id == 1 ? 6 : 8;
    const int want_psi = example_id == 1 ? 2 : 3;
    require(rep.u_decay.bound_valid && rep.u_decay.exponent == want_u,
            "u decays as r^-" + std::to_string(want_u));
    require(rep.psi1_decay.bound_valid && rep.psi1_decay.exponent == want_psi,
            "psi1 decays as r^-" + std::to_string(want_psi));
    require(rep.psi2_decay.bound_valid && rep.psi2_decay.exponent == want_psi,
            "psi2 decays as r^-" + std::to_string(want_psi));
    rep.psi1_in_l2 = l2_membership(r.psi1, options.positivity);
    rep.psi2_in_l2 = l2_membership(r.psi2, options.positivity);
    require(rep.psi1_in_l2 && rep.psi2_in_l2, "psi1 and psi2 are square integrable");

    SearchRecord& rec = rep.record;
    rec.trial = 0;
    rec.family = "example" + std::to_string(example_id);
    rec.omega1 = oriented.omega1;
    rec.omega2 = oriented.omega2;
    rec.C = c;
    rec.u_decay = *rep.u_decay.exponent;
    rec.psi_decay = std::min(*rep.psi1_decay.exponent, *rep.psi2_decay.exponent);
    rec.positivity = PositivityStatus::Certified;
    rec.W_degree = *r.W.degree();
    rec.valid = true;
    return rep;
}

SearchRecord verify_example(int example_id, const SearchOptions& options) {
    return run_example(example_id, options).record;
}

}  // namespace moutard
