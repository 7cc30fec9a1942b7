// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Tolerances are fixed here and never relaxed at runtime.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "moutard/darboux1d.hpp"
#include "moutard/error.hpp"
#include "moutard/search.hpp"
#include "moutard/serialize.hpp"
#include "moutard/transform.hpp"

using namespace moutard;

namespace {

constexpr double kResidualTolerance = 1e-3;
constexpr double kRatioLow = 3.5, kRatioHigh = 4.5;
constexpr double kL2RelativeTolerance = 0.01;
constexpr unsigned kIdentityPairs = 200;
constexpr double kIdentitySeconds = 60.0;
constexpr double kExample1Seconds = 5.0;
constexpr unsigned kSweepTrials = 20;
constexpr unsigned kSoundnessPoints = 1000;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

// JSON texts of every object produced by criteria 1-8, each paired with a
// function that parses and re-serializes it.
struct RoundTrip {
    std::string label;
    std::string text;
    std::function<std::string(const Json&)> reserialize;
};
std::vector<RoundTrip> produced;

template <class T, class F>
void keep(const std::string& label, const T& value, F from_json) {
    produced.push_back({label, to_json(value).dump(), [from_json](const Json& j) { return to_json(from_json(j)).dump(); }});
}

void keep_bundle(const std::string& label, const DoubleMoutardResult& r, bool verified) {
    produced.push_back({label, to_json(r, verified).dump(),
                        [verified](const Json& j) { return to_json(bundle_from_json(j), verified).dump(); }});
}

RationalPoint random_point(std::mt19937_64& rng, const BigRational& radius) {
    std::uniform_int_distribution<long> t(-(1L << 24), 1L << 24);
    BigRational sx(t(rng), 1L << 24), sy(t(rng), 1L << 24);
    sx.canonicalize();
    sy.canonicalize();
    return {radius * sx, radius * sy};
}

void criterion1(Outcome& o) {
    auto t0 = Clock::now();
    ExampleReport rep = run_example(1);
    o.require(rep.calibration.has_value(), "affine calibration found");
    if (rep.calibration) {
        o.detail << "lambda=" << rep.calibration->lambda << " C*=" << rep.calibration->constant;
    }
    o.require(rf_equal(rep.result.u, example1_potential()), "u equals the reference potential");
    auto s1 = proportionality_factor(rep.result.psi1, example1_psi1());
    auto s2 = proportionality_factor(rep.result.psi2, example1_psi2());
    o.require(s1 && *s1 != 0, "psi1 proportional to the reference psi1");
    o.require(s2 && *s2 != 0, "psi2 proportional to the reference psi2");
    if (s1 && s2) o.detail << " psi scales " << *s1 << ", " << *s2;
    const double dt = seconds_since(t0);
    o.detail << " time " << dt << " s";
    o.require(dt < kExample1Seconds, "runtime under 5 s");
    keep_bundle("example 1 bundle", rep.result, true);
    keep("example 1 certificate", rep.certificate, certificate_from_json);
    keep("example 1 record", rep.record, search_record_from_json);
    keep("example 1 seeds", example_seeds(1), seed_pair_from_json);
}

void criterion2(Outcome& o) {
    const RationalFn u = example1_potential();
    auto grid = uniform_grid(-5, 5, 21);
    for (const auto& [name, psi] : {std::pair{"psi1", example1_psi1()}, std::pair{"psi2", example1_psi2()}}) {
        o.require(verify_solution(u, psi), std::string(name) + " exact kernel check");
        double r1 = numeric_residual(u, psi, grid, make_rational(1, 100));
        double r2 = numeric_residual(u, psi, grid, make_rational(1, 200));
        double ratio = r1 / r2;
        o.detail << name << ": residual " << r1 << " ratio " << ratio << "; ";
        o.require(r1 < kResidualTolerance, std::string(name) + " residual < 1e-3");
        o.require(ratio >= kRatioLow && ratio <= kRatioHigh, std::string(name) + " ratio in [3.5, 4.5]");
        keep(std::string("reference ") + name, psi, rational_fn_from_json);
    }
    keep("reference u", u, rational_fn_from_json);
}

void check_decay(Outcome& o, const std::string& name, const DecayReport& r, int expected) {
    o.detail << name << "=" << (r.exponent ? std::to_string(*r.exponent) : "none") << " ";
    o.require(r.exponent == expected && r.bound_valid, name + " decay " + std::to_string(expected));
    keep(name + " decay report", r, decay_report_from_json);
}

void criterion3(Outcome& o) {
    check_decay(o, "Ex1 u", decay_exponent(example1_potential()), 6);
    check_decay(o, "Ex1 psi1", decay_exponent(example1_psi1()), 2);
    check_decay(o, "Ex1 psi2", decay_exponent(example1_psi2()), 2);
    ExampleReport rep = run_example(2);
    check_decay(o, "Ex2 u", rep.u_decay, 8);
    check_decay(o, "Ex2 psi1", rep.psi1_decay, 3);
    check_decay(o, "Ex2 psi2", rep.psi2_decay, 3);
    keep_bundle("example 2 bundle", rep.result, true);
    keep("example 2 seeds", example_seeds(2), seed_pair_from_json);
}

void criterion4(Outcome& o) {
    std::mt19937_64 rng(4);
    const std::vector<std::pair<std::string, BivariatePoly>> ws = {
        {"Ex1 W", example1_denominator()}, {"Ex2 W", run_example(2).result.W}};
    for (const auto& [name, w] : ws) {
        PositivityOutcome out = global_positivity(w);
        bool certified = out.status == PositivityStatus::Certified && out.certificate;
        o.require(certified, name + " certified");
        if (!certified) continue;
        const auto& cert = *out.certificate;
        o.detail << name << ": " << cert.cells.size() << " cells, depth " << cert.max_depth_used << ", R "
                 << cert.cutoff_radius << "; ";
        o.require(cert.max_depth_used <= 40, name + " depth <= 40");
        o.require(verify_certificate(w, cert), name + " certificate re-check");
        // spot check over twice the certified square, covering cells and tail
        unsigned bad = 0;
        for (unsigned k = 0; k < kSoundnessPoints; ++k) {
            RationalPoint p = random_point(rng, 2 * cert.cutoff_radius);
            if (evaluate(w, p.x, p.y) <= 0) ++bad;
        }
        o.require(bad == 0, name + " positive at all sample points");
        keep(name + " certificate", cert, certificate_from_json);
    }
}

void criterion5(Outcome& o) {
    const BivariatePoly x = BivariatePoly::x(), y = BivariatePoly::y();
    o.require(l2_membership(example1_psi1()), "Ex1 psi1 in L2");
    o.require(l2_membership(example1_psi2()), "Ex1 psi2 in L2");
    ExampleReport rep = run_example(2);
    o.require(l2_membership(rep.result.psi1), "Ex2 psi1 in L2");
    o.require(l2_membership(rep.result.psi2), "Ex2 psi2 in L2");
    L2Estimate e = numeric_l2_norm({1, x * x + y * y + BivariatePoly(1)}, 1000);
    const double value = e.disk_integral + e.tail_bound;
    const double rel = std::abs(value - std::numbers::pi) / std::numbers::pi;
    o.detail << "||1/(1+r^2)||^2 ~ " << value << " (rel err " << rel << ")";
    o.require(rel < kL2RelativeTolerance, "numeric L2 norm within 1% of pi");
}

void criterion6(Outcome& o) {
    auto t0 = Clock::now();
    std::mt19937_64 rng(6);
    unsigned passed = 0, degenerate = 0, failed = 0;
    for (unsigned k = 0; k < kIdentityPairs; ++k) {
        const unsigned degree = 1 + k % 3;
        SeedPair s{RationalFn(), random_combo(degree, rng, 10).realized, random_combo(degree, rng, 10).realized};
        std::uniform_int_distribution<long> num(-20, 20), den(1, 7);
        long n = 0;
        while (n == 0) n = num(rng);
        BigRational c = make_rational(n, den(rng));
        if (s.omega1.is_zero() || s.omega2.is_zero() || proportional(s.omega1, s.omega2)) {
            ++degenerate;
            continue;
        }
        if (verify_lemma(s, c)) {
            ++passed;
        } else {
            ++failed;
        }
        if (k < 3) keep_bundle("random pair " + std::to_string(k), double_transform(s, c), true);
    }
    const double dt = seconds_since(t0);
    o.detail << passed << " passed, " << degenerate << " degenerate skipped, " << failed << " failed, time " << dt
             << " s";
    o.require(failed == 0, "identity holds on every non-degenerate pair");
    o.require(passed > 0, "some pairs were checked");
    o.require(dt < kIdentitySeconds, "under 60 s");
}

void criterion7(Outcome& o) {
    const Poly1D x = Poly1D::x();
    auto chain = rational_chain(5);
    o.require(chain.size() == 5, "five potentials");
    for (unsigned n = 1; n <= chain.size(); ++n) {
        RationalFn1D expected{Poly1D(long(n * (n + 1))), x * x};
        o.require(rf_equal(chain[n - 1], expected), "u_" + std::to_string(n) + " = n(n+1)/x^2");
        keep("chain u_" + std::to_string(n), chain[n - 1], rational_fn1d_from_json);
    }
    RationalFn plane = moutard_potential(RationalFn(), lift_to_plane(x));
    o.require(rf_equal(plane, lift_to_plane(chain[0])), "plane transform with seed x gives 2/x^2");
    o.detail << "chain " << to_string(chain[0]) << " .. " << to_string(chain[4]);
}

void criterion8(Outcome& o) {
    auto render = [](const std::vector<SearchRecord>& rs) {
        std::string s;
        for (const auto& r : rs) s += to_json(r).dump() + "\n";
        return s;
    };
    auto t0 = Clock::now();
    auto a = sweep(3, 8, kSweepTrials);
    auto b = sweep(3, 8, kSweepTrials);
    int best = 0;
    unsigned certified = 0;
    for (const auto& r : a) {
        if (r.positivity != PositivityStatus::Certified) continue;
        ++certified;
        best = std::max(best, r.u_decay);
        keep("sweep record " + std::to_string(r.trial), r, search_record_from_json);
    }
    o.detail << kSweepTrials << " trials, " << certified << " certified, best u_decay " << best << ", time "
             << seconds_since(t0) << " s (two runs)";
    o.require(best >= 8, "a certified record with u_decay >= 8");
    o.require(render(a) == render(b), "byte-identical output");
}

void criterion9(Outcome& o) {
    unsigned mismatched = 0;
    for (const auto& rt : produced) {
        std::string again = rt.reserialize(parse_json_text(rt.text));
        if (again != rt.text) {
            ++mismatched;
            o.detail << "mismatch: " << rt.label << "; ";
        }
    }
    o.detail << produced.size() << " objects round-tripped";
    o.require(mismatched == 0, "every object round-trips bit-exactly");
    o.require(produced.size() >= 20, "objects from all criteria were collected");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, void (*)(Outcome&)>> criteria = {
        {"Example 1 exact reproduction", criterion1},
        {"Kernel verification and finite-difference oracle", criterion2},
        {"Decay rates", criterion3},
        {"Smoothness certificates", criterion4},
        {"L2 membership", criterion5},
        {"Double-transform identity on 200 random pairs", criterion6},
        {"1D rational chain", criterion7},
        {"Degree-3 sweep", criterion8},
        {"JSON round trips", criterion9},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            criteria[k].second(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << " [exception: " << e.what() << "]";
        }
        if (!o.pass) ++failures;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (k + 1) << ": " << criteria[k].first << " -- "
                  << o.detail.str() << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
