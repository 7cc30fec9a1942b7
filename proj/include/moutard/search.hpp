#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "moutard/analysis.hpp"
#include "moutard/construct.hpp"

namespace moutard {

/// How a sweep trial draws its seed pair.
///  - Generic: two independent random harmonic combinations.
///  - Conjugate: ω1 = Re f random, ω2 = Re(μ f) for a random non-real μ.
///    Both reference examples have this shape (μ = 1 − i), and it is what
///    makes W = c|f|² + C and the fast decay possible.
enum class SeedFamily { Generic, Conjugate };

std::string_view to_string(SeedFamily family) noexcept;

struct SearchRecord {
    unsigned trial = 0;
    std::string family;
    BivariatePoly omega1;
    BivariatePoly omega2;
    BigRational C;
    int u_decay = 0;
    int psi_decay = 0;
    PositivityStatus positivity = PositivityStatus::Inconclusive;
    unsigned W_degree = 0;
    bool valid = false;  ///< transform succeeded and all decay bounds hold; positivity is separate
    std::string note;
};

struct SearchOptions {
    unsigned coefficient_bound = 10;
    PositivityOptions positivity;
    BigRational c_floor{1, 64};
    BigRational c_cap{BigInteger(1) << 64};
};

/// Least power of two C (within [c_floor, c_cap]) for which F + C is
/// certified positive: starts at 1, halves while certification succeeds,
/// otherwise doubles until it does. Throws NonPositiveLeadingForm or
/// Inconclusive.
BigRational min_positive_constant(const BivariatePoly& f, const SearchOptions& options = {});

/// Negates ω2 when the quadrature F has a negative leading coefficient, so
/// that F + C can be positive. F is linear in ω2 and u is unchanged.
SeedPair orient_seeds(const SeedPair& seeds);

/// Runs the full pipeline on one pair (orientation, minimal C, double
/// transform, analysis). Failures are recorded in `note`, never thrown.
SearchRecord analyze_pair(const SeedPair& seeds, std::string family, unsigned trial,
                          const SearchOptions& options = {});

SeedPair draw_seed_pair(unsigned degree, SeedFamily family, std::uint64_t trial_seed, unsigned coefficient_bound);

/// Deterministic for fixed arguments. Even trials are Generic, odd trials
/// Conjugate. Sorted valid-first by (u_decay desc, W_degree asc, trial asc).
std::vector<SearchRecord> sweep(unsigned degree, std::uint64_t rng_seed, unsigned trials,
                                const SearchOptions& options = {});

/// Seeds of the two reference examples (u0 = 0).
SeedPair example_seeds(int example_id);
/// Reference closed forms for example 1.
BivariatePoly example1_denominator();
RationalFn example1_potential();
RationalFn example1_psi1();
RationalFn example1_psi2();

/// Rational s with a = s·b, if any (rf_equal-based).
std::optional<BigRational> proportionality_factor(const RationalFn& a, const RationalFn& b);

struct ExampleReport {
    SearchRecord record;
    DoubleMoutardResult result;
    std::optional<AffineCalibration> calibration;
    DecayReport u_decay;
    DecayReport psi1_decay;
    DecayReport psi2_decay;
    PositivityCertificate certificate;
    bool psi1_in_l2 = false;
    bool psi2_in_l2 = false;
    BigRational psi1_scale;  ///< example 1 only: ψ1 = scale · reference ψ1
    BigRational psi2_scale;
};

/// Full pipeline on a reference example; any failed invariant throws
/// AssertionFailed naming it.
ExampleReport run_example(int example_id, const SearchOptions& options = {});
SearchRecord verify_example(int example_id, const SearchOptions& options = {});

}  // namespace moutard
