#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "moutard/rational_fn.hpp"

namespace moutard {

struct RationalPoint {
    BigRational x;
    BigRational y;
};

/// Closed axis-aligned box [x_lo, x_hi] x [y_lo, y_hi].
struct Box {
    BigRational x_lo, x_hi, y_lo, y_hi;
};

struct CertifiedCell {
    Box box;
    BigRational lower_bound;  ///< exact, > 0
};

/// Evidence that W > 0 on the whole plane: outside `cutoff_radius` the
/// leading form (>= leading_form_min_bound on the unit circle) dominates the
/// lower-order terms; the cells tile the square [-R, R]^2.
struct PositivityCertificate {
    BigRational leading_form_min_bound;
    BigRational cutoff_radius;
    std::vector<CertifiedCell> cells;
    unsigned max_depth_used = 0;
};

enum class PositivityStatus { Certified, Refuted, Inconclusive, NonPositiveLeadingForm };

std::string_view to_string(PositivityStatus status) noexcept;

struct PositivityOutcome {
    PositivityStatus status = PositivityStatus::Inconclusive;
    std::optional<PositivityCertificate> certificate;
    std::optional<RationalPoint> refutation;  ///< exact point with W <= 0
    std::string detail;
};

struct PositivityOptions {
    unsigned max_depth = 40;
    std::size_t max_cells = 2'000'000;
};

/// Exact positive lower bound of a homogeneous form on the unit circle, or
/// nullopt if the form is not positive definite. Throws NotHomogeneous or
/// OddDegree.
std::optional<BigRational> leading_form_positive(const BivariatePoly& form);

/// Exact lower bound of p over a box from the Taylor expansion at its centre.
BigRational box_lower_bound(const BivariatePoly& p, const Box& box);

PositivityOutcome global_positivity(const BivariatePoly& w, const PositivityOptions& options = {});

/// Independent re-check of a certificate against w: leading-form bound, tail
/// radius, every cell bound, and that the cells tile [-R, R]^2.
bool verify_certificate(const BivariatePoly& w, const PositivityCertificate& cert);

/// Decay of |f| like r^-exponent. `exponent` is nullopt for f == 0.
struct DecayReport {
    std::optional<int> exponent;
    bool bound_valid = false;
    bool exact_on_generic_ray = false;
};

DecayReport decay_exponent(const RationalFn& f);

/// Certifies that the denominator has no real zeros (either sign) and that
/// the decay exponent is at least 2. Throws Inconclusive.
bool l2_membership(const RationalFn& psi, const PositivityOptions& options = {});

/// max |−Δ_h ψ + uψ| over the grid with the five-point stencil, computed in
/// exact arithmetic and converted at the end. Throws PoleTooClose.
double numeric_residual(const RationalFn& u, const RationalFn& psi, std::span<const RationalPoint> grid,
                        const BigRational& h);

/// Uniform n x n grid over [lo, hi]^2.
std::vector<RationalPoint> uniform_grid(const BigRational& lo, const BigRational& hi, unsigned n);

struct L2Estimate {
    double disk_integral = 0.0;  ///< midpoint rule for ∫|ψ|² over r <= R
    double tail_bound = 0.0;     ///< rigorous bound for ∫|ψ|² over r > R
    double tail_valid_from = 0.0;
};

struct L2Options {
    unsigned radial_steps = 4000;
    unsigned angular_steps = 256;
    PositivityOptions positivity;
};

/// Squared L2 norm estimate of ψ. Throws Inconclusive without a positivity
/// certificate for the denominator, InvalidArgument when the decay exponent
/// is below 2.
L2Estimate numeric_l2_norm(const RationalFn& psi, const BigRational& outer_radius, const L2Options& options = {});

}  // namespace moutard
