#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <utility>

#include "moutard/poly.hpp"

namespace moutard {

enum class Part { Re, Im };

/// (Re (x+iy)^n, Im (x+iy)^n); n >= 1.
std::pair<BivariatePoly, BivariatePoly> harmonic_basis(unsigned n);

bool is_harmonic(const BivariatePoly& p);

/// Rational combination of Re/Im z^n. The key (0, Re) stands for the constant
/// term; (0, Im) is not allowed.
struct HarmonicCombo {
    std::map<std::pair<unsigned, Part>, BigRational> coefficients;
    BivariatePoly realized;

    static HarmonicCombo from_coefficients(std::map<std::pair<unsigned, Part>, BigRational> coefficients);
    unsigned degree() const;
};

struct ComboOptions {
    bool include_constant = false;
};

/// Integer coefficients uniform in [-bound, bound] for every (n, part) with
/// 1 <= n <= max_degree, drawn from `rng` in a fixed order.
HarmonicCombo random_combo(unsigned max_degree, std::mt19937_64& rng, unsigned coefficient_bound,
                           const ComboOptions& options = {});
HarmonicCombo random_combo(unsigned max_degree, std::uint64_t rng_seed, unsigned coefficient_bound,
                           const ComboOptions& options = {});

/// Re(mu * f) where the combo is Re(f), mu = mu_re + i mu_im.
HarmonicCombo complex_multiple(const HarmonicCombo& combo, const BigRational& mu_re, const BigRational& mu_im);

}  // namespace moutard
