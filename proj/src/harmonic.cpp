#include "moutard/harmonic.hpp"

#include "moutard/error.hpp"

namespace moutard {

std::pair<BivariatePoly, BivariatePoly> harmonic_basis(unsigned n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "harmonic_basis needs n >= 1");
    // (x + iy)^n = sum_k C(n,k) x^(n-k) i^k y^k
    std::vector<Term> re, im;
    BigInteger binom = 1;
    for (unsigned k = 0; k <= n; ++k) {
        if (k > 0) binom = binom * (n - k + 1) / k;
        BigRational c(binom);
        // i^k cycles 1, i, -1, -i
        switch (k % 4) {
            case 0: re.push_back({{n - k, k}, c}); break;
            case 1: im.push_back({{n - k, k}, c}); break;
            case 2: re.push_back({{n - k, k}, -c}); break;
            case 3: im.push_back({{n - k, k}, -c}); break;
        }
    }
    return {BivariatePoly::from_terms(std::move(re)), BivariatePoly::from_terms(std::move(im))};
}

bool is_harmonic(const BivariatePoly& p) { return laplacian(p).is_zero(); }

HarmonicCombo HarmonicCombo::from_coefficients(std::map<std::pair<unsigned, Part>, BigRational> coefficients) {
    HarmonicCombo combo;
    for (auto& [key, c] : coefficients) {
        if (c == 0) continue;
        auto [n, part] = key;
        if (n == 0) {
            if (part == Part::Im) throw Error(ErrorKind::InvalidArgument, "Im z^0 is not a basis element");
            combo.realized += BivariatePoly(c);
        } else {
            auto [re, im] = harmonic_basis(n);
            combo.realized += scale(part == Part::Re ? re : im, c);
        }
        combo.coefficients.emplace(key, c);
    }
    return combo;
}

unsigned HarmonicCombo::degree() const { return realized.degree().value_or(0); }

namespace {

long draw(std::mt19937_64& rng, unsigned bound) {
    const std::uint64_t span = 2ull * bound + 1;
    return static_cast<long>(rng() % span) - static_cast<long>(bound);
}

}  // namespace

HarmonicCombo random_combo(unsigned max_degree, std::mt19937_64& rng, unsigned coefficient_bound,
                           const ComboOptions& options) {
    if (max_degree < 1) throw Error(ErrorKind::InvalidArgument, "random_combo needs max_degree >= 1");
    std::map<std::pair<unsigned, Part>, BigRational> coefficients;
    if (options.include_constant) coefficients[{0, Part::Re}] = draw(rng, coefficient_bound);
    for (unsigned n = 1; n <= max_degree; ++n) {
        coefficients[{n, Part::Re}] = draw(rng, coefficient_bound);
        coefficients[{n, Part::Im}] = draw(rng, coefficient_bound);
    }
    return HarmonicCombo::from_coefficients(std::move(coefficients));
}

HarmonicCombo random_combo(unsigned max_degree, std::uint64_t rng_seed, unsigned coefficient_bound,
                           const ComboOptions& options) {
    std::mt19937_64 rng(rng_seed);
    return random_combo(max_degree, rng, coefficient_bound, options);
}

HarmonicCombo complex_multiple(const HarmonicCombo& combo, const BigRational& mu_re, const BigRational& mu_im) {
    // Re((a + ib) z^n) = a Re z^n − b Im z^n, so the Im-coefficient is −b.
    std::map<unsigned, std::pair<BigRational, BigRational>> f;  // n -> (a, b)
    for (const auto& [key, c] : combo.coefficients) {
        auto& ab = f[key.first];
        if (key.second == Part::Re)
            ab.first += c;
        else
            ab.second -= c;
    }
    std::map<std::pair<unsigned, Part>, BigRational> out;
    for (const auto& [n, ab] : f) {
        const auto& [a, b] = ab;
        BigRational re = mu_re * a - mu_im * b;
        BigRational im = mu_re * b + mu_im * a;
        out[{n, Part::Re}] = re;
        if (n > 0) out[{n, Part::Im}] = -im;
    }
    return HarmonicCombo::from_coefficients(std::move(out));
}

}  // namespace moutard
