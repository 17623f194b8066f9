#ifndef SELBERG_CORE_HPP
#define SELBERG_CORE_HPP

#include <span>
#include <vector>

#include "selberg/numeric.hpp"

namespace selberg {

// Base parameters p, q with |p|, |q| < 1 and the truncation policy shared
// by every product in the library. All special functions here depend on
// the nome; it is passed explicitly rather than held in global state.
struct Nome {
    cplx p;
    cplx q;
    double cutoff = 1e-17;  // drop lattice factors once their tail is below this
    int max_terms = 4096;   // safety bound on factors per product

    Nome(cplx p_, cplx q_, double cutoff_ = 1e-17, int max_terms_ = 4096);
};

// theta(z) = prod_{j>=0} (1 - p^j z)(1 - p^{j+1}/z), truncated once
// |p|^{j+1} max(|z|, 1/|z|) < cutoff. Multiplicative theta: theta(pz) = -theta(z)/z.
cplx theta(cplx z, const Nome& nm);

// (z)_k = prod_{j=0}^{k-1} theta(z q^j); empty product for k = 0.
cplx shifted_factorial(cplx z, long k, const Nome& nm);

// (z1, ..., zm)_k = (z1)_k ... (zm)_k
cplx shifted_factorial(std::span<const cplx> zs, long k, const Nome& nm);

// C = prod_{j>=1} (1 - p^j)(1 - q^j)
cplx dedekind_constant(const Nome& nm);

// Gamma(z) = prod_{j,k>=0} (1 - p^{j+1} q^{k+1}/z) / (1 - p^j q^k z),
// over the lattice points with |p|^j |q|^k max(|z|, 1/|z|) >= cutoff.
// Satisfies Gamma(qz) = theta(z) Gamma(z) and Gamma(z) Gamma(pq/z) = 1.
cplx elliptic_gamma(cplx z, const Nome& nm);

// min over the truncation lattice of |1 - p^j q^k z|: distance to the
// nearest pole factor, used by samplers and tests to keep margin.
double gamma_pole_margin(cplx z, const Nome& nm);

// The individual lattice factors of a Gamma-quotient, kept apart so that
// zeros of reciprocal gammas cancel against other factors instead of
// producing Inf * 0 at assembly time.
struct GammaFactors {
    std::vector<cplx> numerator_factors;
    std::vector<cplx> denominator_factors;

    void append(const GammaFactors& other);
};

// Factors of Gamma(z), or of 1/Gamma(z) when reciprocal (the two lists swap).
GammaFactors gamma_factors(cplx z, bool reciprocal, const Nome& nm);
void append_gamma_factors(GammaFactors& out, cplx z, bool reciprocal, const Nome& nm);

// Ordered product of numerator factors over denominator factors,
// interleaved so partial products stay within floating range. Division by
// an exactly-zero denominator factor throws; a zero numerator factor
// yields an exact zero.
cplx assemble(const GammaFactors& gf);

// Shorthand products over all sign choices of the exponent:
//   theta(a z^±)      = theta(az) theta(a/z)
//   (a z^±)_k         = (az)_k (a/z)_k
//   Gamma(a z^±)      = Gamma(az) Gamma(a/z)
//   Gamma(z^{±2})     = Gamma(z^2) Gamma(z^{-2})
//   Gamma(a z^± w^±)  = Gamma(azw) Gamma(az/w) Gamma(aw/z) Gamma(a/(zw))
cplx theta_pm(cplx a, cplx z, const Nome& nm);
cplx shifted_factorial_pm(cplx a, cplx z, long k, const Nome& nm);
cplx gamma_pm(cplx a, cplx z, const Nome& nm);
cplx gamma_pm2(cplx z, const Nome& nm);
cplx gamma_pm_pm(cplx a, cplx z, cplx w, const Nome& nm);
void append_gamma_pm(GammaFactors& out, cplx a, cplx z, bool reciprocal, const Nome& nm);
void append_gamma_pm2(GammaFactors& out, cplx z, bool reciprocal, const Nome& nm);
void append_gamma_pm_pm(GammaFactors& out, cplx a, cplx z, cplx w, bool reciprocal,
                        const Nome& nm);

}  // namespace selberg

#endif
