#ifndef SELBERG_NUMERIC_HPP
#define SELBERG_NUMERIC_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "selberg/errors.hpp"

namespace selberg {

using cplx = std::complex<double>;

inline bool is_finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// z^e for integer e (binary exponentiation; negative e inverts once at the end).
inline cplx pow_int(cplx z, long long e) {
    if (e == 0) return cplx(1.0);
    bool invert = e < 0;
    unsigned long long m = invert ? static_cast<unsigned long long>(-(e + 1)) + 1ull
                                  : static_cast<unsigned long long>(e);
    cplx acc(1.0), base = z;
    while (m != 0) {
        if (m & 1ull) acc *= base;
        base *= base;
        m >>= 1;
    }
    return invert ? cplx(1.0) / acc : acc;
}

inline long long binom2(long long n) { return n < 2 ? 0 : n * (n - 1) / 2; }
inline long long binom3(long long n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

inline std::uint64_t binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t acc = 1;
    for (long long i = 1; i <= k; ++i) acc = acc * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return acc;
}

// Fixed-shape pairwise reduction; bit-stable for a given input order
// regardless of how callers produced the terms.
inline cplx pairwise_sum(std::span<const cplx> xs) {
    if (xs.size() <= 8) {
        cplx acc(0.0);
        for (cplx x : xs) acc += x;
        return acc;
    }
    std::size_t half = xs.size() / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

// |lhs-rhs| / max(|lhs|+|rhs|, 1e-30), the residual recorded in reports.
inline double rel_residual(cplx lhs, cplx rhs) {
    double denom = std::abs(lhs) + std::abs(rhs);
    return std::abs(lhs - rhs) / std::max(denom, 1e-30);
}

// Comparison helper for quantities that may legitimately vanish (equal
// determinant columns and the like): relative residual away from zero,
// absolute near it.
inline bool residual_ok(cplx lhs, cplx rhs, double rel_tol, double abs_tol = 1e-12) {
    double denom = std::abs(lhs) + std::abs(rhs);
    if (denom < 1e-10) return std::abs(lhs - rhs) <= abs_tol;
    return std::abs(lhs - rhs) / denom <= rel_tol;
}

}  // namespace selberg

#endif
