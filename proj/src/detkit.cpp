#include "selberg/detkit.hpp"

#include <algorithm>
#include <cmath>

namespace selberg {

cplx det(ComplexMatrix m) {
    const std::size_t n = m.dim();
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (!is_finite(m(r, c))) throw domain_error("det: non-finite matrix entry");

    cplx acc(1.0);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = std::abs(m(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            double v = std::abs(m(r, col));
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (best == 0.0) return cplx(0.0);
        if (pivot != col) {
            for (std::size_t c = col; c < n; ++c) std::swap(m(pivot, c), m(col, c));
            acc = -acc;
        }
        acc *= m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            cplx factor = m(r, col) / m(col, col);
            if (factor == cplx(0.0)) continue;
            for (std::size_t c = col + 1; c < n; ++c) m(r, c) -= factor * m(col, c);
        }
    }
    return acc;
}

DiscreteMeasure::DiscreteMeasure(std::vector<cplx> pts, std::vector<cplx> wts)
    : points(std::move(pts)), weights(std::move(wts)) {
    if (points.size() != weights.size())
        throw domain_error("DiscreteMeasure: points/weights length mismatch");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw domain_error("DiscreteMeasure: repeated point");
}

cplx andreief_lhs(std::span<const ScalarFn> fs, std::span<const ScalarFn> gs,
                  const DiscreteMeasure& mu) {
    if (fs.size() != gs.size() || fs.empty())
        throw domain_error("andreief: need equally many f and g handles");
    const std::size_t n = fs.size();
    const std::size_t m = mu.points.size();

    // moment matrix entries via cached handle values
    std::vector<cplx> fv(n * m), gv(n * m);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t x = 0; x < m; ++x) {
            fv[j * m + x] = fs[j](mu.points[x]);
            gv[j * m + x] = gs[j](mu.points[x]);
        }
    ComplexMatrix mat(n);
    std::vector<cplx> terms(m);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t x = 0; x < m; ++x)
                terms[x] = fv[j * m + x] * gv[k * m + x] * mu.weights[x];
            mat(j, k) = pairwise_sum(terms);
        }
    return det(mat);
}

cplx andreief_rhs(std::span<const ScalarFn> fs, std::span<const ScalarFn> gs,
                  const DiscreteMeasure& mu) {
    if (fs.size() != gs.size() || fs.empty())
        throw domain_error("andreief: need equally many f and g handles");
    const long n = static_cast<long>(fs.size());
    const long m = static_cast<long>(mu.points.size());
    if (n > m) return cplx(0.0);  // no increasing tuples; moment matrix is rank-deficient too

    std::vector<cplx> fv(fs.size() * mu.points.size()), gv(fv.size());
    for (long j = 0; j < n; ++j)
        for (long x = 0; x < m; ++x) {
            fv[j * m + x] = fs[j](mu.points[x]);
            gv[j * m + x] = gs[j](mu.points[x]);
        }

    std::vector<cplx> terms;
    for_each_increasing_tuple(n, m - 1, [&](std::span<const long> xs) {
        ComplexMatrix fm(n), gm(n);
        for (long j = 0; j < n; ++j)
            for (long k = 0; k < n; ++k) {
                fm(j, k) = fv[j * m + xs[k]];
                gm(j, k) = gv[j * m + xs[k]];
            }
        cplx term = det(fm) * det(gm);
        for (long k = 0; k < n; ++k) term *= mu.weights[xs[k]];
        terms.push_back(term);
    });
    return pairwise_sum(terms);
}

void for_each_increasing_tuple(long n, long N,
                               const std::function<void(std::span<const long>)>& fn) {
    if (n <= 0) throw domain_error("increasing tuples: n must be positive");
    if (n > N + 1) return;
    std::vector<long> xs(n);
    for (long i = 0; i < n; ++i) xs[i] = i;
    for (;;) {
        fn(xs);
        long i = n - 1;
        while (i >= 0 && xs[i] == N - (n - 1 - i)) --i;
        if (i < 0) return;
        ++xs[i];
        for (long j = i + 1; j < n; ++j) xs[j] = xs[j - 1] + 1;
    }
}

std::vector<std::vector<long>> enumerate_tuples(long n, long N) {
    std::vector<std::vector<long>> out;
    for_each_increasing_tuple(n, N, [&](std::span<const long> xs) {
        out.emplace_back(xs.begin(), xs.end());
    });
    return out;
}

std::uint64_t tuple_count(long n, long N) { return binomial(N + 1, n); }

cplx warnaar_det_direct(cplx a, cplx b, std::span<const cplx> zs, const Nome& nm) {
    const long n = static_cast<long>(zs.size());
    if (n < 1) throw domain_error("warnaar_det_direct: need at least one z");
    ComplexMatrix m(n);
    for (long j = 1; j <= n; ++j)
        for (long k = 1; k <= n; ++k)
            m(j - 1, k - 1) = shifted_factorial_pm(a, zs[k - 1], j - 1, nm) *
                              shifted_factorial_pm(b, zs[k - 1], n - j, nm);
    return det(m);
}

cplx warnaar_det_closed(cplx a, cplx b, std::span<const cplx> zs, const Nome& nm) {
    const long n = static_cast<long>(zs.size());
    if (n < 1) throw domain_error("warnaar_det_closed: need at least one z");
    cplx acc = pow_int(b, binom2(n)) * pow_int(nm.q, binom3(n));
    for (long j = 1; j <= n; ++j) {
        acc *= shifted_factorial(pow_int(nm.q, j - n) * a / b, j - 1, nm);
        acc *= shifted_factorial(pow_int(nm.q, n - j) * a * b, j - 1, nm);
    }
    for (long j = 0; j < n; ++j)
        for (long k = j + 1; k < n; ++k) acc *= theta_pm(zs[k], zs[j], nm) / zs[k];
    return acc;
}

}  // namespace selberg
