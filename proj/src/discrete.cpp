#include "selberg/discrete.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <sstream>

#include "selberg/rng.hpp"

namespace selberg {

namespace {

constexpr double kDenominatorGuard = 1e-10;

void require_shape(long N, long n) {
    if (N < 0) throw domain_error("discrete params: N must be >= 0");
    if (n < 1 || n > N + 1) throw domain_error("discrete params: need 1 <= n <= N+1");
}

// Specification of one weighted sum over increasing tuples:
//   sum over 0 <= x_1 < ... < x_n <= N of
//     prod_{j<k} (q^{x_j} theta(q^{x_k-x_j}) theta(alpha q^{x_j+x_k}))^2
//     * prod_j theta(alpha q^{2 x_j})/theta(alpha)
//       * prod_{i<x_j} [prod_s theta(nums_s q^i) / prod_s theta(dens_s q^i)]
//       * q^{x_j * xmul}
// Every term is a product of O(1) factor ratios; no large intermediate
// products are formed.
struct SumSpec {
    cplx alpha;
    std::vector<cplx> nums;
    std::vector<cplx> dens;
    long n;
    long N;
    long xmul;
};

std::vector<cplx> point_weights(const SumSpec& s, const Nome& nm) {
    std::vector<cplx> w(s.N + 1);
    const cplx theta_alpha = theta(s.alpha, nm);
    std::vector<cplx> nq(s.nums.begin(), s.nums.end());
    std::vector<cplx> dq(s.dens.begin(), s.dens.end());
    cplx ratio(1.0);
    cplx alpha_q2x = s.alpha;
    const cplx q2 = nm.q * nm.q;
    const cplx qm = pow_int(nm.q, s.xmul);
    cplx qpow(1.0);
    for (long x = 0; x <= s.N; ++x) {
        if (x > 0) {
            cplx step(1.0);
            for (cplx& u : nq) {
                step *= theta(u, nm);
                u *= nm.q;
            }
            for (cplx& v : dq) {
                step /= theta(v, nm);
                v *= nm.q;
            }
            ratio *= step;
            alpha_q2x *= q2;
            qpow *= qm;
        }
        w[x] = theta(alpha_q2x, nm) / theta_alpha * ratio * qpow;
    }
    return w;
}

cplx tuple_term(const SumSpec& s, std::span<const long> xs, std::span<const cplx> w,
                std::span<const cplx> theta_qdiff, std::span<const cplx> theta_alpha_sum,
                const Nome& nm) {
    cplx term(1.0);
    for (long j = 0; j < s.n; ++j) {
        for (long k = j + 1; k < s.n; ++k) {
            cplx cross = pow_int(nm.q, xs[j]) * theta_qdiff[xs[k] - xs[j]] *
                         theta_alpha_sum[xs[j] + xs[k]];
            term *= cross * cross;
        }
        term *= w[xs[j]];
    }
    return term;
}

cplx weighted_tuple_sum(const SumSpec& s, const Nome& nm, bool reverse_order = false) {
    const std::vector<cplx> w = point_weights(s, nm);
    std::vector<cplx> theta_qdiff(s.N + 1, cplx(1.0));
    std::vector<cplx> theta_alpha_sum(2 * s.N + 1);
    {
        cplx qd = nm.q;
        for (long d = 1; d <= s.N; ++d) {
            theta_qdiff[d] = theta(qd, nm);
            qd *= nm.q;
        }
        cplx as = s.alpha;
        for (long t = 0; t <= 2 * s.N; ++t) {
            theta_alpha_sum[t] = theta(as, nm);
            as *= nm.q;
        }
    }
    std::vector<cplx> terms;
    terms.reserve(tuple_count(s.n, s.N));
    for_each_increasing_tuple(s.n, s.N, [&](std::span<const long> xs) {
        terms.push_back(tuple_term(s, xs, w, theta_qdiff, theta_alpha_sum, nm));
    });
    if (reverse_order) std::reverse(terms.begin(), terms.end());
    return pairwise_sum(terms);
}

cplx minimal_tuple_value(const SumSpec& s, const Nome& nm) {
    const std::vector<cplx> w = point_weights(s, nm);
    std::vector<cplx> theta_qdiff(s.N + 1, cplx(1.0));
    std::vector<cplx> theta_alpha_sum(2 * s.N + 1);
    cplx qd = nm.q;
    for (long d = 1; d <= s.N; ++d) {
        theta_qdiff[d] = theta(qd, nm);
        qd *= nm.q;
    }
    cplx as = s.alpha;
    for (long t = 0; t <= 2 * s.N; ++t) {
        theta_alpha_sum[t] = theta(as, nm);
        as *= nm.q;
    }
    std::vector<long> xs(s.n);
    for (long i = 0; i < s.n; ++i) xs[i] = i;
    return tuple_term(s, xs, w, theta_qdiff, theta_alpha_sum, nm);
}

SumSpec transformation_lhs_spec(const DiscreteParams& dp, const Nome& nm) {
    const cplx aq = dp.a * nm.q;
    SumSpec s;
    s.alpha = dp.a;
    s.nums = {dp.a, dp.b, dp.c, dp.d, dp.e, dp.f, dp.g, pow_int(nm.q, -dp.N)};
    s.dens = {nm.q,        aq / dp.b, aq / dp.c, aq / dp.d,
              aq / dp.e,   aq / dp.f, aq / dp.g, dp.a * pow_int(nm.q, dp.N + 1)};
    s.n = dp.n;
    s.N = dp.N;
    s.xmul = 1;
    return s;
}

SumSpec transformation_rhs_spec(const DiscreteParams& dp, const Nome& nm) {
    const cplx aq = dp.a * nm.q;
    const cplx lq = dp.lambda * nm.q;
    SumSpec s;
    s.alpha = dp.lambda;
    s.nums = {dp.lambda,
              dp.lambda * dp.b / dp.a,
              dp.lambda * dp.c / dp.a,
              dp.lambda * dp.d / dp.a,
              dp.e,
              dp.f,
              dp.g,
              pow_int(nm.q, -dp.N)};
    s.dens = {nm.q,      aq / dp.b, aq / dp.c, aq / dp.d,
              lq / dp.e, lq / dp.f, lq / dp.g, dp.lambda * pow_int(nm.q, dp.N + 1)};
    s.n = dp.n;
    s.N = dp.N;
    s.xmul = 1;
    return s;
}

SumSpec summation_lhs_spec(const DiscreteParams& dp, const Nome& nm) {
    const cplx aq = dp.a * nm.q;
    SumSpec s;
    s.alpha = dp.a;
    s.nums = {dp.a, dp.b, dp.c, dp.d, dp.e, pow_int(nm.q, -dp.N)};
    s.dens = {nm.q, aq / dp.b, aq / dp.c, aq / dp.d, aq / dp.e,
              dp.a * pow_int(nm.q, dp.N + 1)};
    s.n = dp.n;
    s.N = dp.N;
    s.xmul = 1;
    return s;
}

cplx transformation_rhs_prefactor(const DiscreteParams& dp, const Nome& nm) {
    const cplx aq = dp.a * nm.q;
    const cplx lq = dp.lambda * nm.q;
    cplx pref = pow_int(dp.a / dp.lambda, (dp.N + 1 - dp.n) * dp.n);
    pref *= pow_int(shifted_factorial(aq, dp.N, nm) / shifted_factorial(lq, dp.N, nm), dp.n);
    const std::array<cplx, 3> num1{dp.b, dp.c, dp.d};
    const std::array<cplx, 3> num2{lq / dp.e, lq / dp.f, lq / dp.g};
    const std::array<cplx, 3> den1{dp.lambda * dp.b / dp.a, dp.lambda * dp.c / dp.a,
                                   dp.lambda * dp.d / dp.a};
    const std::array<cplx, 3> den2{aq / dp.e, aq / dp.f, aq / dp.g};
    for (long j = 1; j <= dp.n; ++j) {
        pref *= shifted_factorial(num1, j - 1, nm) *
                shifted_factorial(num2, dp.N + 1 - j, nm);
        pref /= shifted_factorial(den1, j - 1, nm) *
                shifted_factorial(den2, dp.N + 1 - j, nm);
    }
    return pref;
}

void guard_check(cplx z, const Nome& nm, const char* what) {
    if (std::abs(theta(z, nm)) < kDenominatorGuard) {
        std::ostringstream os;
        os << "discrete params: guarded denominator theta factor below " << kDenominatorGuard
           << " (" << what << ")";
        throw instance_error(os.str());
    }
}

void guard_family(std::span<const cplx> bases, long steps, const Nome& nm, const char* what) {
    for (cplx v : bases) {
        cplx vq = v;
        for (long i = 0; i < steps; ++i) {
            guard_check(vq, nm, what);
            vq *= nm.q;
        }
    }
}

void guard_denominators(const DiscreteParams& dp, const Nome& nm) {
    guard_check(dp.a, nm, "theta(a)");
    if (dp.kind == DiscreteKind::summation) {
        const SumSpec s = summation_lhs_spec(dp, nm);
        guard_family(s.dens, dp.N, nm, "summation denominators");
        return;
    }
    guard_check(dp.lambda, nm, "theta(lambda)");
    const SumSpec l = transformation_lhs_spec(dp, nm);
    const SumSpec r = transformation_rhs_spec(dp, nm);
    guard_family(l.dens, dp.N, nm, "transformation lhs denominators");
    guard_family(r.dens, dp.N, nm, "transformation rhs denominators");
    guard_family(std::array<cplx, 1>{dp.lambda * nm.q}, dp.N, nm, "(lambda q)_N");
    if (dp.n >= 2) {
        const std::array<cplx, 11> moment_dens{
            dp.b,           dp.b / dp.a,    dp.c,           dp.c / dp.a,
            dp.e,           dp.e / dp.a,    dp.f,           dp.f / dp.a,
            dp.lambda * dp.b / dp.a, dp.lambda * dp.c / dp.a, dp.lambda * dp.d / dp.a};
        guard_family(moment_dens, dp.n - 1, nm, "moment-matrix denominators");
    }
}

void require_finite_nonzero(std::initializer_list<cplx> vals) {
    for (cplx v : vals)
        if (!is_finite(v) || v == cplx(0.0))
            throw domain_error("discrete params: parameters must be finite and nonzero");
}

}  // namespace

DiscreteParams DiscreteParams::transformation(cplx a, cplx b, cplx c, cplx d, cplx e, cplx f,
                                              long N, long n, const Nome& nm) {
    require_shape(N, n);
    require_finite_nonzero({a, b, c, d, e, f});
    DiscreteParams dp;
    dp.kind = DiscreteKind::transformation;
    dp.a = a;
    dp.b = b;
    dp.c = c;
    dp.d = d;
    dp.e = e;
    dp.f = f;
    dp.g = pow_int(nm.q, 4 + N - 2 * n) * a * a * a / (b * c * d * e * f);
    dp.lambda = a * a * pow_int(nm.q, 2 - n) / (b * c * d);
    dp.N = N;
    dp.n = n;
    guard_denominators(dp, nm);
    return dp;
}

DiscreteParams DiscreteParams::summation(cplx a, cplx b, cplx c, cplx d, long N, long n,
                                         const Nome& nm) {
    require_shape(N, n);
    require_finite_nonzero({a, b, c, d});
    DiscreteParams dp;
    dp.kind = DiscreteKind::summation;
    dp.a = a;
    dp.b = b;
    dp.c = c;
    dp.d = d;
    dp.e = pow_int(nm.q, N + 3 - 2 * n) * a * a / (b * c * d);
    dp.N = N;
    dp.n = n;
    guard_denominators(dp, nm);
    return dp;
}

DiscreteParams DiscreteParams::transformation_degenerate(cplx a, cplx b, cplx c, cplx e,
                                                         cplx f, long N, long n,
                                                         const Nome& nm) {
    require_finite_nonzero({a, b, c, e, f});
    return transformation(a, b, c, a * nm.q / c, e, f, N, n, nm);
}

double discrete_balance_residual(const DiscreteParams& dp, const Nome& nm) {
    if (dp.kind == DiscreteKind::summation) {
        cplx target = pow_int(nm.q, dp.N + 3 - 2 * dp.n) * dp.a * dp.a;
        return rel_residual(dp.b * dp.c * dp.d * dp.e, target);
    }
    cplx target = pow_int(nm.q, 4 + dp.N - 2 * dp.n) * dp.a * dp.a * dp.a;
    double r1 = rel_residual(dp.b * dp.c * dp.d * dp.e * dp.f * dp.g, target);
    double r2 = rel_residual(dp.lambda * dp.b * dp.c * dp.d,
                             dp.a * dp.a * pow_int(nm.q, 2 - dp.n));
    return std::max(r1, r2);
}

cplx discrete_transformation_lhs(const DiscreteParams& dp, const Nome& nm) {
    if (dp.kind != DiscreteKind::transformation)
        throw domain_error("discrete_transformation_lhs: wrong parameter kind");
    return weighted_tuple_sum(transformation_lhs_spec(dp, nm), nm);
}

cplx discrete_transformation_rhs(const DiscreteParams& dp, const Nome& nm) {
    if (dp.kind != DiscreteKind::transformation)
        throw domain_error("discrete_transformation_rhs: wrong parameter kind");
    return transformation_rhs_prefactor(dp, nm) *
           weighted_tuple_sum(transformation_rhs_spec(dp, nm), nm);
}

cplx discrete_transformation_rhs_minimal(const DiscreteParams& dp, const Nome& nm) {
    if (dp.kind != DiscreteKind::transformation)
        throw domain_error("discrete_transformation_rhs_minimal: wrong parameter kind");
    return transformation_rhs_prefactor(dp, nm) *
           minimal_tuple_value(transformation_rhs_spec(dp, nm), nm);
}

cplx discrete_transformation_lhs_reverse_order(const DiscreteParams& dp, const Nome& nm) {
    if (dp.kind != DiscreteKind::transformation)
        throw domain_error("discrete_transformation_lhs_reverse_order: wrong parameter kind");
    return weighted_tuple_sum(transformation_lhs_spec(dp, nm), nm, /*reverse_order=*/true);
}

cplx discrete_summation_lhs(const DiscreteParams& dp, const Nome& nm) {
    if (dp.kind != DiscreteKind::summation)
        throw domain_error("discrete_summation_lhs: wrong parameter kind");
    return weighted_tuple_sum(summation_lhs_spec(dp, nm), nm);
}

cplx discrete_summation_rhs(const DiscreteParams& dp, const Nome& nm) {
    if (dp.kind != DiscreteKind::summation)
        throw domain_error("discrete_summation_rhs: wrong parameter kind");
    const long n = dp.n, N = dp.N;
    const cplx aq = dp.a * nm.q;
    // q-exponent n(n-1)(6N+5-4n)/6, an integer for all n, N; evaluated in
    // integer arithmetic so no branch choices arise.
    const long long e6 = static_cast<long long>(n) * (n - 1) * (6 * N + 5 - 4 * n);
    cplx acc = pow_int(dp.b, n * (N + 1 - n)) * pow_int(nm.q, e6 / 6);
    acc *= pow_int(shifted_factorial(aq, N, nm), n);
    const std::array<cplx, 6> jn{nm.q, dp.b, dp.c, dp.d, dp.e, pow_int(nm.q, -N)};
    const std::array<cplx, 4> jdens{aq / dp.b, aq / dp.c, aq / dp.d, aq / dp.e};
    for (long j = 1; j <= n; ++j) {
        acc *= shifted_factorial(jn, j - 1, nm);
        const cplx aq2j = dp.a * pow_int(nm.q, 2 - j);
        const std::array<cplx, 3> block{aq2j / (dp.b * dp.c), aq2j / (dp.b * dp.d),
                                        aq2j / (dp.b * dp.e)};
        acc *= shifted_factorial(block, N + 1 - n, nm);
        acc /= shifted_factorial(jdens, N + 1 - j, nm);
    }
    return acc;
}

ComplexMatrix discrete_moment_matrix(const DiscreteParams& dp, const Nome& nm) {
    if (dp.kind != DiscreteKind::transformation)
        throw domain_error("discrete_moment_matrix: wrong parameter kind");
    const long n = dp.n, N = dp.N;
    SumSpec s = transformation_lhs_spec(dp, nm);
    s.xmul = 2 * n - 1;
    const std::vector<cplx> w = point_weights(s, nm);

    // row factors A_j(x) and column factors B_k(x), normalized at x = 0
    auto pair_block = [&](cplx u, long count, long x) {
        const cplx qx = pow_int(nm.q, x);
        return shifted_factorial(u * qx, count, nm) *
               shifted_factorial(u / (qx * dp.a), count, nm) /
               (shifted_factorial(u, count, nm) * shifted_factorial(u / dp.a, count, nm));
    };
    ComplexMatrix m(n);
    std::vector<cplx> terms(N + 1);
    for (long j = 1; j <= n; ++j)
        for (long k = 1; k <= n; ++k) {
            for (long x = 0; x <= N; ++x) {
                cplx t = w[x];
                t *= pair_block(dp.b, j - 1, x) * pair_block(dp.c, n - j, x);
                t *= pair_block(dp.e, k - 1, x) * pair_block(dp.f, n - k, x);
                terms[x] = t;
            }
            m(j - 1, k - 1) = pairwise_sum(terms);
        }
    return m;
}

cplx discrete_moment_prefactor(const DiscreteParams& dp, const Nome& nm) {
    if (dp.kind != DiscreteKind::transformation)
        throw domain_error("discrete_moment_prefactor: wrong parameter kind");
    const long n = dp.n;
    cplx acc = pow_int(dp.c * dp.f / (dp.a * dp.a), binom2(n)) *
               pow_int(nm.q, 2 * binom3(n));
    const std::array<cplx, 8> dens{dp.b, dp.b / dp.a, dp.c, dp.c / dp.a,
                                   dp.e, dp.e / dp.a, dp.f, dp.f / dp.a};
    for (long j = 1; j <= n; ++j) {
        const std::array<cplx, 4> nums{
            pow_int(nm.q, j - n) * dp.b / dp.c, pow_int(nm.q, n - j) * dp.b * dp.c / dp.a,
            pow_int(nm.q, j - n) * dp.e / dp.f, pow_int(nm.q, n - j) * dp.e * dp.f / dp.a};
        acc *= shifted_factorial(nums, j - 1, nm) / shifted_factorial(dens, j - 1, nm);
    }
    return acc;
}

DiscreteMeasure discrete_moment_measure(const DiscreteParams& dp, const Nome& nm) {
    SumSpec s = transformation_lhs_spec(dp, nm);
    s.xmul = 2 * dp.n - 1;
    std::vector<cplx> w = point_weights(s, nm);
    std::vector<cplx> pts(dp.N + 1);
    for (long x = 0; x <= dp.N; ++x) pts[x] = cplx(static_cast<double>(x), 0.0);
    return DiscreteMeasure(std::move(pts), std::move(w));
}

namespace {

std::vector<ScalarFn> moment_handles(const DiscreteParams& dp, const Nome& nm, cplx u1,
                                     cplx u2) {
    // handle j reads the grid label x from the real part and returns the
    // normalized (u1, u2) factor pair for that row/column index
    const long n = dp.n, N = dp.N;
    auto table = std::make_shared<std::vector<cplx>>(n * (N + 1));
    for (long j = 1; j <= n; ++j)
        for (long x = 0; x <= N; ++x) {
            const cplx qx = pow_int(nm.q, x);
            cplx v = shifted_factorial(u1 * qx, j - 1, nm) *
                     shifted_factorial(u1 / (qx * dp.a), j - 1, nm) /
                     (shifted_factorial(u1, j - 1, nm) *
                      shifted_factorial(u1 / dp.a, j - 1, nm));
            v *= shifted_factorial(u2 * qx, n - j, nm) *
                 shifted_factorial(u2 / (qx * dp.a), n - j, nm) /
                 (shifted_factorial(u2, n - j, nm) *
                  shifted_factorial(u2 / dp.a, n - j, nm));
            (*table)[(j - 1) * (N + 1) + x] = v;
        }
    std::vector<ScalarFn> fns;
    for (long j = 0; j < n; ++j)
        fns.push_back([table, j, N](cplx xz) {
            long x = std::lround(xz.real());
            return (*table)[j * (N + 1) + x];
        });
    return fns;
}

}  // namespace

std::vector<ScalarFn> discrete_moment_row_functions(const DiscreteParams& dp, const Nome& nm) {
    return moment_handles(dp, nm, dp.b, dp.c);
}

std::vector<ScalarFn> discrete_moment_column_functions(const DiscreteParams& dp,
                                                       const Nome& nm) {
    return moment_handles(dp, nm, dp.e, dp.f);
}

namespace {

constexpr int kSampleRetries = 500;

template <typename DrawFn>
DiscreteParams sample_loop(std::uint64_t seed, long n, long N, DrawFn draw,
                           const char* what) {
    require_shape(N, n);
    Rng rng(seed);
    for (int attempt = 0; attempt < kSampleRetries; ++attempt) {
        try {
            DiscreteParams dp = draw(rng);
            if (std::abs(dp.kind == DiscreteKind::summation ? dp.e : dp.g) > 3.0)
                continue;
            if (dp.kind == DiscreteKind::transformation) {
                double al = std::abs(dp.lambda);
                if (al < 1e-3 || al > 1e3) continue;
            }
            return dp;
        } catch (const instance_error&) {
            continue;
        }
    }
    std::ostringstream os;
    os << "sample_discrete_params: retry budget exhausted for " << what << " (n=" << n
       << ", N=" << N << ", seed=" << seed << ")";
    throw sampling_error(os.str());
}

}  // namespace

DiscreteParams sample_discrete_params(std::uint64_t seed, long n, long N, DiscreteKind kind,
                                      const Nome& nm) {
    if (kind == DiscreteKind::transformation) {
        return sample_loop(
            seed, n, N,
            [&](Rng& rng) {
                cplx a = rng.polar_draw(0.3, 0.8);
                cplx b = rng.polar_draw(0.3, 0.8);
                cplx c = rng.polar_draw(0.3, 0.8);
                cplx d = rng.polar_draw(0.3, 0.8);
                cplx e = rng.polar_draw(0.3, 0.8);
                cplx f = rng.polar_draw(0.3, 0.8);
                return DiscreteParams::transformation(a, b, c, d, e, f, N, n, nm);
            },
            "transformation");
    }
    return sample_loop(
        seed, n, N,
        [&](Rng& rng) {
            cplx a = rng.polar_draw(0.3, 0.8);
            cplx b = rng.polar_draw(0.3, 0.8);
            cplx c = rng.polar_draw(0.3, 0.8);
            cplx d = rng.polar_draw(0.3, 0.8);
            return DiscreteParams::summation(a, b, c, d, N, n, nm);
        },
        "summation");
}

DiscreteParams sample_discrete_degenerate(std::uint64_t seed, long n, long N, const Nome& nm) {
    return sample_loop(
        seed, n, N,
        [&](Rng& rng) {
            cplx a = rng.polar_draw(0.3, 0.8);
            cplx b = rng.polar_draw(0.3, 0.8);
            cplx c = rng.polar_draw(0.3, 0.8);
            cplx e = rng.polar_draw(0.3, 0.8);
            cplx f = rng.polar_draw(0.3, 0.8);
            return DiscreteParams::transformation_degenerate(a, b, c, e, f, N, n, nm);
        },
        "degenerate transformation");
}

}  // namespace selberg
