#include "selberg/continuous.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "selberg/rng.hpp"

namespace selberg {

namespace {

double factorial_d(int n) {
    double acc = 1.0;
    for (int i = 2; i <= n; ++i) acc *= i;
    return acc;
}

// prod_w Gamma(w z^±) / Gamma(z^{±2}) at one node, assembled from factors.
cplx node_weight(cplx z, std::span<const cplx> ws, const Nome& nm) {
    GammaFactors gf;
    for (cplx w : ws) append_gamma_pm(gf, w, z, false, nm);
    append_gamma_pm2(gf, z, true, nm);
    return assemble(gf);
}

cplx integer_node(int k, int nodes) {
    // k = 0 yields exactly 1.0 so the reciprocal cross factor's zero is exact
    double ang = 2.0 * std::numbers::pi * k / nodes;
    return cplx(std::cos(ang), std::sin(ang));
}

// X[k] = Gamma(t u^±) / Gamma(u^±) at u = exp(2 pi i k / M). Node products
// z_j z_k and z_j / z_k land exactly on this integer grid; X[0] = 0 is the
// removable zero of the reciprocal cross factor at z_j = z_k^{±1}.
std::vector<cplx> cross_table(cplx t, int M, const Nome& nm) {
    std::vector<cplx> x(M);
    for (int k = 0; k < M; ++k) {
        cplx u = integer_node(k, M);
        GammaFactors gf;
        append_gamma_factors(gf, t * u, false, nm);
        append_gamma_factors(gf, t / u, false, nm);
        append_gamma_factors(gf, u, true, nm);
        append_gamma_factors(gf, cplx(1.0) / u, true, nm);
        x[k] = assemble(gf);
    }
    return x;
}

// One level of the n-dimensional contour integral
//   ∳...∳ prod_{j<k} Gamma(t z_j^± z_k^±)/Gamma(z_j^± z_k^±)
//        prod_j prod_w Gamma(w z_j^±)/Gamma(z_j^{±2}) dz_j/(2 pi i z_j)
// on the half-offset M^n tensor grid.
cplx level_value(int M, int n, cplx t_cross, std::span<const cplx> ws, const Nome& nm) {
    std::vector<cplx> w_table(M);
    for (int m = 0; m < M; ++m) w_table[m] = node_weight(torus_node(m, M), ws, nm);

    if (n == 1) {
        cplx s = pairwise_sum(w_table);
        return s / static_cast<double>(M);
    }

    const std::vector<cplx> x_table = cross_table(t_cross, M, nm);
    double total_d = std::pow(static_cast<double>(M), n);
    if (total_d > 4e6) throw domain_error("level_value: grid too large");
    std::vector<cplx> terms(static_cast<std::size_t>(total_d));

    std::vector<int> idx(n, 0);
    std::size_t pos = 0;
    for (;;) {
        cplx term(1.0);
        for (int j = 0; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                int s = idx[j] + idx[k] + 1;
                if (s >= M) s -= M;
                int d = idx[j] - idx[k];
                if (d < 0) d += M;
                term *= x_table[s] * x_table[d];
            }
            term *= w_table[idx[j]];
        }
        terms[pos++] = term;
        int dpos = n - 1;
        while (dpos >= 0 && ++idx[dpos] == M) idx[dpos--] = 0;
        if (dpos < 0) break;
    }
    return pairwise_sum(terms) / total_d;
}

cplx adaptive_weight_integral(int n, cplx t_cross, std::span<const cplx> ws, const Nome& nm,
                              const QuadOptions& opts) {
    std::vector<cplx> ws_copy(ws.begin(), ws.end());
    auto level = [&, ws_copy](int m) { return level_value(m, n, t_cross, ws_copy, nm); };
    return integrate_adaptive(level, opts.tol_for(n), opts.m_start, opts.cap_for(n)).value;
}

cplx beta_rhs_product(std::span<const cplx> ws, const Nome& nm) {
    cplx acc(1.0);
    for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = i + 1; j < ws.size(); ++j)
            acc *= elliptic_gamma(ws[i] * ws[j], nm);
    return acc;
}

void require_kind(const ContinuousParams& cp, ContinuousKind kind, const char* what) {
    if (cp.kind != kind) throw domain_error(std::string(what) + ": wrong parameter kind");
}

void require_unit_disc(std::span<const cplx> vals, const char* what) {
    for (cplx v : vals) {
        if (!is_finite(v) || v == cplx(0.0))
            throw domain_error(std::string(what) + ": parameters must be finite and nonzero");
        if (std::abs(v) >= 1.0)
            throw domain_error(std::string(what) + ": contour requires parameter moduli < 1");
    }
}

std::vector<cplx> per_dim_params(const ContinuousParams& cp) {
    std::vector<cplx> ws = cp.ts;
    ws.insert(ws.end(), cp.us.begin(), cp.us.end());
    return ws;
}

}  // namespace

ContinuousParams ContinuousParams::selberg(cplx t, std::array<cplx, 5> free_ts, int n,
                                           const Nome& nm) {
    cplx t6 = nm.p * nm.q / pow_int(t, 2 * n - 2);
    for (cplx u : free_ts) t6 /= u;
    std::array<cplx, 6> all{free_ts[0], free_ts[1], free_ts[2], free_ts[3], free_ts[4], t6};
    return selberg_raw(t, all, n, nm);
}

ContinuousParams ContinuousParams::selberg_raw(cplx t, std::array<cplx, 6> ts, int n,
                                               const Nome& nm) {
    if (n < 1) throw domain_error("ContinuousParams: n must be >= 1");
    require_unit_disc(std::array<cplx, 1>{t}, "selberg params (t)");
    require_unit_disc(ts, "selberg params");
    ContinuousParams cp;
    cp.kind = ContinuousKind::selberg;
    cp.t = t;
    cp.ts.assign(ts.begin(), ts.end());
    cp.n = n;
    if (continuous_balance_residual(cp, nm) > 1e-12)
        throw domain_error("selberg_raw: parameters violate the balancing condition");
    return cp;
}

ContinuousParams ContinuousParams::transformation(cplx t, std::array<cplx, 4> ts,
                                                  std::array<cplx, 3> free_us, int n,
                                                  const Nome& nm) {
    if (n < 1) throw domain_error("ContinuousParams: n must be >= 1");
    const cplx pq = nm.p * nm.q;
    cplx big_t = ts[0] * ts[1] * ts[2] * ts[3];
    cplx u4 = pq * pq / (pow_int(t, 2 * n - 2) * big_t * free_us[0] * free_us[1] * free_us[2]);
    cplx v = std::sqrt(pq / (pow_int(t, n - 1) * big_t));

    ContinuousParams cp;
    cp.kind = ContinuousKind::transformation;
    cp.t = t;
    cp.ts.assign(ts.begin(), ts.end());
    cp.us = {free_us[0], free_us[1], free_us[2], u4};
    cp.v = v;
    cp.n = n;
    require_unit_disc(std::array<cplx, 1>{t}, "transformation params (t)");
    require_unit_disc(cp.ts, "transformation params (t_k)");
    require_unit_disc(cp.us, "transformation params (u_k)");
    std::vector<cplx> shifted;
    for (cplx tk : cp.ts) shifted.push_back(tk * v);
    for (cplx uk : cp.us) shifted.push_back(uk / v);
    require_unit_disc(shifted, "transformation params (t_k v, u_k / v)");
    return cp;
}

ContinuousParams ContinuousParams::with_negated_v() const {
    if (kind != ContinuousKind::transformation)
        throw domain_error("with_negated_v: transformation parameters expected");
    ContinuousParams cp = *this;
    cp.v = -cp.v;
    return cp;
}

double continuous_balance_residual(const ContinuousParams& cp, const Nome& nm) {
    const cplx pq = nm.p * nm.q;
    if (cp.kind == ContinuousKind::selberg) {
        cplx prod = pow_int(cp.t, 2 * cp.n - 2);
        for (cplx u : cp.ts) prod *= u;
        return rel_residual(prod, pq);
    }
    cplx big_t = cp.ts[0] * cp.ts[1] * cp.ts[2] * cp.ts[3];
    cplx big_u = cp.us[0] * cp.us[1] * cp.us[2] * cp.us[3];
    cplx v2 = cp.v * cp.v;
    double r1 = rel_residual(v2, pq / (pow_int(cp.t, cp.n - 1) * big_t));
    double r2 = rel_residual(v2, pow_int(cp.t, cp.n - 1) * big_u / pq);
    return std::max(r1, r2);
}

cplx continuous_integrand(const ContinuousParams& cp, std::span<const cplx> zs,
                          const Nome& nm) {
    if (static_cast<int>(zs.size()) != cp.n)
        throw domain_error("continuous_integrand: wrong number of variables");
    const std::vector<cplx> ws = per_dim_params(cp);
    GammaFactors gf;
    for (int j = 0; j < cp.n; ++j)
        for (int k = j + 1; k < cp.n; ++k) {
            append_gamma_pm_pm(gf, cp.t, zs[j], zs[k], false, nm);
            append_gamma_pm_pm(gf, cplx(1.0), zs[j], zs[k], true, nm);
        }
    for (int j = 0; j < cp.n; ++j) {
        for (cplx w : ws) append_gamma_pm(gf, w, zs[j], false, nm);
        append_gamma_pm2(gf, zs[j], true, nm);
    }
    return assemble(gf);
}

cplx beta_integral_lhs(const ContinuousParams& cp, const Nome& nm, QuadOptions opts) {
    require_kind(cp, ContinuousKind::selberg, "beta_integral_lhs");
    if (cp.n != 1) throw domain_error("beta_integral_lhs: n = 1 required");
    cplx integral = adaptive_weight_integral(1, cp.t, cp.ts, nm, opts);
    return dedekind_constant(nm) * 0.5 * integral;
}

cplx beta_integral_rhs(const ContinuousParams& cp, const Nome& nm) {
    require_kind(cp, ContinuousKind::selberg, "beta_integral_rhs");
    if (cp.n != 1) throw domain_error("beta_integral_rhs: n = 1 required");
    return beta_rhs_product(cp.ts, nm);
}

cplx selberg_integral_lhs(const ContinuousParams& cp, const Nome& nm, QuadOptions opts) {
    require_kind(cp, ContinuousKind::selberg, "selberg_integral_lhs");
    cplx integral = adaptive_weight_integral(cp.n, cp.t, cp.ts, nm, opts);
    cplx c = dedekind_constant(nm);
    return pow_int(c / 2.0, cp.n) / factorial_d(cp.n) * integral;
}

cplx selberg_integral_rhs(const ContinuousParams& cp, const Nome& nm) {
    require_kind(cp, ContinuousKind::selberg, "selberg_integral_rhs");
    cplx acc(1.0);
    const cplx gamma_t = elliptic_gamma(cp.t, nm);
    cplx tm = cp.t;        // t^m
    cplx tm1(1.0);         // t^{m-1}
    for (int m = 1; m <= cp.n; ++m) {
        acc *= elliptic_gamma(tm, nm) / gamma_t;
        for (std::size_t i = 0; i < cp.ts.size(); ++i)
            for (std::size_t j = i + 1; j < cp.ts.size(); ++j)
                acc *= elliptic_gamma(tm1 * cp.ts[i] * cp.ts[j], nm);
        tm *= cp.t;
        tm1 *= cp.t;
    }
    return acc;
}

cplx integral_transformation_lhs(const ContinuousParams& cp, const Nome& nm, QuadOptions opts) {
    require_kind(cp, ContinuousKind::transformation, "integral_transformation_lhs");
    const std::vector<cplx> ws = per_dim_params(cp);
    return adaptive_weight_integral(cp.n, cp.t, ws, nm, opts);
}

cplx integral_transformation_rhs(const ContinuousParams& cp, const Nome& nm, QuadOptions opts) {
    require_kind(cp, ContinuousKind::transformation, "integral_transformation_rhs");
    cplx acc(1.0);
    cplx tm1(1.0);
    for (int m = 1; m <= cp.n; ++m) {
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j)
                acc *= elliptic_gamma(tm1 * cp.ts[i] * cp.ts[j], nm) *
                       elliptic_gamma(tm1 * cp.us[i] * cp.us[j], nm);
        tm1 *= cp.t;
    }
    std::vector<cplx> shifted;
    for (cplx tk : cp.ts) shifted.push_back(tk * cp.v);
    for (cplx uk : cp.us) shifted.push_back(uk / cp.v);
    return acc * adaptive_weight_integral(cp.n, cp.t, shifted, nm, opts);
}

namespace {

std::array<cplx, 6> moment_entry_params(const ContinuousParams& cp, long j, long k,
                                        const Nome& nm) {
    const long n = cp.n;
    return {cp.ts[0] * pow_int(nm.q, j - 1), cp.ts[1] * pow_int(nm.q, n - j),
            cp.ts[2] * pow_int(nm.q, k - 1), cp.ts[3] * pow_int(nm.q, n - k),
            cp.ts[4], cp.ts[5]};
}

void require_tq(const ContinuousParams& cp, const Nome& nm, const char* what) {
    require_kind(cp, ContinuousKind::selberg, what);
    if (rel_residual(cp.t, nm.q) > 1e-12)
        throw instance_error(std::string(what) + ": requires t = q parameters");
}

}  // namespace

ComplexMatrix continuous_moment_matrix(const ContinuousParams& cp, const Nome& nm,
                                       MomentEntryMethod method, QuadOptions opts) {
    require_tq(cp, nm, "continuous_moment_matrix");
    ComplexMatrix m(cp.n);
    for (long j = 1; j <= cp.n; ++j)
        for (long k = 1; k <= cp.n; ++k) {
            std::array<cplx, 6> ws = moment_entry_params(cp, j, k, nm);
            if (method == MomentEntryMethod::closed_form) {
                m(j - 1, k - 1) = beta_rhs_product(ws, nm);
            } else {
                cplx integral = adaptive_weight_integral(1, nm.q, ws, nm, opts);
                m(j - 1, k - 1) = dedekind_constant(nm) * 0.5 * integral;
            }
        }
    return m;
}

cplx continuous_moment_prefactor(const ContinuousParams& cp, const Nome& nm) {
    require_tq(cp, nm, "continuous_moment_prefactor");
    const long n = cp.n;
    const cplx t1 = cp.ts[0], t2 = cp.ts[1], t3 = cp.ts[2], t4 = cp.ts[3];
    cplx acc = pow_int(t2 * t4, binom2(n)) * pow_int(nm.q, 2 * binom3(n));
    for (long j = 1; j <= n; ++j) {
        const std::array<cplx, 4> block{
            pow_int(nm.q, j - n) * t1 / t2, pow_int(nm.q, n - j) * t1 * t2,
            pow_int(nm.q, j - n) * t3 / t4, pow_int(nm.q, n - j) * t3 * t4};
        acc *= shifted_factorial(block, j - 1, nm);
    }
    return acc;
}

std::pair<cplx, cplx> determinant_identity_check(const ContinuousParams& cp, const Nome& nm,
                                                 QuadOptions opts) {
    require_tq(cp, nm, "determinant_identity_check");
    ComplexMatrix m = continuous_moment_matrix(cp, nm, MomentEntryMethod::quadrature, opts);
    cplx lhs = det(m);
    cplx rhs = continuous_moment_prefactor(cp, nm) * selberg_integral_lhs(cp, nm, opts);
    return {lhs, rhs};
}

namespace {

constexpr int kContinuousRetries = 5000;

double sampler_modulus_bound(int n) { return n == 1 ? 0.93 : 0.90; }

}  // namespace

ContinuousParams sample_continuous_params(std::uint64_t seed, ContinuousKind kind, int n,
                                          TMode t_mode, const Nome& nm) {
    if (n < 1) throw domain_error("sample_continuous_params: n must be >= 1");
    Rng rng(seed);
    const double hi = sampler_modulus_bound(n);
    const double apq = std::abs(nm.p * nm.q);

    for (int attempt = 0; attempt < kContinuousRetries; ++attempt) {
        try {
            cplx t;
            if (n == 1 || t_mode == TMode::tq)
                t = nm.q;
            else
                t = rng.polar_draw(0.45, 0.60);

            if (kind == ContinuousKind::selberg) {
                const double target = apq / std::pow(std::abs(t), 2 * n - 2);
                const double mstar = std::pow(target, 1.0 / 6.0);
                if (mstar >= hi) {
                    std::ostringstream os;
                    os << "sample_continuous_params: no admissible contour parameters; the "
                          "balancing product requires average modulus "
                       << mstar << " >= " << hi << " (n=" << n << ", |t|=" << std::abs(t)
                       << ", |pq|=" << apq << ")";
                    throw sampling_error(os.str());
                }
                double lo_m = 0.3, hi_m = 0.75;
                if (mstar > 0.70) {
                    lo_m = mstar * std::exp(-0.035);
                    hi_m = std::min(0.92, mstar * std::exp(0.035));
                }
                std::array<cplx, 5> free_ts;
                for (cplx& u : free_ts) u = rng.polar_draw(lo_m, hi_m);
                ContinuousParams cp = ContinuousParams::selberg(t, free_ts, n, nm);
                double at6 = std::abs(cp.ts[5]);
                if (at6 < 0.02 || at6 > hi) continue;
                return cp;
            }

            std::array<cplx, 4> ts;
            for (cplx& u : ts) u = rng.polar_draw(0.3, 0.75);
            std::array<cplx, 3> us;
            for (cplx& u : us) u = rng.polar_draw(0.3, 0.75);
            ContinuousParams cp = ContinuousParams::transformation(t, ts, us, n, nm);
            double au4 = std::abs(cp.us[3]);
            if (au4 < 0.02 || au4 > hi) continue;
            bool ok = true;
            for (cplx tk : cp.ts)
                if (std::abs(tk * cp.v) > hi) ok = false;
            for (cplx uk : cp.us)
                if (std::abs(uk / cp.v) > hi) ok = false;
            if (!ok) continue;
            return cp;
        } catch (const domain_error&) {
            continue;  // solved parameter landed outside the unit disc
        }
    }
    std::ostringstream os;
    os << "sample_continuous_params: retry budget exhausted (kind="
       << (kind == ContinuousKind::selberg ? "selberg" : "transformation") << ", n=" << n
       << ", seed=" << seed << ")";
    throw sampling_error(os.str());
}

}  // namespace selberg
