#include "selberg/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace selberg {

namespace {

std::string describe(cplx z) {
    std::ostringstream os;
    os << "(" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
    return os.str();
}

double reach(cplx z) {
    double az = std::abs(z);
    return std::max(az, 1.0 / az);
}

}  // namespace

Nome::Nome(cplx p_, cplx q_, double cutoff_, int max_terms_)
    : p(p_), q(q_), cutoff(cutoff_), max_terms(max_terms_) {
    if (!is_finite(p) || !is_finite(q) || std::abs(p) >= 1.0 || std::abs(q) >= 1.0)
        throw domain_error("nome requires |p| < 1 and |q| < 1");
    if (!(cutoff > 0.0)) throw domain_error("nome cutoff must be positive");
    if (max_terms < 1) throw domain_error("nome max_terms must be >= 1");
}

cplx theta(cplx z, const Nome& nm) {
    if (!is_finite(z) || z == cplx(0.0)) throw domain_error("theta: z must be finite and nonzero");
    const double zm = reach(z);
    const double ap = std::abs(nm.p);
    cplx acc(1.0);
    cplx pj(1.0);
    for (int j = 0; j < nm.max_terms; ++j) {
        acc *= (cplx(1.0) - pj * z) * (cplx(1.0) - pj * nm.p / z);
        if (std::abs(pj) * ap * zm < nm.cutoff) return acc;
        pj *= nm.p;
    }
    throw truncation_error("theta: did not truncate within max_terms at z=" + describe(z));
}

cplx shifted_factorial(cplx z, long k, const Nome& nm) {
    if (k < 0) throw domain_error("shifted_factorial: negative index");
    if (k == 0) return cplx(1.0);
    if (z == cplx(0.0)) throw domain_error("shifted_factorial: z = 0 with k >= 1");
    cplx acc(1.0);
    cplx zq = z;
    for (long j = 0; j < k; ++j) {
        acc *= theta(zq, nm);
        zq *= nm.q;
    }
    return acc;
}

cplx shifted_factorial(std::span<const cplx> zs, long k, const Nome& nm) {
    cplx acc(1.0);
    for (cplx z : zs) acc *= shifted_factorial(z, k, nm);
    return acc;
}

cplx dedekind_constant(const Nome& nm) {
    cplx acc(1.0);
    for (cplx base : {nm.p, nm.q}) {
        cplx bj = base;
        for (int j = 0; j < nm.max_terms; ++j) {
            if (std::abs(bj) < nm.cutoff) break;
            acc *= cplx(1.0) - bj;
            bj *= base;
        }
    }
    return acc;
}

cplx elliptic_gamma(cplx z, const Nome& nm) {
    if (!is_finite(z) || z == cplx(0.0))
        throw domain_error("elliptic_gamma: z must be finite and nonzero");
    const double zm = reach(z);
    const double ap = std::abs(nm.p);
    const double aq = std::abs(nm.q);
    const cplx pq_over_z = nm.p * nm.q / z;
    cplx acc(1.0);
    int points = 0;
    cplx pj(1.0);
    double apj = 1.0;
    for (;;) {
        if (apj * zm < nm.cutoff) break;
        cplx w_den = pj * z;          // p^j q^k z as k runs
        cplx w_num = pj * pq_over_z;  // p^{j+1} q^{k+1} / z
        double mag = apj * zm;
        while (mag >= nm.cutoff) {
            cplx den = cplx(1.0) - w_den;
            if (std::abs(den) < 1e-12)
                throw near_pole_error("elliptic_gamma: z within guard radius of pole, z=" +
                                      describe(z));
            acc *= (cplx(1.0) - w_num) / den;
            if (++points > nm.max_terms)
                throw truncation_error("elliptic_gamma: lattice exceeds max_terms at z=" +
                                       describe(z));
            w_den *= nm.q;
            w_num *= nm.q;
            mag *= aq;
        }
        pj *= nm.p;
        apj *= ap;
    }
    return acc;
}

double gamma_pole_margin(cplx z, const Nome& nm) {
    const double zm = reach(z);
    const double ap = std::abs(nm.p);
    const double aq = std::abs(nm.q);
    double margin = std::abs(cplx(1.0) - z);
    cplx pj(1.0);
    double apj = 1.0;
    while (apj * zm >= nm.cutoff) {
        cplx w = pj * z;
        double mag = apj * zm;
        while (mag >= nm.cutoff) {
            margin = std::min(margin, std::abs(cplx(1.0) - w));
            w *= nm.q;
            mag *= aq;
        }
        pj *= nm.p;
        apj *= ap;
        if (apj == 0.0) break;
    }
    return margin;
}

void GammaFactors::append(const GammaFactors& other) {
    numerator_factors.insert(numerator_factors.end(), other.numerator_factors.begin(),
                             other.numerator_factors.end());
    denominator_factors.insert(denominator_factors.end(), other.denominator_factors.begin(),
                               other.denominator_factors.end());
}

void append_gamma_factors(GammaFactors& out, cplx z, bool reciprocal, const Nome& nm) {
    if (!is_finite(z) || z == cplx(0.0))
        throw domain_error("gamma_factors: z must be finite and nonzero");
    std::vector<cplx>& num = reciprocal ? out.denominator_factors : out.numerator_factors;
    std::vector<cplx>& den = reciprocal ? out.numerator_factors : out.denominator_factors;
    const double zm = reach(z);
    const double ap = std::abs(nm.p);
    const double aq = std::abs(nm.q);
    const cplx pq_over_z = nm.p * nm.q / z;
    cplx pj(1.0);
    double apj = 1.0;
    while (apj * zm >= nm.cutoff) {
        cplx w_den = pj * z;
        cplx w_num = pj * pq_over_z;
        double mag = apj * zm;
        while (mag >= nm.cutoff) {
            num.push_back(cplx(1.0) - w_num);
            den.push_back(cplx(1.0) - w_den);
            w_den *= nm.q;
            w_num *= nm.q;
            mag *= aq;
        }
        pj *= nm.p;
        apj *= ap;
        if (apj == 0.0) break;
    }
}

GammaFactors gamma_factors(cplx z, bool reciprocal, const Nome& nm) {
    GammaFactors gf;
    append_gamma_factors(gf, z, reciprocal, nm);
    return gf;
}

cplx assemble(const GammaFactors& gf) {
    const auto& num = gf.numerator_factors;
    const auto& den = gf.denominator_factors;
    std::size_t i = 0, j = 0;
    cplx acc(1.0);
    while (i < num.size() || j < den.size()) {
        bool take_num;
        if (i >= num.size())
            take_num = false;
        else if (j >= den.size())
            take_num = true;
        else
            take_num = std::abs(acc) <= 1.0;
        if (take_num) {
            acc *= num[i++];
        } else {
            if (den[j] == cplx(0.0))
                throw domain_error("assemble: division by exactly-zero denominator factor");
            acc /= den[j++];
        }
    }
    return acc;
}

cplx theta_pm(cplx a, cplx z, const Nome& nm) { return theta(a * z, nm) * theta(a / z, nm); }

cplx shifted_factorial_pm(cplx a, cplx z, long k, const Nome& nm) {
    return shifted_factorial(a * z, k, nm) * shifted_factorial(a / z, k, nm);
}

cplx gamma_pm(cplx a, cplx z, const Nome& nm) {
    return elliptic_gamma(a * z, nm) * elliptic_gamma(a / z, nm);
}

cplx gamma_pm2(cplx z, const Nome& nm) {
    cplx z2 = z * z;
    return elliptic_gamma(z2, nm) * elliptic_gamma(cplx(1.0) / z2, nm);
}

cplx gamma_pm_pm(cplx a, cplx z, cplx w, const Nome& nm) {
    return elliptic_gamma(a * z * w, nm) * elliptic_gamma(a * z / w, nm) *
           elliptic_gamma(a * w / z, nm) * elliptic_gamma(a / (z * w), nm);
}

void append_gamma_pm(GammaFactors& out, cplx a, cplx z, bool reciprocal, const Nome& nm) {
    append_gamma_factors(out, a * z, reciprocal, nm);
    append_gamma_factors(out, a / z, reciprocal, nm);
}

void append_gamma_pm2(GammaFactors& out, cplx z, bool reciprocal, const Nome& nm) {
    cplx z2 = z * z;
    append_gamma_factors(out, z2, reciprocal, nm);
    append_gamma_factors(out, cplx(1.0) / z2, reciprocal, nm);
}

void append_gamma_pm_pm(GammaFactors& out, cplx a, cplx z, cplx w, bool reciprocal,
                        const Nome& nm) {
    append_gamma_factors(out, a * z * w, reciprocal, nm);
    append_gamma_factors(out, a * z / w, reciprocal, nm);
    append_gamma_factors(out, a * w / z, reciprocal, nm);
    append_gamma_factors(out, a / (z * w), reciprocal, nm);
}

}  // namespace selberg
