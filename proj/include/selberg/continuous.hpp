#ifndef SELBERG_CONTINUOUS_HPP
#define SELBERG_CONTINUOUS_HPP

#include <array>
#include <cstdint>
#include <utility>

#include "selberg/detkit.hpp"
#include "selberg/quadrature.hpp"

namespace selberg {

enum class ContinuousKind {
    selberg,         // six parameters t_1..t_6, balancing t^{2n-2} t_1...t_6 = pq
    transformation,  // four t_k and four u_k with v^2 = pq/(t^{n-1} t_1..t_4)
                     //                            = t^{n-1} u_1..u_4 / pq
};

enum class TMode { tq, general };

// Parameters of the n-dimensional contour integrals. Factories solve the
// last parameter from the balancing condition and validate contour
// admissibility (all integrand parameters strictly inside the unit disc).
struct ContinuousParams {
    ContinuousKind kind;
    cplx t;
    std::vector<cplx> ts;  // 6 (selberg) or 4 (transformation)
    std::vector<cplx> us;  // 4 (transformation only)
    cplx v;                // transformation only
    int n = 1;

    static ContinuousParams selberg(cplx t, std::array<cplx, 5> free_ts, int n,
                                    const Nome& nm);
    // all six supplied; balancing checked to 1e-12 instead of solved
    static ContinuousParams selberg_raw(cplx t, std::array<cplx, 6> ts, int n, const Nome& nm);
    static ContinuousParams transformation(cplx t, std::array<cplx, 4> ts,
                                           std::array<cplx, 3> free_us, int n, const Nome& nm);

    // Same parameter set with the other square root of v^2.
    ContinuousParams with_negated_v() const;
};

// max balancing defect (both v^2 equalities for the transformation).
double continuous_balance_residual(const ContinuousParams& cp, const Nome& nm);

// Direct pointwise value of the integrand
//   prod_{j<k} Gamma(t z_j^± z_k^±)/Gamma(z_j^± z_k^±)
//   * prod_j prod_w Gamma(w z_j^±) / Gamma(z_j^{±2})
// where w runs over the per-dimension parameter list of the variant
// (t_1..t_6, or t_1..t_4 and u_1..u_4). Assembled from factor lists, so
// the removable zeros at z_j = z_k^{±1} evaluate to exact zeros.
cplx continuous_integrand(const ContinuousParams& cp, std::span<const cplx> zs, const Nome& nm);

// n = 1 elliptic beta integral: lhs = (C/2) * contour integral,
// rhs = prod_{j<k} Gamma(t_j t_k).
cplx beta_integral_lhs(const ContinuousParams& cp, const Nome& nm, QuadOptions opts = {});
cplx beta_integral_rhs(const ContinuousParams& cp, const Nome& nm);

// n-dimensional evaluation: lhs = (C^n / 2^n n!) * contour integral,
// rhs = prod_{m=1}^n [Gamma(t^m)/Gamma(t) * prod_{j<k} Gamma(t^{m-1} t_j t_k)].
cplx selberg_integral_lhs(const ContinuousParams& cp, const Nome& nm, QuadOptions opts = {});
cplx selberg_integral_rhs(const ContinuousParams& cp, const Nome& nm);

// Integral transformation: bare contour integrals (no constant factor);
// rhs = prod_{m=1}^n prod_{j<k} Gamma(t^{m-1} t_j t_k) Gamma(t^{m-1} u_j u_k)
//       * the same integral with parameters t_k v and u_k / v.
cplx integral_transformation_lhs(const ContinuousParams& cp, const Nome& nm,
                                 QuadOptions opts = {});
cplx integral_transformation_rhs(const ContinuousParams& cp, const Nome& nm,
                                 QuadOptions opts = {});

// The n x n moment matrix of the determinantal proof at t = q: entry
// (j,k) is the one-dimensional integral with
// (t_1, t_2, t_3, t_4) -> (t_1 q^{j-1}, t_2 q^{n-j}, t_3 q^{k-1}, t_4 q^{n-k}),
// computed either by quadrature or from the closed beta-integral product.
enum class MomentEntryMethod { quadrature, closed_form };
ComplexMatrix continuous_moment_matrix(const ContinuousParams& cp, const Nome& nm,
                                       MomentEntryMethod method, QuadOptions opts = {});

// (t_2 t_4)^C(n,2) q^{2 C(n,3)} prod_j (q^{j-n} t_1/t_2, q^{n-j} t_1 t_2,
//                                       q^{j-n} t_3/t_4, q^{n-j} t_3 t_4)_{j-1}
cplx continuous_moment_prefactor(const ContinuousParams& cp, const Nome& nm);

// Determinantal identity at t = q: returns
// (det of the quadrature moment matrix, prefactor * selberg_integral_lhs).
std::pair<cplx, cplx> determinant_identity_check(const ContinuousParams& cp, const Nome& nm,
                                                 QuadOptions opts = {});

// Random admissible parameter sets; deterministic in seed. Free moduli
// are drawn uniformly in [0.3, 0.75] when that window can reach the
// balancing target, otherwise in a narrow log-window around the feasible
// modulus scale; solved parameters are re-drawn until every integrand
// parameter stays within modulus 0.93 (n = 1) / 0.90 (n >= 2) so the
// adaptive quadrature converges within its caps.
ContinuousParams sample_continuous_params(std::uint64_t seed, ContinuousKind kind, int n,
                                          TMode t_mode, const Nome& nm);

}  // namespace selberg

#endif
