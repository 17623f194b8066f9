#ifndef SELBERG_DISCRETE_HPP
#define SELBERG_DISCRETE_HPP

#include <cstdint>

#include "selberg/detkit.hpp"

namespace selberg {

enum class DiscreteKind {
    transformation,  // seven parameters, bcdefg = q^{4+N-2n} a^3
    summation,       // five parameters,  bcde   = q^{N+3-2n} a^2
};

// Parameters of the finite-sum identities. Balancing is enforced by
// solving the last parameter exactly in the factory functions; lambda is
// derived. Construction guards every theta factor that can appear in a
// denominator over the summation range (magnitude >= 1e-10), throwing
// instance_error otherwise.
struct DiscreteParams {
    DiscreteKind kind;
    cplx a, b, c, d, e;
    cplx f, g;    // transformation only
    cplx lambda;  // transformation only
    long N = 0;   // summation range 0..N
    long n = 1;   // number of summation variables, n <= N+1

    static DiscreteParams transformation(cplx a, cplx b, cplx c, cplx d, cplx e, cplx f,
                                         long N, long n, const Nome& nm);
    static DiscreteParams summation(cplx a, cplx b, cplx c, cplx d, long N, long n,
                                    const Nome& nm);
    // aq = cd instance: d is derived, g solved from balancing.
    static DiscreteParams transformation_degenerate(cplx a, cplx b, cplx c, cplx e, cplx f,
                                                    long N, long n, const Nome& nm);
};

// max |balancing defect| of the constructed parameter set (tests).
double discrete_balance_residual(const DiscreteParams& dp, const Nome& nm);

// Both sides of the transformation between two n-fold sums.
cplx discrete_transformation_lhs(const DiscreteParams& dp, const Nome& nm);
cplx discrete_transformation_rhs(const DiscreteParams& dp, const Nome& nm);

// The rhs with its sum restricted to the single tuple (0, ..., n-1); for
// aq = cd instances the full sum collapses to exactly this value.
cplx discrete_transformation_rhs_minimal(const DiscreteParams& dp, const Nome& nm);

// Both sides of the closed-form summation.
cplx discrete_summation_lhs(const DiscreteParams& dp, const Nome& nm);
cplx discrete_summation_rhs(const DiscreteParams& dp, const Nome& nm);

// Conditioning diagnostic: the lhs with its tuple stream reduced in
// reverse lexicographic order.
cplx discrete_transformation_lhs_reverse_order(const DiscreteParams& dp, const Nome& nm);

// The n x n moment matrix of the determinantal proof: entry (j,k) is the
// one-variable sum with parameter shifts (b,c,e,f) ->
// (b q^{j-1}, c q^{n-j}, e q^{k-1}, f q^{n-k}), normalized by the x = 0
// column values.
ComplexMatrix discrete_moment_matrix(const DiscreteParams& dp, const Nome& nm);

// Prefactor linking the moment determinant to the transformation:
// det = prefactor * lhs = prefactor * rhs.
cplx discrete_moment_prefactor(const DiscreteParams& dp, const Nome& nm);

// The same moment matrix split as moment data for the Andreief/Cauchy-
// Binet cross-check: measure on the integer grid 0..N plus row/column
// handles (handles read the grid label from the real part).
DiscreteMeasure discrete_moment_measure(const DiscreteParams& dp, const Nome& nm);
std::vector<ScalarFn> discrete_moment_row_functions(const DiscreteParams& dp, const Nome& nm);
std::vector<ScalarFn> discrete_moment_column_functions(const DiscreteParams& dp,
                                                       const Nome& nm);

// Random balanced parameter sets: free moduli uniform in [0.3, 0.8] with
// uniform phases, last parameter solved, rejected and redrawn while the
// solved parameter exceeds modulus 3, lambda leaves [1e-3, 1e3]
// (transformation), or a guarded denominator factor is below 1e-10.
DiscreteParams sample_discrete_params(std::uint64_t seed, long n, long N, DiscreteKind kind,
                                      const Nome& nm);
DiscreteParams sample_discrete_degenerate(std::uint64_t seed, long n, long N, const Nome& nm);

}  // namespace selberg

#endif
