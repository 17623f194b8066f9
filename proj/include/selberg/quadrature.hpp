#ifndef SELBERG_QUADRATURE_HPP
#define SELBERG_QUADRATURE_HPP

#include <functional>

#include "selberg/numeric.hpp"

namespace selberg {

// Tensor grid on the unit torus with half-offset nodes
// z = exp(2 pi i (m + 1/2) / M), m = 0..M-1 per dimension. The offset
// keeps z = ±1 (and their powers on even M) off the grid.
struct QuadGrid {
    int dims;
    int nodes_per_dim;

    QuadGrid(int dims_, int nodes_per_dim_);
};

cplx torus_node(int m, int nodes);

// M^{-n} sum of f over the grid: the trapezoid rule for
// ∳ ... ∳ f(z) dz_1/(2 pi i z_1) ... dz_n/(2 pi i z_n),
// exact for Laurent degrees below M in each variable. Terms are reduced
// with a fixed-shape pairwise tree, so values are bit-stable.
cplx torus_integrate(const std::function<cplx(cplx)>& f, int nodes);
cplx torus_integrate(const std::function<cplx(std::span<const cplx>)>& f, const QuadGrid& grid);

// Adaptive-evaluation knobs. Zeros mean "per-dimension default": caps
// 1024 / 256 / 64 nodes per dimension for 1 / 2 / >=3 dimensions, and an
// error-estimate tolerance matched to those caps (1e-10 / 1e-7 / 1e-5).
struct QuadOptions {
    double tol = 0.0;
    int m_start = 16;
    int m_cap_1d = 0;
    int m_cap_2d = 0;
    int m_cap_3d = 0;

    int cap_for(int dims) const;
    double tol_for(int dims) const;
};

struct QuadResult {
    cplx value;
    int nodes_used;
    double last_delta;  // |I_M - I_{M/2}|
};

// Doubles the per-dimension node count until two successive estimates
// agree to tol (relative) or the cap is reached; throws quadrature_error
// with both estimates attached on non-convergence.
QuadResult integrate_adaptive(const std::function<cplx(int)>& level_value, double tol,
                              int m_start, int m_cap);

}  // namespace selberg

#endif
