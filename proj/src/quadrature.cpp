#include "selberg/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "selberg/errors.hpp"

namespace selberg {

QuadGrid::QuadGrid(int dims_, int nodes_per_dim_) : dims(dims_), nodes_per_dim(nodes_per_dim_) {
    if (dims < 1) throw domain_error("QuadGrid: dims must be >= 1");
    if (nodes_per_dim < 8) throw domain_error("QuadGrid: need at least 8 nodes per dimension");
}

cplx torus_node(int m, int nodes) {
    double ang = 2.0 * std::numbers::pi * (m + 0.5) / nodes;
    return cplx(std::cos(ang), std::sin(ang));
}

cplx torus_integrate(const std::function<cplx(cplx)>& f, int nodes) {
    std::vector<cplx> terms(nodes);
    for (int m = 0; m < nodes; ++m) terms[m] = f(torus_node(m, nodes));
    return pairwise_sum(terms) / static_cast<double>(nodes);
}

cplx torus_integrate(const std::function<cplx(std::span<const cplx>)>& f,
                     const QuadGrid& grid) {
    const int n = grid.dims;
    const int M = grid.nodes_per_dim;
    std::vector<cplx> node(M);
    for (int m = 0; m < M; ++m) node[m] = torus_node(m, M);

    double total_d = std::pow(static_cast<double>(M), n);
    if (total_d > 1e9) throw domain_error("torus_integrate: grid too large");
    std::size_t total = static_cast<std::size_t>(total_d);

    std::vector<cplx> terms(total);
    std::vector<int> idx(n, 0);
    std::vector<cplx> zs(n, node[0]);
    for (std::size_t t = 0;; ++t) {
        terms[t] = f(zs);
        int d = n - 1;
        while (d >= 0) {
            if (++idx[d] < M) {
                zs[d] = node[idx[d]];
                break;
            }
            idx[d] = 0;
            zs[d] = node[0];
            --d;
        }
        if (d < 0) break;
    }
    return pairwise_sum(terms) / total_d;
}

int QuadOptions::cap_for(int dims) const {
    if (dims <= 1) return m_cap_1d > 0 ? m_cap_1d : 1024;
    if (dims == 2) return m_cap_2d > 0 ? m_cap_2d : 256;
    return m_cap_3d > 0 ? m_cap_3d : 64;
}

double QuadOptions::tol_for(int dims) const {
    if (tol > 0.0) return tol;
    if (dims <= 1) return 1e-10;
    if (dims == 2) return 1e-7;
    return 1e-5;
}

QuadResult integrate_adaptive(const std::function<cplx(int)>& level_value, double tol,
                              int m_start, int m_cap) {
    if (!(tol > 0.0) || m_start < 8 || m_cap < m_start)
        throw domain_error("integrate_adaptive: invalid options");
    int m = m_start;
    cplx before_last = level_value(m);
    cplx last = before_last;
    double delta_prev = -1.0;
    while (2 * m <= m_cap) {
        m *= 2;
        before_last = last;
        last = level_value(m);
        double delta = std::abs(last - before_last);
        double scale = std::max(std::abs(last), std::abs(before_last));
        // Geometric decay makes |I - I_M| ~ delta * (delta / delta_prev);
        // the raw delta alone is far too pessimistic when the integral is
        // small against the integrand's magnitude.
        double est = delta_prev > 0.0 ? delta * std::min(1.0, delta / delta_prev) : delta;
        if (est <= tol * scale || delta <= 1e-15)
            return QuadResult{last, m, delta};
        delta_prev = delta;
    }
    std::ostringstream os;
    os << "integrate_adaptive: no convergence to tol " << tol << " at cap M=" << m_cap
       << " (last delta " << std::abs(last - before_last) << ")";
    throw quadrature_error(os.str(), before_last, last);
}

}  // namespace selberg
