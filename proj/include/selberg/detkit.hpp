#ifndef SELBERG_DETKIT_HPP
#define SELBERG_DETKIT_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "selberg/core.hpp"
#include "selberg/numeric.hpp"

namespace selberg {

// Dense square complex matrix, row-major.
class ComplexMatrix {
  public:
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, cplx(0.0)) {
        if (dim == 0) throw domain_error("ComplexMatrix: dimension must be >= 1");
    }

    std::size_t dim() const { return dim_; }
    cplx& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
    cplx operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }

  private:
    std::size_t dim_;
    std::vector<cplx> a_;
};

// Determinant by elimination with partial pivoting on |.|; exact for
// permutation matrices (pure row swaps, unit pivots).
cplx det(ComplexMatrix m);

// A linear functional f -> sum_x f(x) w(x) in discrete form.
struct DiscreteMeasure {
    std::vector<cplx> points;
    std::vector<cplx> weights;

    DiscreteMeasure(std::vector<cplx> pts, std::vector<cplx> wts);
};

using ScalarFn = std::function<cplx(cplx)>;

// The two sides of the Andreief identity for a discrete measure:
// lhs = det of the moment matrix [sum_x f_j(x) g_k(x) w(x)];
// rhs = Cauchy-Binet sum over strictly increasing point tuples of
//       det[f_j(x_k)] det[g_j(x_k)] prod w(x_k)
// (equal to the symmetrized all-tuples form divided by n!).
cplx andreief_lhs(std::span<const ScalarFn> fs, std::span<const ScalarFn> gs,
                  const DiscreteMeasure& mu);
cplx andreief_rhs(std::span<const ScalarFn> fs, std::span<const ScalarFn> gs,
                  const DiscreteMeasure& mu);

// Strictly increasing integer tuples 0 <= x_1 < ... < x_n <= N in
// lexicographic order. Empty when n > N+1.
void for_each_increasing_tuple(long n, long N,
                               const std::function<void(std::span<const long>)>& fn);
std::vector<std::vector<long>> enumerate_tuples(long n, long N);
std::uint64_t tuple_count(long n, long N);

// Warnaar's determinant: det over 1 <= j,k <= n of
// (a z_k^±)_{j-1} (b z_k^±)_{n-j}, computed as a numeric determinant.
cplx warnaar_det_direct(cplx a, cplx b, std::span<const cplx> zs, const Nome& nm);

// Its closed-form evaluation:
// b^C(n,2) q^C(n,3) prod_j (q^{j-n} a/b, q^{n-j} ab)_{j-1}
//   prod_{j<k} z_k^{-1} theta(z_k z_j^±).
cplx warnaar_det_closed(cplx a, cplx b, std::span<const cplx> zs, const Nome& nm);

}  // namespace selberg

#endif
