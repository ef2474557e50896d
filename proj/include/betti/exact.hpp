#ifndef BETTI_EXACT_HPP
#define BETTI_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "betti/sparse.hpp"

namespace betti {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Rank over the rationals by fraction-free sparse elimination. Rows are
/// gcd-reduced after each update, so entries stay small on incidence-like
/// matrices.
int exact_rank(const SparseOperator& A);

/// Integer basis of the right kernel of a square or rectangular A, one
/// gcd-reduced column vector per basis element.
std::vector<std::vector<BigInt>> integer_kernel_basis(const SparseOperator& A);

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> M);

/// |product of the non-zero eigenvalues| of a symmetric integer matrix; the
/// magnitude of the lowest non-vanishing coefficient of its characteristic
/// polynomial. 1 for the zero matrix (empty product). Throws too_large above
/// size_cap.
BigInt pseudo_determinant(const SparseOperator& A, long long size_cap = 2000);

/// Real Betti numbers b^0..b^dim via exact coboundary ranks:
/// b^i = |K_i| - rank(d_i) - rank(d_{i-1}).
std::vector<long long> betti_exact(const SimplicialComplex& K);

} // namespace betti

#endif
