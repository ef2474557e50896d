#ifndef BETTI_SPARSE_HPP
#define BETTI_SPARSE_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "betti/complex.hpp"

namespace betti {

/// Integer sparse matrix in CSR form, rows/cols indexed by the lex order of
/// the simplices of one dimension.
struct SparseOperator {
    int rows = 0;
    int cols = 0;
    int domain_dim = 0; // dimension i of the cochain space the operator acts from
    std::vector<int> row_ptr{0};
    std::vector<int> col_idx;
    std::vector<long long> values;

    static SparseOperator from_triplets(int rows, int cols, int domain_dim,
                                        std::vector<std::tuple<int, int, long long>> triplets);

    std::size_t nnz() const { return values.size(); }
    long long max_abs_entry() const;
    int max_row_nnz() const;
    int max_col_nnz() const;
    bool is_symmetric() const;
    long long entry(int r, int c) const;

    SparseOperator transposed() const;
    Eigen::MatrixXd to_dense() const;
};

/// A * B with exact 64-bit integer accumulation.
SparseOperator multiply(const SparseOperator& A, const SparseOperator& B);
SparseOperator add(const SparseOperator& A, const SparseOperator& B);

/// Matrix of d_q: C^q -> C^{q+1} in the stored orientations; the row for a
/// (q+1)-simplex alternates signs over its omitted vertices in orientation
/// order. q >= dim(K) yields the zero map into an empty space.
SparseOperator coboundary(const SimplicialComplex& K, int q);

/// Delta^i = d_{i-1} d*_{i-1} + d_i* d_i (first term absent for i = 0).
SparseOperator laplacian(const SimplicialComplex& K, int i);

/// 2 L M with L the max nonzeros per row or column and M the max entry
/// magnitude, clamped below at 1 so log K >= 0. Always >= the operator norm.
double norm_bound(const SparseOperator& A);

/// Coordinate-triplet text: header "% rows cols nnz", then "i j value" lines.
std::string to_triplet_text(const SparseOperator& A);

} // namespace betti

#endif
