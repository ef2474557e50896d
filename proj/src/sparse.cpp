#include "betti/sparse.hpp"

#include <algorithm>
#include <sstream>

namespace betti {

SparseOperator SparseOperator::from_triplets(int rows, int cols, int domain_dim,
                                             std::vector<std::tuple<int, int, long long>> t) {
    std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) {
        return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
    });
    SparseOperator A;
    A.rows = rows;
    A.cols = cols;
    A.domain_dim = domain_dim;
    A.row_ptr.assign(rows + 1, 0);
    std::size_t k = 0;
    for (int r = 0; r < rows; ++r) {
        while (k < t.size() && std::get<0>(t[k]) == r) {
            int c = std::get<1>(t[k]);
            long long v = std::get<2>(t[k]);
            while (k + 1 < t.size() && std::get<0>(t[k + 1]) == r && std::get<1>(t[k + 1]) == c) {
                ++k;
                v += std::get<2>(t[k]);
            }
            if (v != 0) {
                A.col_idx.push_back(c);
                A.values.push_back(v);
            }
            ++k;
        }
        A.row_ptr[r + 1] = static_cast<int>(A.col_idx.size());
    }
    return A;
}

long long SparseOperator::max_abs_entry() const {
    long long m = 0;
    for (long long v : values) m = std::max(m, v < 0 ? -v : v);
    return m;
}

int SparseOperator::max_row_nnz() const {
    int m = 0;
    for (int r = 0; r < rows; ++r) m = std::max(m, row_ptr[r + 1] - row_ptr[r]);
    return m;
}

int SparseOperator::max_col_nnz() const {
    std::vector<int> count(cols, 0);
    for (int c : col_idx) ++count[c];
    int m = 0;
    for (int c : count) m = std::max(m, c);
    return m;
}

long long SparseOperator::entry(int r, int c) const {
    for (int k = row_ptr[r]; k < row_ptr[r + 1]; ++k)
        if (col_idx[k] == c) return values[k];
    return 0;
}

bool SparseOperator::is_symmetric() const {
    if (rows != cols) return false;
    for (int r = 0; r < rows; ++r)
        for (int k = row_ptr[r]; k < row_ptr[r + 1]; ++k)
            if (entry(col_idx[k], r) != values[k]) return false;
    return true;
}

SparseOperator SparseOperator::transposed() const {
    std::vector<std::tuple<int, int, long long>> t;
    t.reserve(nnz());
    for (int r = 0; r < rows; ++r)
        for (int k = row_ptr[r]; k < row_ptr[r + 1]; ++k)
            t.emplace_back(col_idx[k], r, values[k]);
    return from_triplets(cols, rows, domain_dim, std::move(t));
}

Eigen::MatrixXd SparseOperator::to_dense() const {
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int k = row_ptr[r]; k < row_ptr[r + 1]; ++k)
            M(r, col_idx[k]) = static_cast<double>(values[k]);
    return M;
}

SparseOperator multiply(const SparseOperator& A, const SparseOperator& B) {
    if (A.cols != B.rows) throw Error(Errc::invalid_parameter, "dimension mismatch in multiply");
    std::vector<std::tuple<int, int, long long>> t;
    std::vector<long long> acc(B.cols, 0);
    std::vector<int> touched;
    for (int r = 0; r < A.rows; ++r) {
        touched.clear();
        for (int ka = A.row_ptr[r]; ka < A.row_ptr[r + 1]; ++ka) {
            int m = A.col_idx[ka];
            long long av = A.values[ka];
            for (int kb = B.row_ptr[m]; kb < B.row_ptr[m + 1]; ++kb) {
                int c = B.col_idx[kb];
                if (acc[c] == 0) touched.push_back(c);
                acc[c] += av * B.values[kb];
                if (acc[c] == 0) {
                    // keep in touched; filtered below
                }
            }
        }
        for (int c : touched) {
            if (acc[c] != 0) t.emplace_back(r, c, acc[c]);
            acc[c] = 0;
        }
    }
    return SparseOperator::from_triplets(A.rows, B.cols, B.domain_dim, std::move(t));
}

SparseOperator add(const SparseOperator& A, const SparseOperator& B) {
    if (A.rows != B.rows || A.cols != B.cols)
        throw Error(Errc::invalid_parameter, "dimension mismatch in add");
    std::vector<std::tuple<int, int, long long>> t;
    t.reserve(A.nnz() + B.nnz());
    for (int r = 0; r < A.rows; ++r)
        for (int k = A.row_ptr[r]; k < A.row_ptr[r + 1]; ++k)
            t.emplace_back(r, A.col_idx[k], A.values[k]);
    for (int r = 0; r < B.rows; ++r)
        for (int k = B.row_ptr[r]; k < B.row_ptr[r + 1]; ++k)
            t.emplace_back(r, B.col_idx[k], B.values[k]);
    return SparseOperator::from_triplets(A.rows, A.cols, A.domain_dim, std::move(t));
}

SparseOperator coboundary(const SimplicialComplex& K, int q) {
    if (q < 0) throw Error(Errc::invalid_parameter, "negative cochain dimension");
    int n_rows = static_cast<int>(K.simplex_count(q + 1));
    int n_cols = static_cast<int>(K.simplex_count(q));
    std::vector<std::tuple<int, int, long long>> t;
    for (int r = 0; r < n_rows; ++r) {
        // Omit each vertex in orientation order; removing one element of a
        // rank-sorted tuple leaves the face in its own orientation order.
        Simplex oriented = K.oriented_tuple(K.simplices(q + 1)[r]);
        for (std::size_t j = 0; j < oriented.size(); ++j) {
            Simplex face;
            face.reserve(oriented.size() - 1);
            for (std::size_t m = 0; m < oriented.size(); ++m)
                if (m != j) face.push_back(oriented[m]);
            std::sort(face.begin(), face.end());
            long long c = K.simplex_index(q, face);
            t.emplace_back(r, static_cast<int>(c), (j % 2 == 0) ? 1 : -1);
        }
    }
    return SparseOperator::from_triplets(n_rows, n_cols, q, std::move(t));
}

SparseOperator laplacian(const SimplicialComplex& K, int i) {
    if (i < 0 || i > K.dimension())
        throw Error(Errc::invalid_parameter, "laplacian dimension out of range");
    SparseOperator up;
    {
        SparseOperator d_i = coboundary(K, i);
        up = multiply(d_i.transposed(), d_i);
    }
    if (i == 0) {
        up.domain_dim = 0;
        return up;
    }
    SparseOperator d_prev = coboundary(K, i - 1);
    SparseOperator down = multiply(d_prev, d_prev.transposed());
    SparseOperator L = add(up, down);
    L.domain_dim = i;
    return L;
}

double norm_bound(const SparseOperator& A) {
    long long L = std::max(A.max_row_nnz(), A.max_col_nnz());
    long long M = A.max_abs_entry();
    double k = 2.0 * static_cast<double>(L) * static_cast<double>(M);
    return std::max(k, 1.0);
}

std::string to_triplet_text(const SparseOperator& A) {
    std::ostringstream os;
    os << "% " << A.rows << " " << A.cols << " " << A.nnz() << "\n";
    for (int r = 0; r < A.rows; ++r)
        for (int k = A.row_ptr[r]; k < A.row_ptr[r + 1]; ++k)
            os << r << " " << A.col_idx[k] << " " << A.values[k] << "\n";
    return os.str();
}

} // namespace betti
