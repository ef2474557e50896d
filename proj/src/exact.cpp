#include "betti/exact.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace betti {

namespace {

using Row = std::map<int, BigInt>;

BigInt row_gcd(const Row& row) {
    BigInt g = 0;
    for (const auto& [c, v] : row) {
        g = boost::multiprecision::gcd(g, v < 0 ? BigInt(-v) : v);
        if (g == 1) break;
    }
    return g;
}

struct Echelon {
    // (pivot column, row content at elimination time); later rows have zero
    // entries in all earlier pivot columns.
    std::vector<std::pair<int, Row>> pivots;
    int cols = 0;
};

Echelon eliminate(const SparseOperator& A) {
    std::vector<Row> rows(A.rows);
    std::vector<std::set<int>> col_rows(A.cols);
    for (int r = 0; r < A.rows; ++r)
        for (int k = A.row_ptr[r]; k < A.row_ptr[r + 1]; ++k) {
            rows[r][A.col_idx[k]] = A.values[k];
            col_rows[A.col_idx[k]].insert(r);
        }

    Echelon ech;
    ech.cols = A.cols;
    for (;;) {
        // pivot column: fewest remaining nonzeros
        int c_piv = -1;
        std::size_t best = 0;
        for (int c = 0; c < A.cols; ++c) {
            if (col_rows[c].empty()) continue;
            if (c_piv < 0 || col_rows[c].size() < best) {
                c_piv = c;
                best = col_rows[c].size();
            }
        }
        if (c_piv < 0) break;

        // pivot row: prefer a unit entry, then sparsity, then small magnitude
        int r_piv = -1;
        bool unit = false;
        std::size_t r_nnz = 0;
        BigInt r_abs = 0;
        for (int r : col_rows[c_piv]) {
            const BigInt& v = rows[r].at(c_piv);
            BigInt a = v < 0 ? BigInt(-v) : v;
            bool u = (a == 1);
            std::size_t nnz = rows[r].size();
            bool better;
            if (r_piv < 0) better = true;
            else if (u != unit) better = u;
            else if (nnz != r_nnz) better = nnz < r_nnz;
            else better = a < r_abs;
            if (better) {
                r_piv = r;
                unit = u;
                r_nnz = nnz;
                r_abs = a;
            }
        }

        Row pivot_row = rows[r_piv];
        BigInt p = pivot_row.at(c_piv);

        std::vector<int> targets(col_rows[c_piv].begin(), col_rows[c_piv].end());
        for (int r : targets) {
            if (r == r_piv) continue;
            Row& row = rows[r];
            BigInt a = row.at(c_piv);
            // row <- p*row - a*pivot (or row - a*p*pivot when p is a unit),
            // then divide out the content
            for (const auto& [c, pv] : pivot_row) {
                BigInt& cell = row[c];
                BigInt before = cell;
                if (unit) cell -= a * p * pv;
                else cell = p * cell - a * pv;
                if (before == 0 && cell != 0) col_rows[c].insert(r);
                else if (before != 0 && cell == 0) col_rows[c].erase(r);
            }
            if (!unit) {
                for (auto& [c, cell] : row) {
                    bool was_pivot_col = pivot_row.count(c) > 0;
                    if (!was_pivot_col) {
                        BigInt before = cell;
                        cell *= p;
                        if (before != 0 && cell == 0) col_rows[c].erase(r); // unreachable, p != 0
                    }
                }
            }
            for (auto it = row.begin(); it != row.end();)
                it = (it->second == 0) ? row.erase(it) : std::next(it);
            BigInt g = row_gcd(row);
            if (g > 1)
                for (auto& [c, cell] : row) cell /= g;
        }

        for (const auto& [c, v] : pivot_row) col_rows[c].erase(r_piv);
        rows[r_piv].clear();
        ech.pivots.emplace_back(c_piv, std::move(pivot_row));
    }
    return ech;
}

} // namespace

int exact_rank(const SparseOperator& A) {
    return static_cast<int>(eliminate(A).pivots.size());
}

std::vector<std::vector<BigInt>> integer_kernel_basis(const SparseOperator& A) {
    Echelon ech = eliminate(A);
    std::vector<char> is_pivot(A.cols, 0);
    for (const auto& [c, row] : ech.pivots) is_pivot[c] = 1;

    std::vector<std::vector<BigInt>> basis;
    for (int f = 0; f < A.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<BigRat> x(A.cols, 0);
        x[f] = 1;
        for (auto it = ech.pivots.rbegin(); it != ech.pivots.rend(); ++it) {
            const auto& [pc, row] = *it;
            BigRat sum = 0;
            for (const auto& [c, v] : row)
                if (c != pc) sum += BigRat(v) * x[c];
            x[pc] = -sum / BigRat(row.at(pc));
        }
        BigInt denom_lcm = 1;
        for (const auto& q : x)
            denom_lcm = boost::multiprecision::lcm(denom_lcm, boost::multiprecision::denominator(q));
        std::vector<BigInt> v(A.cols);
        BigInt g = 0;
        for (int c = 0; c < A.cols; ++c) {
            v[c] = boost::multiprecision::numerator(x[c]) *
                   (denom_lcm / boost::multiprecision::denominator(x[c]));
            g = boost::multiprecision::gcd(g, v[c] < 0 ? BigInt(-v[c]) : v[c]);
        }
        if (g > 1)
            for (auto& cell : v) cell /= g;
        basis.push_back(std::move(v));
    }
    return basis;
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> M) {
    std::size_t n = M.size();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k] == 0) {
            std::size_t swap_row = k;
            for (std::size_t r = k + 1; r < n; ++r)
                if (M[r][k] != 0) { swap_row = r; break; }
            if (swap_row == k) return 0;
            std::swap(M[k], M[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                M[i][j] = (M[k][k] * M[i][j] - M[i][k] * M[k][j]) / prev;
            M[i][k] = 0;
        }
        prev = M[k][k];
    }
    return sign * M[n - 1][n - 1];
}

BigInt pseudo_determinant(const SparseOperator& A, long long size_cap) {
    if (A.rows != A.cols)
        throw Error(Errc::invalid_parameter, "pseudo-determinant requires a square matrix");
    if (A.rows > size_cap)
        throw Error(Errc::too_large, "matrix size " + std::to_string(A.rows) +
                                         " exceeds cap " + std::to_string(size_cap));
    int n = A.rows;
    if (n == 0) return 1;

    auto kernel = integer_kernel_basis(A);
    std::size_t k = kernel.size();

    std::vector<std::vector<BigInt>> B(n, std::vector<BigInt>(n, 0));
    for (int r = 0; r < n; ++r)
        for (int m = A.row_ptr[r]; m < A.row_ptr[r + 1]; ++m)
            B[r][A.col_idx[m]] = A.values[m];

    if (k == 0) {
        BigInt d = bareiss_determinant(std::move(B));
        return d < 0 ? BigInt(-d) : d;
    }

    // The kernel is an invariant subspace orthogonal to the column space, so
    // A + V V^T has determinant pdet(A) * det(V^T V).
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            for (std::size_t j = 0; j < k; ++j) B[r][c] += kernel[j][r] * kernel[j][c];

    std::vector<std::vector<BigInt>> G(k, std::vector<BigInt>(k, 0));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            for (int c = 0; c < n; ++c) G[a][b] += kernel[a][c] * kernel[b][c];

    BigInt det_b = bareiss_determinant(std::move(B));
    BigInt det_g = bareiss_determinant(std::move(G));
    if (det_b < 0) det_b = -det_b;
    if (det_g <= 0)
        throw Error(Errc::invalid_parameter, "kernel Gram matrix is singular");
    BigInt q = det_b / det_g;
    if (q * det_g != det_b)
        throw Error(Errc::invalid_parameter, "pseudo-determinant division not exact");
    return q;
}

std::vector<long long> betti_exact(const SimplicialComplex& K) {
    if (K.vertex_count() == 0)
        throw Error(Errc::empty_complex, "Betti numbers of the empty complex are undefined");
    int dim = K.dimension();
    std::vector<int> rank_d(dim + 1, 0);
    for (int i = 0; i <= dim; ++i) {
        if (i == dim) break; // d_dim is the zero map into an empty space
        rank_d[i] = exact_rank(coboundary(K, i));
    }
    std::vector<long long> b(dim + 1, 0);
    for (int i = 0; i <= dim; ++i) {
        long long n_i = static_cast<long long>(K.simplex_count(i));
        long long r_i = (i < dim) ? rank_d[i] : 0;
        long long r_prev = (i > 0) ? rank_d[i - 1] : 0;
        b[i] = n_i - r_i - r_prev;
    }
    return b;
}

} // namespace betti
