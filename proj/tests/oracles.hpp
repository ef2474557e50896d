// Test-only oracles, kept independent of the implementation paths they check.
#ifndef BETTI_TESTS_ORACLES_HPP
#define BETTI_TESTS_ORACLES_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <numeric>
#include <vector>

#include "betti/ball.hpp"
#include "betti/exact.hpp"
#include "betti/families.hpp"

namespace oracles {

using betti::BigInt;
using betti::BigRat;
using betti::RootedBall;
using betti::Simplex;
using betti::SimplicialComplex;
using betti::Vertex;

// Root-preserving isomorphism by exhaustive search over vertex bijections.
inline bool brute_force_root_isomorphic(const RootedBall& a, const RootedBall& b) {
    const SimplicialComplex& A = a.ball;
    const SimplicialComplex& B = b.ball;
    if (a.root_dimension != b.root_dimension || a.radius != b.radius) return false;
    if (A.vertex_count() != B.vertex_count() || A.dimension() != B.dimension()) return false;
    for (int d = 0; d <= A.dimension(); ++d)
        if (A.simplex_count(d) != B.simplex_count(d)) return false;

    int n = static_cast<int>(A.vertex_count());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    std::vector<char> root_a(n, 0), root_b(n, 0);
    for (Vertex v : a.root) root_a[A.vertex_index(v)] = 1;
    for (Vertex v : b.root) root_b[B.vertex_index(v)] = 1;

    auto maps_ok = [&](const std::vector<int>& p) {
        for (int i = 0; i < n; ++i)
            if (root_a[i] != root_b[p[i]]) return false;
        for (int d = 1; d <= A.dimension(); ++d)
            for (const auto& s : A.simplices(d)) {
                Simplex image;
                for (Vertex v : s) image.push_back(B.vertex_id(p[A.vertex_index(v)]));
                std::sort(image.begin(), image.end());
                if (!B.contains(image)) return false;
            }
        return true;
    };
    do {
        if (maps_ok(perm)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Diagonal of the dense r-th power of an integer matrix, exact.
inline std::vector<BigInt> dense_power_diagonal(const betti::SparseOperator& A, int power) {
    int n = A.rows;
    std::vector<std::vector<BigInt>> M(n, std::vector<BigInt>(n, 0));
    for (int r = 0; r < n; ++r)
        for (int k = A.row_ptr[r]; k < A.row_ptr[r + 1]; ++k) M[r][A.col_idx[k]] = A.values[k];
    std::vector<std::vector<BigInt>> P(n, std::vector<BigInt>(n, 0));
    for (int i = 0; i < n; ++i) P[i][i] = 1;
    for (int step = 0; step < power; ++step) {
        std::vector<std::vector<BigInt>> Q(n, std::vector<BigInt>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (P[i][k] == 0) continue;
                for (int j = 0; j < n; ++j)
                    if (M[k][j] != 0) Q[i][j] += P[i][k] * M[k][j];
            }
        P = std::move(Q);
    }
    std::vector<BigInt> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = P[i][i];
    return diag;
}

// Characteristic polynomial coefficients (ascending powers of t) of an
// integer matrix, by exact determinant evaluation at n+1 integer nodes and
// rational Lagrange interpolation.
inline std::vector<BigRat> char_poly(const betti::SparseOperator& A) {
    int n = A.rows;
    std::vector<BigInt> nodes(n + 1);
    std::vector<BigInt> values(n + 1);
    for (int j = 0; j <= n; ++j) {
        nodes[j] = j;
        std::vector<std::vector<BigInt>> M(n, std::vector<BigInt>(n, 0));
        for (int r = 0; r < n; ++r) M[r][r] = nodes[j];
        for (int r = 0; r < n; ++r)
            for (int k = A.row_ptr[r]; k < A.row_ptr[r + 1]; ++k)
                M[r][A.col_idx[k]] -= A.values[k];
        values[j] = betti::bareiss_determinant(std::move(M));
    }
    // Newton's divided differences, then expand the Newton form.
    std::vector<std::vector<BigRat>> dd(n + 1, std::vector<BigRat>(n + 1));
    for (int j = 0; j <= n; ++j) dd[0][j] = BigRat(values[j]);
    for (int level = 1; level <= n; ++level)
        for (int j = 0; j + level <= n; ++j)
            dd[level][j] = (dd[level - 1][j + 1] - dd[level - 1][j]) /
                           BigRat(nodes[j + level] - nodes[j]);

    std::vector<BigRat> coeffs(n + 1, BigRat(0));
    std::vector<BigRat> basis{BigRat(1)}; // expanded product of (t - nodes[m]), m < level
    for (int level = 0; level <= n; ++level) {
        for (std::size_t k = 0; k < basis.size(); ++k) coeffs[k] += dd[level][0] * basis[k];
        if (level < n) {
            std::vector<BigRat> next(basis.size() + 1, BigRat(0));
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * BigRat(nodes[level]);
            }
            basis = std::move(next);
        }
    }
    return coeffs;
}

// |q(0)| where p(t) = t^s q(t), q(0) != 0: the lowest non-vanishing
// characteristic coefficient.
inline BigInt pseudo_det_via_char_poly(const betti::SparseOperator& A) {
    auto coeffs = char_poly(A);
    for (const auto& c : coeffs) {
        if (c != 0) {
            BigInt num = boost::multiprecision::numerator(c);
            BigInt den = boost::multiprecision::denominator(c);
            BigInt q = num / den; // integer by construction
            return q < 0 ? BigInt(-q) : q;
        }
    }
    return 1;
}

// Floating rank cross-check: singular values above 1e-8 * norm bound.
inline int floating_rank(const betti::SparseOperator& A) {
    if (A.rows == 0 || A.cols == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A.to_dense());
    double thresh = 1e-8 * betti::norm_bound(A);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > thresh) ++rank;
    return rank;
}

inline SimplicialComplex hollow_triangle() {
    return SimplicialComplex::build({{0, 1}, {0, 2}, {1, 2}}, 2);
}

inline SimplicialComplex solid_triangle() { return SimplicialComplex::build({{0, 1, 2}}, 2); }

inline SimplicialComplex isolated_vertices(int k) {
    std::vector<Simplex> v;
    for (int j = 0; j < k; ++j) v.push_back({static_cast<Vertex>(j)});
    return SimplicialComplex::build(std::move(v), 1);
}

// Deterministic mixed fixture pool spanning all generator kinds.
inline std::vector<SimplicialComplex> fixture_pool(int count, std::uint64_t seed_base = 1000) {
    using betti::FamilyKind;
    using betti::FamilySpec;
    std::vector<SimplicialComplex> out;
    for (int k = 0; k < count; ++k) {
        FamilySpec spec;
        switch (k % 6) {
            case 0:
                spec.kind = FamilyKind::random_flag;
                spec.n = 6 + (k % 17);
                spec.degree_bound = 3 + (k % 5);
                spec.seed = seed_base + k;
                break;
            case 1:
                spec.kind = FamilyKind::cycle;
                spec.n = 3 + (k % 9);
                break;
            case 2:
                spec.kind = FamilyKind::path;
                spec.n = 1 + (k % 9);
                break;
            case 3:
                spec.kind = FamilyKind::sphere_boundary;
                spec.n = 1 + (k % 3);
                break;
            case 4:
                spec.kind = FamilyKind::torus_grid;
                spec.n = 3 + (k % 2);
                break;
            case 5: {
                FamilySpec base;
                base.kind = FamilyKind::cycle;
                base.n = 3;
                spec.kind = FamilyKind::disjoint_union;
                spec.base = std::make_shared<FamilySpec>(base);
                spec.copies = 1 + (k % 4);
                break;
            }
        }
        out.push_back(betti::generate(spec));
    }
    return out;
}

} // namespace oracles

#endif
