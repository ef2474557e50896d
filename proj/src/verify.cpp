#include "betti/verify.hpp"

#include <cmath>
#include <sstream>

#include "betti/exact.hpp"
#include "betti/spectra.hpp"

namespace betti {

std::vector<PropertyResult> verify_complex(const SimplicialComplex& K, long long pdet_cap,
                                           long long spectrum_cap) {
    std::vector<PropertyResult> out;
    if (K.vertex_count() == 0) {
        out.push_back({"nonempty", false, "complex has no vertices"});
        return out;
    }
    int dim = K.dimension();
    int d = K.degree_bound();

    {
        PropertyResult r{"cochain_composition", true, ""};
        for (int q = 0; q + 1 <= dim; ++q) {
            SparseOperator prod = multiply(coboundary(K, q + 1), coboundary(K, q));
            if (prod.nnz() != 0) {
                r.pass = false;
                r.detail = "d_" + std::to_string(q + 1) + " o d_" + std::to_string(q) + " != 0";
                break;
            }
        }
        if (r.pass) r.detail = "d_{q+1} o d_q = 0 for q = 0.." + std::to_string(dim - 1);
        out.push_back(std::move(r));
    }

    std::vector<long long> betti = betti_exact(K);
    std::vector<SparseOperator> laps;
    for (int i = 0; i <= dim; ++i) laps.push_back(laplacian(K, i));

    {
        PropertyResult r{"laplacian_structure", true, ""};
        for (int i = 0; i <= dim && r.pass; ++i) {
            const SparseOperator& L = laps[i];
            if (!L.is_symmetric()) {
                r.pass = false;
                r.detail = "Delta^" + std::to_string(i) + " not symmetric";
                break;
            }
            if (L.max_abs_entry() > d + 1) {
                r.pass = false;
                r.detail = "Delta^" + std::to_string(i) + " entry exceeds d+1";
                break;
            }
            for (int row = 0; row < L.rows && r.pass; ++row) {
                const Simplex& s = K.simplices(i)[row];
                if (L.entry(row, row) < 0) {
                    r.pass = false;
                    r.detail = "negative diagonal in Delta^" + std::to_string(i);
                    break;
                }
                for (int k = L.row_ptr[row]; k < L.row_ptr[row + 1]; ++k) {
                    int col = L.col_idx[k];
                    if (col == row) continue;
                    const Simplex& t = K.simplices(i)[col];
                    bool adjacent;
                    if (i == 0) {
                        adjacent = K.contains({std::min(s[0], t[0]), std::max(s[0], t[0])});
                    } else {
                        adjacent = false;
                        for (Vertex v : s)
                            if (std::binary_search(t.begin(), t.end(), v)) { adjacent = true; break; }
                    }
                    if (!adjacent) {
                        r.pass = false;
                        r.detail = "support outside adjacency in Delta^" + std::to_string(i);
                        break;
                    }
                }
            }
        }
        if (r.pass) r.detail = "symmetric integer, |entries| <= d+1, adjacency support";
        out.push_back(std::move(r));
    }

    {
        PropertyResult r{"kernel_dimension", true, ""};
        for (int i = 0; i <= dim; ++i) {
            long long ker = static_cast<long long>(K.simplex_count(i)) - exact_rank(laps[i]);
            if (ker != betti[i]) {
                r.pass = false;
                r.detail = "dim Ker Delta^" + std::to_string(i) + " = " + std::to_string(ker) +
                           " but b^" + std::to_string(i) + " = " + std::to_string(betti[i]);
                break;
            }
        }
        if (r.pass) r.detail = "dim Ker Delta^i = b^i for all i";
        out.push_back(std::move(r));
    }

    {
        PropertyResult r{"euler_characteristic", true, ""};
        long long lhs = 0, rhs = 0;
        for (int i = 0; i <= dim; ++i) {
            long long sign = (i % 2 == 0) ? 1 : -1;
            lhs += sign * betti[i];
            rhs += sign * static_cast<long long>(K.simplex_count(i));
        }
        r.pass = lhs == rhs;
        std::ostringstream os;
        os << "sum (-1)^i b^i = " << lhs << ", sum (-1)^i |K_i| = " << rhs;
        r.detail = os.str();
        out.push_back(std::move(r));
    }

    {
        PropertyResult norm_r{"norm_bound", true, ""};
        PropertyResult tail_r{"log_tail_bounds", true, ""};
        int checked = 0;
        for (int i = 0; i <= dim; ++i) {
            if (laps[i].rows > spectrum_cap || laps[i].rows == 0) continue;
            ++checked;
            SpectralMeasure m = exact_spectrum(laps[i], spectrum_cap);
            if (m.max_eigenvalue() > norm_bound(laps[i]) + 1e-9) {
                norm_r.pass = false;
                norm_r.detail = "norm bound below max eigenvalue at i = " + std::to_string(i);
            }
            TailBoundReport tb = log_tail_bounds(m);
            if (!tb.sum_ok || !tb.cdf_ok) {
                tail_r.pass = false;
                tail_r.detail = "violated at i = " + std::to_string(i);
            }
        }
        std::string suffix = " (checked " + std::to_string(checked) + " spectra)";
        if (norm_r.pass) norm_r.detail = "2LM >= max eigenvalue" + suffix;
        if (tail_r.pass) tail_r.detail = "log-tail inequalities hold" + suffix;
        out.push_back(std::move(norm_r));
        out.push_back(std::move(tail_r));
    }

    {
        PropertyResult r{"pseudo_determinant", true, ""};
        int checked = 0;
        for (int i = 0; i <= dim; ++i) {
            if (laps[i].rows > pdet_cap || laps[i].rows == 0) continue;
            ++checked;
            BigInt pd = pseudo_determinant(laps[i], pdet_cap);
            if (pd < 1) {
                r.pass = false;
                r.detail = "pseudo-determinant < 1 at i = " + std::to_string(i);
                break;
            }
        }
        if (r.pass)
            r.detail = "pseudo-determinant >= 1, log determinant >= 0 (checked " +
                       std::to_string(checked) + " of " + std::to_string(dim + 1) + " Laplacians)";
        out.push_back(std::move(r));
    }

    return out;
}

} // namespace betti
