#include "betti/spectra.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "betti/exact.hpp"

namespace betti {

double SpectralMeasure::cdf(double lambda) const {
    if (n == 0) return 0.0;
    if (lambda < 0.0) return 0.0;
    auto it = std::upper_bound(positives.begin(), positives.end(), lambda);
    return static_cast<double>(zero_count + (it - positives.begin())) / static_cast<double>(n);
}

SpectralMeasure exact_spectrum(const SparseOperator& A, long long size_cap) {
    if (A.rows != A.cols)
        throw Error(Errc::invalid_parameter, "spectrum requires a square matrix");
    if (A.rows > size_cap)
        throw Error(Errc::too_large, "matrix size " + std::to_string(A.rows) +
                                         " exceeds cap " + std::to_string(size_cap));
    SpectralMeasure m;
    m.n = A.rows;
    m.support_bound = norm_bound(A);
    if (A.rows == 0) return m;

    m.zero_count = A.rows - exact_rank(A);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(A.to_dense(),
                                                          Eigen::EigenvaluesOnly);
    Eigen::VectorXd ev = solver.eigenvalues(); // ascending
    if (ev.size() > 0 && ev(0) < -1e-9 * m.support_bound)
        throw Error(Errc::invalid_parameter, "matrix is not positive semidefinite");

    // The kernel count is authoritative; the smallest zero_count floating
    // eigenvalues are the numerical zeros.
    for (long long j = m.zero_count; j < m.n; ++j)
        m.positives.push_back(std::clamp(ev(j), 0.0, m.support_bound));
    std::sort(m.positives.begin(), m.positives.end());
    return m;
}

double log_determinant_c(const SpectralMeasure& m) {
    if (m.n == 0) return 0.0;
    double s = 0.0;
    for (double l : m.positives) s += std::log(l);
    return s / static_cast<double>(m.n);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol) {
    struct Impl {
        const std::function<double(double)>& f;
        double recurse(double a, double m, double b, double fa, double fm, double fb,
                       double whole, double tol, int depth) {
            double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
            double flm = f(lm), frm = f(rm);
            double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
            double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
            if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
                return left + right + (left + right - whole) / 15.0;
            return recurse(a, lm, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
                   recurse(m, rm, b, fm, frm, fb, right, tol / 2.0, depth - 1);
        }
    };
    if (a >= b) return 0.0;
    Impl impl{f};
    double m = 0.5 * (a + b);
    double fa = f(a), fm = f(m), fb = f(b);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return impl.recurse(a, m, b, fa, fm, fb, whole, tol, 40);
}

std::pair<double, double> stieltjes_check(const C1Function& fn, const SpectralMeasure& m,
                                          double eps, double quad_tol) {
    if (!(eps > 0.0) || eps > m.support_bound)
        throw Error(Errc::invalid_parameter, "eps must lie in (0, K]");
    double K = m.support_bound;
    double inv_n = m.n ? 1.0 / static_cast<double>(m.n) : 0.0;

    double lhs = 0.0;
    for (double l : m.positives)
        if (l > eps && l <= K) lhs += fn.f(l) * inv_n;

    // F is constant between consecutive eigenvalues; integrate f' F piecewise.
    std::vector<double> cuts{eps};
    for (double l : m.positives)
        if (l > eps && l < K) cuts.push_back(l);
    cuts.push_back(K);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    double integral = 0.0;
    double piece_tol = quad_tol / static_cast<double>(cuts.size());
    for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
        double a = cuts[j], b = cuts[j + 1];
        double F = m.cdf(0.5 * (a + b));
        integral += F * adaptive_simpson(fn.df, a, b, piece_tol);
    }
    double rhs = -integral + fn.f(K) * m.cdf(K) - fn.f(eps) * m.cdf(eps);
    return {lhs, rhs};
}

TailBoundReport log_tail_bounds(const SpectralMeasure& m, double slack) {
    TailBoundReport rep;
    rep.log_k = std::log(m.support_bound);
    if (m.n == 0) return rep;
    double inv_n = 1.0 / static_cast<double>(m.n);

    for (double l : m.positives) rep.log_tail_sum += std::log(m.support_bound / l) * inv_n;
    rep.sum_ok = rep.log_tail_sum <= rep.log_k + slack;

    std::vector<double> grid;
    for (double l : m.positives)
        if (l < 1.0) grid.push_back(l);
    for (int j = 1; j < 100; ++j) grid.push_back(0.01 * j);
    double sigma0 = m.mass_at_zero();
    rep.worst_cdf_margin = rep.log_k + 1.0;
    for (double l : grid) {
        if (!(l > 0.0) || l >= 1.0) continue;
        double bound = rep.log_k / std::log(1.0 / l);
        double actual = m.cdf(l) - sigma0;
        rep.worst_cdf_margin = std::min(rep.worst_cdf_margin, bound - actual);
        if (actual > bound + slack) rep.cdf_ok = false;
    }
    return rep;
}

} // namespace betti
