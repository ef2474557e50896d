#ifndef BETTI_SPECTRA_HPP
#define BETTI_SPECTRA_HPP

#include <functional>
#include <utility>
#include <vector>

#include "betti/sparse.hpp"

namespace betti {

/// Normalized spectral measure of a symmetric PSD operator: each eigenvalue
/// carries mass 1/n. The kernel multiplicity is exact (from the rational
/// rank); the positive eigenvalues come from a dense symmetric eigensolve.
struct SpectralMeasure {
    long long n = 0;
    double support_bound = 1.0; // K, with all eigenvalues in [0, K]
    long long zero_count = 0;
    std::vector<double> positives; // ascending

    double mass_at_zero() const { return n ? static_cast<double>(zero_count) / n : 0.0; }
    /// sigma(lambda) = mu([0, lambda]).
    double cdf(double lambda) const;
    double max_eigenvalue() const { return positives.empty() ? 0.0 : positives.back(); }
};

/// Dense exact-mode spectrum. Throws too_large above size_cap (default 2000)
/// and invalid_parameter when A is not symmetric PSD.
SpectralMeasure exact_spectrum(const SparseOperator& A, long long size_cap = 2000);

/// c(mu) = (1/n) * sum of log(lambda) over the positive eigenvalues.
double log_determinant_c(const SpectralMeasure& m);

/// Continuously differentiable test function with its derivative.
struct C1Function {
    std::function<double(double)> f;
    std::function<double(double)> df;
};

/// Evaluates both sides of the integration-by-parts identity
///   int_eps^K f dmu = -int_eps^K f'(l) F(l) dl + f(K)F(K) - f(eps)F(eps)
/// over the discrete measure: the left side as a closed sum over eigenvalues
/// in (eps, K] (eigenvalues exactly at eps assigned to the left), the right
/// side by adaptive quadrature between the jumps of F. Both sides agree up to
/// quadrature tolerance; used as a self-test.
std::pair<double, double> stieltjes_check(const C1Function& fn, const SpectralMeasure& m,
                                          double eps, double quad_tol = 1e-9);

/// Checks of the log-tail consequences of c(mu) >= 0 on an exact spectrum:
///   (a) sum over positive eigenvalues of (1/n) log(K/lambda) <= log K,
///   (b) sigma(lambda) - sigma(0) <= log K / log(1/lambda) for lambda < 1.
struct TailBoundReport {
    bool sum_ok = true;
    bool cdf_ok = true;
    double log_tail_sum = 0.0;
    double log_k = 0.0;
    double worst_cdf_margin = 0.0; // min over grid of bound - actual
};
TailBoundReport log_tail_bounds(const SpectralMeasure& m, double slack = 1e-9);

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol);

} // namespace betti

#endif
