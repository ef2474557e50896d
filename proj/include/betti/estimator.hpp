#ifndef BETTI_ESTIMATOR_HPP
#define BETTI_ESTIMATOR_HPP

#include "betti/exact.hpp"
#include "betti/sparse.hpp"

namespace betti {

/// Shared state for repeated local evaluations against one Laplacian.
struct LaplacianContext {
    LaplacianContext(const SimplicialComplex& K, int dim);

    int dim;
    SparseOperator lap;
    double k_bound; // norm bound, >= 1
};

/// ((Delta^i)^r)(sigma, sigma) as an exact integer. The value only depends on
/// the radius-r neighbourhood of sigma in the support graph of Delta^i, and
/// is evaluated by a sparse vector recurrence confined to it.
BigInt local_diagonal_power(const LaplacianContext& ctx, long long simplex_index, int power);
BigInt local_diagonal_power(const SimplicialComplex& K, const Simplex& sigma, int power);

/// Moment estimates of the normalized spectral measure of Delta^i.
///
/// Raw moments m_r ~ (1/|K_i|) Tr((Delta^i)^r) are kept to a small power cap
/// (their range K^r overflows doubles quickly); Chebyshev moments on [0, K]
/// are estimated directly by the three-term recurrence, which stays in
/// [-1, 1] at any degree. samples = 0 visits every simplex once (exact mode,
/// integer raw-moment sums); otherwise roots are drawn uniformly with
/// replacement, deterministically in the seed.
struct MomentData {
    int dim = 0;
    int degree = 0; // R: Chebyshev moments for k = 0..R
    double k_bound = 1.0;
    long long population = 0; // |K_i|
    long long samples = 0;
    bool exact_mode = false;
    std::uint64_t seed = 0;
    std::vector<double> cheb;        // size R+1
    std::vector<double> raw;         // size min(R, raw_power_cap)+1
    std::vector<BigInt> raw_sums;    // exact mode only; raw[r] = raw_sums[r]/population
};

constexpr int raw_power_cap = 24;

MomentData estimate_moments(const SimplicialComplex& K, int dim, int degree, long long samples,
                            std::uint64_t seed, int threads = 1);
MomentData estimate_moments(const LaplacianContext& ctx, int degree, long long samples,
                            std::uint64_t seed, int threads = 1);

/// Exact rational change of basis from raw power moments to Chebyshev
/// moments on [0, K]; usable whenever raw moments up to `degree` exist.
std::vector<double> cheb_from_raw(const std::vector<BigInt>& raw_sums, long long population,
                                  double k_bound, int degree);

/// sigma-hat(lambda): Jackson-damped Chebyshev expansion of the indicator
/// 1_[0, lambda] evaluated against the moments. Unclipped pointwise value.
double cdf_at(const MomentData& m, double lambda);

/// sigma-hat on a grid, clipped to [0, 1] and monotonized by running max.
std::vector<double> cdf_from_moments(const MomentData& m, const std::vector<double>& grid);

struct SpectralSummary {
    int dim = 0;
    long long n_simplices = 0;
    long long n_vertices = 0;
    double simplex_density = 0.0; // |K_i| / |K_0|
    double k_bound = 1.0;
    MomentData moments;
    std::vector<double> grid;
    std::vector<double> cdf;
};

struct BettiEstimate {
    int dim = 0;
    double per_vertex = 0.0;       // simplex_density * kernel_fraction
    double kernel_fraction = 0.0;  // sigma-hat(lambda_cut)
    double epsilon_star = 0.0;     // the spectral cut lambda used
    double bound_term = 0.0;       // log K / log(1/lambda_cut)
    double confidence_rho = 0.0;   // target accuracy driving the budget
    double confidence_delta = 0.0; // sampling failure probability budget
};

/// Reads the kernel fraction off the reconstructed distribution function at
/// lambda_cut in (0, 1) and reports log K / log(1/lambda_cut), the structural
/// overestimate allowance for the spectral mass below the cut.
BettiEstimate kernel_estimate(const SpectralSummary& summary, double lambda_cut);

struct EstimatorOptions {
    int degree = 0;        // 0 = from eps
    long long samples = -1; // -1 = from eps, 0 = exact mode
    double cut = 0.0;      // 0 = auto (gap detection)
    int threads = 1;
};

struct EstimateResult {
    SpectralSummary summary;
    BettiEstimate estimate;
};

/// End-to-end estimator: budgets R, S and the cut from eps, estimates
/// moments, reconstructs the distribution function, and combines the kernel
/// fraction with the exact simplex density.
EstimateResult estimate_betti_spectral(const SimplicialComplex& K, int dim, double eps,
                                       std::uint64_t seed, const EstimatorOptions& opt = {});

/// Smallest eigenvalue of the Hankel matrices of the scaled raw moments;
/// both should be PSD up to sampling error for a genuine measure on [0, K].
double hankel_min_eigenvalue(const std::vector<double>& raw, double k_bound);

} // namespace betti

#endif
