#include "betti/estimator.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <unordered_map>

namespace betti {

LaplacianContext::LaplacianContext(const SimplicialComplex& K, int dim_)
    : dim(dim_), lap(laplacian(K, dim_)), k_bound(norm_bound(lap)) {
    if (lap.rows == 0) throw Error(Errc::empty_dimension, "no simplices of this dimension");
}

namespace {

// Support-graph neighbourhood of one row, to a given depth. Returns local
// indexing (global -> local) plus a local CSR of the restricted operator.
struct LocalBlock {
    std::vector<int> global;           // local -> global
    std::vector<int> row_ptr{0};
    std::vector<int> col;
    std::vector<double> val;
    std::vector<long long> ival;
    int root_local = 0;
};

LocalBlock local_block(const SparseOperator& A, int root, int depth) {
    std::unordered_map<int, int> local_of;
    LocalBlock b;
    b.global.push_back(root);
    local_of[root] = 0;
    std::size_t frontier_begin = 0;
    for (int level = 0; level < depth; ++level) {
        std::size_t frontier_end = b.global.size();
        if (frontier_begin == frontier_end) break;
        for (std::size_t q = frontier_begin; q < frontier_end; ++q) {
            int g = b.global[q];
            for (int k = A.row_ptr[g]; k < A.row_ptr[g + 1]; ++k) {
                int c = A.col_idx[k];
                if (!local_of.count(c)) {
                    local_of[c] = static_cast<int>(b.global.size());
                    b.global.push_back(c);
                }
            }
        }
        frontier_begin = frontier_end;
    }
    for (int g : b.global) {
        for (int k = A.row_ptr[g]; k < A.row_ptr[g + 1]; ++k) {
            auto it = local_of.find(A.col_idx[k]);
            if (it == local_of.end()) continue; // outside the ball; unreachable by short walks
            b.col.push_back(it->second);
            b.val.push_back(static_cast<double>(A.values[k]));
            b.ival.push_back(A.values[k]);
        }
        b.row_ptr.push_back(static_cast<int>(b.col.size()));
    }
    return b;
}

// Per-root Chebyshev values t_k = (T_k(2A/K - I))(root, root), k = 0..R, and
// raw diagonal powers to raw_cap, in one pass of three-term recurrences.
struct RootValues {
    std::vector<double> cheb;
    std::vector<double> raw;
    std::vector<BigInt> raw_exact;
};

RootValues eval_root(const SparseOperator& A, double K, int root, int degree, int raw_cap,
                     bool exact_ints) {
    LocalBlock b = local_block(A, root, degree);
    int n = static_cast<int>(b.global.size());
    RootValues out;
    out.cheb.assign(degree + 1, 0.0);
    out.raw.assign(raw_cap + 1, 0.0);

    auto matvec = [&](const std::vector<double>& x, std::vector<double>& y) {
        for (int r = 0; r < n; ++r) {
            double s = 0.0;
            for (int k = b.row_ptr[r]; k < b.row_ptr[r + 1]; ++k) s += b.val[k] * x[b.col[k]];
            y[r] = s;
        }
    };

    // Chebyshev recurrence with B = 2A/K - I: v_1 = B v_0, v_k = 2B v_{k-1} - v_{k-2}
    std::vector<double> prev(n, 0.0), cur(n, 0.0), tmp(n, 0.0);
    cur[b.root_local] = 1.0;
    out.cheb[0] = 1.0;
    double scale = 2.0 / K;
    for (int k = 1; k <= degree; ++k) {
        matvec(cur, tmp);
        if (k == 1) {
            for (int j = 0; j < n; ++j) tmp[j] = scale * tmp[j] - cur[j];
        } else {
            for (int j = 0; j < n; ++j) tmp[j] = 2.0 * (scale * tmp[j] - cur[j]) - prev[j];
        }
        std::swap(prev, cur);
        std::swap(cur, tmp);
        out.cheb[k] = cur[b.root_local];
    }

    // Raw powers, double precision.
    std::fill(prev.begin(), prev.end(), 0.0);
    prev[b.root_local] = 1.0;
    out.raw[0] = 1.0;
    for (int r = 1; r <= raw_cap; ++r) {
        matvec(prev, tmp);
        std::swap(prev, tmp);
        out.raw[r] = prev[b.root_local];
    }

    if (exact_ints) {
        std::vector<BigInt> v(n, 0), w(n, 0);
        v[b.root_local] = 1;
        out.raw_exact.assign(raw_cap + 1, 0);
        out.raw_exact[0] = 1;
        for (int r = 1; r <= raw_cap; ++r) {
            for (int row = 0; row < n; ++row) {
                BigInt s = 0;
                for (int k = b.row_ptr[row]; k < b.row_ptr[row + 1]; ++k)
                    s += b.ival[k] * v[b.col[k]];
                w[row] = s;
            }
            std::swap(v, w);
            out.raw_exact[r] = v[b.root_local];
        }
    }
    return out;
}

} // namespace

BigInt local_diagonal_power(const LaplacianContext& ctx, long long simplex_index, int power) {
    if (power < 0) throw Error(Errc::invalid_parameter, "power must be non-negative");
    if (simplex_index < 0 || simplex_index >= ctx.lap.rows)
        throw Error(Errc::unknown_simplex, "simplex index out of range");
    if (power == 0) return 1;
    LocalBlock b = local_block(ctx.lap, static_cast<int>(simplex_index), power);
    int n = static_cast<int>(b.global.size());
    std::vector<BigInt> v(n, 0), w(n, 0);
    v[b.root_local] = 1;
    for (int r = 0; r < power; ++r) {
        for (int row = 0; row < n; ++row) {
            BigInt s = 0;
            for (int k = b.row_ptr[row]; k < b.row_ptr[row + 1]; ++k) s += b.ival[k] * v[b.col[k]];
            w[row] = s;
        }
        std::swap(v, w);
    }
    return v[b.root_local];
}

BigInt local_diagonal_power(const SimplicialComplex& K, const Simplex& sigma, int power) {
    Simplex sorted = sigma;
    std::sort(sorted.begin(), sorted.end());
    int dim = static_cast<int>(sorted.size()) - 1;
    long long idx = K.simplex_index(dim, sorted);
    if (idx < 0) throw Error(Errc::unknown_simplex, "simplex not in complex");
    LaplacianContext ctx(K, dim);
    return local_diagonal_power(ctx, idx, power);
}

MomentData estimate_moments(const SimplicialComplex& K, int dim, int degree, long long samples,
                            std::uint64_t seed, int threads) {
    LaplacianContext ctx(K, dim);
    return estimate_moments(ctx, degree, samples, seed, threads);
}

MomentData estimate_moments(const LaplacianContext& ctx, int degree, long long samples,
                            std::uint64_t seed, int threads) {
    if (degree < 1) throw Error(Errc::invalid_parameter, "moment degree must be >= 1");
    long long n = ctx.lap.rows;

    MomentData m;
    m.dim = ctx.dim;
    m.degree = degree;
    m.k_bound = ctx.k_bound;
    m.population = n;
    m.exact_mode = samples == 0;
    m.samples = m.exact_mode ? n : samples;
    m.seed = seed;
    int raw_cap = std::min(degree, raw_power_cap);

    // Root draw list; exact mode visits every simplex once.
    std::vector<int> roots;
    if (m.exact_mode) {
        roots.resize(n);
        for (long long i = 0; i < n; ++i) roots[i] = static_cast<int>(i);
    } else {
        if (samples < 1) throw Error(Errc::invalid_parameter, "sample count must be >= 1");
        Rng rng(seed);
        roots.reserve(samples);
        for (long long s = 0; s < samples; ++s)
            roots.push_back(static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n))));
    }

    // Evaluate each distinct root once (the per-root values are pure), then
    // aggregate in draw order so results do not depend on thread scheduling.
    std::vector<int> distinct = roots;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::unordered_map<int, int> slot;
    for (std::size_t i = 0; i < distinct.size(); ++i) slot[distinct[i]] = static_cast<int>(i);

    std::vector<RootValues> values(distinct.size());
    {
        int nthreads = std::max(1, threads);
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= distinct.size()) return;
                values[i] = eval_root(ctx.lap, ctx.k_bound, distinct[i], degree, raw_cap,
                                      m.exact_mode);
            }
        };
        if (nthreads == 1 || distinct.size() < 16) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
    }

    m.cheb.assign(degree + 1, 0.0);
    m.raw.assign(raw_cap + 1, 0.0);
    if (m.exact_mode) m.raw_sums.assign(raw_cap + 1, 0);
    for (int root : roots) {
        const RootValues& rv = values[slot[root]];
        for (int k = 0; k <= degree; ++k) m.cheb[k] += rv.cheb[k];
        for (int r = 0; r <= raw_cap; ++r) m.raw[r] += rv.raw[r];
        if (m.exact_mode)
            for (int r = 0; r <= raw_cap; ++r) m.raw_sums[r] += rv.raw_exact[r];
    }
    double inv = 1.0 / static_cast<double>(roots.size());
    for (auto& c : m.cheb) c *= inv;
    for (auto& r : m.raw) r *= inv;
    if (m.exact_mode)
        for (int r = 0; r <= raw_cap; ++r)
            m.raw[r] = (BigRat(m.raw_sums[r]) / BigRat(m.population)).convert_to<double>();
    m.cheb[0] = 1.0;
    m.raw[0] = 1.0;
    return m;
}

std::vector<double> cheb_from_raw(const std::vector<BigInt>& raw_sums, long long population,
                                  double k_bound, int degree) {
    if (static_cast<int>(raw_sums.size()) < degree + 1)
        throw Error(Errc::invalid_parameter, "need raw moments up to the requested degree");
    // T_k((2t - K)/K) as exact rational polynomials in t, evaluated against
    // the exact raw moment sums. Stable at any degree because nothing is
    // rounded before the final division. k_bound is integer-valued (2LM).
    BigRat K(static_cast<long long>(k_bound));
    std::vector<std::vector<BigRat>> T(degree + 1);
    T[0] = {BigRat(1)};
    if (degree >= 1) T[1] = {BigRat(-1), BigRat(2) / K};
    for (int k = 2; k <= degree; ++k) {
        // T_k = 2 * ((2t - K)/K) * T_{k-1} - T_{k-2}
        std::vector<BigRat> cur(k + 1, BigRat(0));
        for (int j = 0; j < k; ++j) {
            cur[j + 1] += BigRat(4) / K * T[k - 1][j];
            cur[j] -= BigRat(2) * T[k - 1][j];
        }
        for (std::size_t j = 0; j < T[k - 2].size(); ++j) cur[j] -= T[k - 2][j];
        T[k] = std::move(cur);
    }
    std::vector<double> out(degree + 1);
    for (int k = 0; k <= degree; ++k) {
        BigRat acc(0);
        for (std::size_t j = 0; j < T[k].size(); ++j) acc += T[k][j] * BigRat(raw_sums[j]);
        out[k] = (acc / BigRat(population)).convert_to<double>();
    }
    return out;
}

namespace {

std::vector<double> jackson_coefficients(int degree) {
    int N = degree + 1;
    std::vector<double> g(degree + 1);
    double t = M_PI / (N + 1);
    for (int k = 0; k <= degree; ++k)
        g[k] = ((N - k + 1) * std::cos(k * t) + std::sin(k * t) / std::tan(t)) / (N + 1);
    return g;
}

} // namespace

double cdf_at(const MomentData& m, double lambda) {
    if (!(m.k_bound > 0.0)) throw Error(Errc::degenerate_support, "support bound must be positive");
    double y = std::clamp(2.0 * lambda / m.k_bound - 1.0, -1.0, 1.0);
    double theta = std::acos(y);
    auto g = jackson_coefficients(m.degree);
    // Chebyshev coefficients of 1_{x <= y}: c_0 = 1 - theta/pi,
    // c_k = -2 sin(k theta) / (pi k).
    double s = (1.0 - theta / M_PI) * g[0] * m.cheb[0];
    for (int k = 1; k <= m.degree; ++k)
        s -= (2.0 / M_PI) * std::sin(k * theta) / k * g[k] * m.cheb[k];
    return s;
}

std::vector<double> cdf_from_moments(const MomentData& m, const std::vector<double>& grid) {
    if (m.degree < 16) throw Error(Errc::invalid_parameter, "need moments to degree >= 16");
    std::vector<double> out;
    out.reserve(grid.size());
    double running = 0.0;
    for (double lambda : grid) {
        double v = std::clamp(cdf_at(m, lambda), 0.0, 1.0);
        running = std::max(running, v);
        out.push_back(running);
    }
    return out;
}

BettiEstimate kernel_estimate(const SpectralSummary& summary, double lambda_cut) {
    if (!(lambda_cut > 0.0) || lambda_cut >= 1.0)
        throw Error(Errc::invalid_cut, "spectral cut must lie in (0, 1)");
    BettiEstimate est;
    est.dim = summary.dim;
    est.epsilon_star = lambda_cut;
    est.bound_term = std::log(summary.k_bound) / std::log(1.0 / lambda_cut);

    // Value at the cut from the monotonized grid (the grid always carries it).
    double kf = std::clamp(cdf_at(summary.moments, lambda_cut), 0.0, 1.0);
    for (std::size_t j = 0; j < summary.grid.size(); ++j)
        if (summary.grid[j] <= lambda_cut) kf = std::max(kf, summary.cdf[j]);
    est.kernel_fraction = std::min(kf, 1.0);
    est.per_vertex = summary.simplex_density * est.kernel_fraction;
    return est;
}

double hankel_min_eigenvalue(const std::vector<double>& raw, double k_bound) {
    int order = static_cast<int>(std::min<std::size_t>(5, raw.size() / 2));
    if (order < 1) return 0.0;
    double min_ev = 0.0;
    for (int shift = 0; shift <= 1; ++shift) {
        Eigen::MatrixXd H(order, order);
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b)
                H(a, b) = raw[a + b + shift] / std::pow(k_bound, a + b + shift);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> s(H, Eigen::EigenvaluesOnly);
        min_ev = std::min(min_ev, s.eigenvalues()(0));
    }
    return min_ev;
}

EstimateResult estimate_betti_spectral(const SimplicialComplex& K, int dim, double eps,
                                       std::uint64_t seed, const EstimatorOptions& opt) {
    if (!(eps > 0.0) || eps >= 1.0) throw Error(Errc::invalid_parameter, "eps must lie in (0, 1)");
    if (K.vertex_count() == 0) throw Error(Errc::empty_complex, "empty complex");
    LaplacianContext ctx(K, dim);

    int degree = opt.degree > 0
                     ? opt.degree
                     : std::min(256, static_cast<int>(std::ceil(std::max(32.0, 8.0 / eps))));
    long long budget =
        static_cast<long long>(std::ceil(8.0 / (eps * eps) * std::log(2.0 / 0.05)));
    long long samples = opt.samples >= 0 ? opt.samples : budget;
    // Small populations are cheaper to scan outright than to sample.
    if (samples > 0 && ctx.lap.rows <= std::min<long long>(samples, 2048)) samples = 0;

    SpectralSummary summary;
    summary.dim = dim;
    summary.n_simplices = ctx.lap.rows;
    summary.n_vertices = static_cast<long long>(K.vertex_count());
    summary.simplex_density =
        static_cast<double>(summary.n_simplices) / static_cast<double>(summary.n_vertices);
    summary.k_bound = ctx.k_bound;
    summary.moments = estimate_moments(ctx, degree, samples, seed, opt.threads);

    double cut = opt.cut;
    if (cut == 0.0) {
        // A flat stretch of the distribution function next to 0 signals a
        // spectral gap; read the kernel mass in the middle of it. Otherwise
        // fall back to the eps-driven cut.
        double flat = cdf_at(summary.moments, 0.75) - cdf_at(summary.moments, 0.1);
        cut = (flat <= 0.01) ? 0.5 : eps * eps;
    }

    summary.grid.clear();
    for (int j = 0; j <= 256; ++j)
        summary.grid.push_back(summary.k_bound * static_cast<double>(j) / 256.0);
    for (int j = 1; j < 100; ++j) summary.grid.push_back(0.01 * j);
    summary.grid.push_back(cut);
    std::sort(summary.grid.begin(), summary.grid.end());
    summary.grid.erase(std::unique(summary.grid.begin(), summary.grid.end()), summary.grid.end());
    summary.cdf = cdf_from_moments(summary.moments, summary.grid);

    EstimateResult res;
    res.summary = std::move(summary);
    res.estimate = kernel_estimate(res.summary, cut);
    res.estimate.confidence_rho = eps;
    res.estimate.confidence_delta = 0.05;
    return res;
}

} // namespace betti
