#include "betti/profile.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <thread>

namespace betti {

namespace {

long long root_count_for(const SimplicialComplex& K, int root_dim) {
    long long n = static_cast<long long>(K.simplex_count(root_dim));
    if (n == 0)
        throw Error(Errc::empty_complex, root_dim == 0 ? "complex has no vertices"
                                                       : "complex has no simplices of this dimension");
    return n;
}

std::string code_of_root(const SimplicialComplex& K, int root_dim, long long root, int radius) {
    if (root_dim == 0)
        return canonical_code(extract_vertex_ball(K, K.vertex_ids()[root], radius)).bytes;
    return canonical_code(extract_simplex_ball(K, K.simplices(root_dim)[root], radius)).bytes;
}

void run_blocks(long long count, int threads, const std::function<void(long long, long long)>& fn) {
    threads = std::max(1, threads);
    if (threads == 1 || count < 128) {
        fn(0, count);
        return;
    }
    const long long block = 256;
    std::atomic<long long> next{0};
    auto worker = [&]() {
        for (;;) {
            long long b = next.fetch_add(1);
            long long begin = b * block;
            if (begin >= count) return;
            fn(begin, std::min(count, begin + block));
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

} // namespace

RootCodeTable::RootCodeTable(const SimplicialComplex& K, int r_max, int root_dim, int threads)
    : r_max_(r_max), root_dim_(root_dim) {
    if (r_max < 1) throw Error(Errc::invalid_parameter, "r_max must be >= 1");
    long long n = root_count_for(K, root_dim);
    codes_.assign(r_max, std::vector<std::string>(n));
    run_blocks(n, threads, [&](long long begin, long long end) {
        for (long long i = begin; i < end; ++i) {
            if (root_dim == 0) {
                auto balls = extract_vertex_balls_upto(K, K.vertex_ids()[i], r_max);
                for (int r = 1; r <= r_max; ++r) codes_[r - 1][i] = canonical_code(balls[r - 1]).bytes;
            } else {
                for (int r = 1; r <= r_max; ++r)
                    codes_[r - 1][i] =
                        canonical_code(extract_simplex_ball(K, K.simplices(root_dim)[i], r)).bytes;
            }
        }
    });
}

LocalProfile exact_profile(const SimplicialComplex& K, int radius, int root_dim, int threads) {
    if (radius < 0) throw Error(Errc::invalid_parameter, "radius must be non-negative");
    long long n = root_count_for(K, root_dim);

    LocalProfile p;
    p.radius = radius;
    p.root_dimension = root_dim;
    p.exact = true;
    p.total = n;

    std::mutex merge_mutex;
    run_blocks(n, threads, [&](long long begin, long long end) {
        std::map<std::string, long long> local;
        for (long long i = begin; i < end; ++i) ++local[code_of_root(K, root_dim, i, radius)];
        std::lock_guard<std::mutex> lock(merge_mutex);
        for (auto& [code, c] : local) p.counts[code] += c;
    });
    return p;
}

LocalProfile empirical_profile(const SimplicialComplex& K, int radius, long long samples,
                               std::uint64_t seed) {
    if (radius < 0) throw Error(Errc::invalid_parameter, "radius must be non-negative");
    if (samples < 1) throw Error(Errc::invalid_parameter, "sample count must be >= 1");
    long long n = root_count_for(K, 0);

    LocalProfile p;
    p.radius = radius;
    p.root_dimension = 0;
    p.exact = false;
    p.total = samples;
    p.sample_size = samples;

    std::vector<std::string> cache(n);
    std::vector<char> cached(n, 0);
    Rng rng(seed);
    for (long long s = 0; s < samples; ++s) {
        long long i = static_cast<long long>(rng.bounded(static_cast<std::uint64_t>(n)));
        if (!cached[i]) {
            cache[i] = code_of_root(K, 0, i, radius);
            cached[i] = 1;
        }
        ++p.counts[cache[i]];
    }
    return p;
}

std::vector<LocalProfile> exact_profiles_upto(const RootCodeTable& table) {
    std::vector<LocalProfile> out;
    for (int r = 1; r <= table.r_max(); ++r) {
        LocalProfile p;
        p.radius = r;
        p.root_dimension = table.root_dim();
        p.exact = true;
        p.total = table.root_count();
        for (long long i = 0; i < table.root_count(); ++i) ++p.counts[table.code(r, i)];
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<LocalProfile> empirical_profiles_upto(const RootCodeTable& table, long long samples,
                                                  std::uint64_t seed) {
    if (samples < 1) throw Error(Errc::invalid_parameter, "sample count must be >= 1");
    std::vector<LocalProfile> out(table.r_max());
    for (int r = 1; r <= table.r_max(); ++r) {
        out[r - 1].radius = r;
        out[r - 1].root_dimension = table.root_dim();
        out[r - 1].exact = false;
        out[r - 1].total = samples;
        out[r - 1].sample_size = samples;
    }
    Rng rng(seed);
    for (long long s = 0; s < samples; ++s) {
        long long i = static_cast<long long>(rng.bounded(static_cast<std::uint64_t>(table.root_count())));
        for (int r = 1; r <= table.r_max(); ++r) ++out[r - 1].counts[table.code(r, i)];
    }
    return out;
}

long long sample_size_for(double rho, double eps, long long class_count) {
    if (!(rho > 0.0) || rho >= 1.0 + 1e-12 || !(eps > 0.0) || eps >= 1.0)
        throw Error(Errc::invalid_parameter, "rho and eps must lie in (0, 1)");
    if (class_count < 1) throw Error(Errc::invalid_parameter, "class count must be >= 1");
    long double n = (200.0L / (static_cast<long double>(rho) * rho)) *
                    std::log(2.0L * static_cast<long double>(class_count) / eps);
    return static_cast<long long>(std::ceil(n));
}

SamplingDistance sampling_distance(const std::vector<LocalProfile>& pk,
                                   const std::vector<LocalProfile>& pl, int r_max) {
    if (r_max < 1) throw Error(Errc::invalid_parameter, "r_max must be >= 1");
    auto find_radius = [&](const std::vector<LocalProfile>& ps, int r) -> const LocalProfile& {
        for (const auto& p : ps)
            if (p.radius == r) {
                if (!p.exact) throw Error(Errc::radius_mismatch, "profiles must be exact mode");
                return p;
            }
        throw Error(Errc::radius_mismatch, "missing profile at radius " + std::to_string(r));
    };

    SamplingDistance d;
    for (int r = 1; r <= r_max; ++r) {
        const LocalProfile& a = find_radius(pk, r);
        const LocalProfile& b = find_radius(pl, r);
        std::set<std::string> classes;
        for (const auto& [code, c] : a.counts) classes.insert(code);
        for (const auto& [code, c] : b.counts) classes.insert(code);
        double tv = 0.0;
        for (const auto& code : classes) tv += std::abs(a.frequency(code) - b.frequency(code));
        d.value += std::ldexp(0.5 * tv, -r); // 2^{-r} * (1/2) * l1
    }
    d.truncation = std::ldexp(1.0, -r_max);
    return d;
}

} // namespace betti
