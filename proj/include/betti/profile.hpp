#ifndef BETTI_PROFILE_HPP
#define BETTI_PROFILE_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "betti/canonical.hpp"

namespace betti {

/// Distribution over rooted-ball isomorphism classes at one radius, either
/// exact (every root counted once) or empirical (sampled with replacement).
struct LocalProfile {
    int radius = 0;
    int root_dimension = 0;
    bool exact = true;
    long long total = 0;       // number of roots counted
    long long sample_size = 0; // N when empirical
    std::map<std::string, long long> counts; // canonical code bytes -> count

    double frequency(const std::string& code) const {
        auto it = counts.find(code);
        return (it == counts.end() || total == 0)
                   ? 0.0
                   : static_cast<double>(it->second) / static_cast<double>(total);
    }
};

/// Per-root canonical codes of one complex at radii 1..r_max, built once and
/// shared read-only by samplers. Thread-safe after construction.
class RootCodeTable {
public:
    RootCodeTable(const SimplicialComplex& K, int r_max, int root_dim, int threads = 1);

    int r_max() const { return r_max_; }
    int root_dim() const { return root_dim_; }
    long long root_count() const { return static_cast<long long>(codes_[0].size()); }
    const std::string& code(int radius, long long root) const { return codes_[radius - 1][root]; }

private:
    int r_max_;
    int root_dim_;
    std::vector<std::vector<std::string>> codes_; // [radius-1][root index]
};

/// Counts the r-ball class of every root (vertices when root_dim = 0, else
/// the root_dim-simplices).
LocalProfile exact_profile(const SimplicialComplex& K, int radius, int root_dim = 0,
                           int threads = 1);

/// Frequencies of N roots sampled uniformly with replacement; deterministic
/// in the seed.
LocalProfile empirical_profile(const SimplicialComplex& K, int radius, long long samples,
                               std::uint64_t seed);

/// Profiles at radii 1..r_max from one shared table.
std::vector<LocalProfile> exact_profiles_upto(const RootCodeTable& table);
std::vector<LocalProfile> empirical_profiles_upto(const RootCodeTable& table, long long samples,
                                                  std::uint64_t seed);

/// Two-sided Hoeffding count with a union bound over class_count classes at
/// per-class deviation rho/10: N = ceil((200/rho^2) * ln(2*class_count/eps)).
long long sample_size_for(double rho, double eps, long long class_count);

/// Truncated sampling pseudo-metric: sum over radii r' = 1..r_max of
/// 2^{-r'} times half the l1 distance between the exact class frequencies.
/// `truncation` bounds the mass of the discarded radii (2^{-r_max}).
struct SamplingDistance {
    double value = 0.0;
    double truncation = 0.0;
};
SamplingDistance sampling_distance(const std::vector<LocalProfile>& profiles_k,
                                   const std::vector<LocalProfile>& profiles_l, int r_max);

} // namespace betti

#endif
