#ifndef BETTI_TESTER_HPP
#define BETTI_TESTER_HPP

#include "betti/exact.hpp"
#include "betti/profile.hpp"

namespace betti {

struct CorpusEntry {
    SimplicialComplex complex;
    std::vector<LocalProfile> profiles; // exact, radii 1..r
    std::vector<long long> betti;
    long long vertex_count = 0;
};

/// Explicit finite reference list: the constructive stand-in for an
/// existence-only covering family. Matching against it can fail (NoMatch),
/// which signals that the corpus does not cover the input's local statistics.
struct ReferenceCorpus {
    int radius = 0;
    double rho = 0.0;
    std::vector<CorpusEntry> entries;

    static ReferenceCorpus build(const std::vector<SimplicialComplex>& members, int radius,
                                 double rho, int threads = 1);

    /// Distinct ball classes across all entries and radii.
    long long class_count() const;
};

struct TesterResult {
    double estimate = 0.0;  // b^i(L^j) / |V(L^j)| of the matched entry
    int matched_index = -1; // j, 0-based
    long long samples_used = 0;
};

/// Samples vertices of M, compares the empirical class frequencies at radii
/// <= r against each corpus entry in sup-norm, and returns the normalized
/// Betti number of the first entry within rho/5. Throws Errc::no_match when
/// no entry qualifies.
TesterResult test_betti(const SimplicialComplex& M, const ReferenceCorpus& corpus, int dim,
                        double eps, std::uint64_t seed);

} // namespace betti

#endif
