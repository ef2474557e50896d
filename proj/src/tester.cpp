#include "betti/tester.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace betti {

ReferenceCorpus ReferenceCorpus::build(const std::vector<SimplicialComplex>& members, int radius,
                                       double rho, int threads) {
    if (members.empty()) throw Error(Errc::invalid_parameter, "corpus must be nonempty");
    if (radius < 1) throw Error(Errc::invalid_parameter, "corpus radius must be >= 1");
    if (!(rho > 0.0) || rho >= 1.0) throw Error(Errc::invalid_parameter, "rho must lie in (0, 1)");

    ReferenceCorpus c;
    c.radius = radius;
    c.rho = rho;
    int d = members.front().degree_bound();
    for (const auto& m : members) {
        if (m.degree_bound() != d)
            throw Error(Errc::invalid_parameter, "corpus members must share one degree bound");
        CorpusEntry e;
        e.complex = m;
        RootCodeTable table(m, radius, 0, threads);
        e.profiles = exact_profiles_upto(table);
        e.betti = betti_exact(m);
        e.vertex_count = static_cast<long long>(m.vertex_count());
        c.entries.push_back(std::move(e));
    }
    return c;
}

long long ReferenceCorpus::class_count() const {
    std::set<std::string> classes;
    for (const auto& e : entries)
        for (const auto& p : e.profiles)
            for (const auto& [code, cnt] : p.counts) classes.insert(code);
    return static_cast<long long>(classes.size());
}

namespace {

double sup_deviation(const std::vector<LocalProfile>& empirical,
                     const std::vector<LocalProfile>& reference) {
    double sup = 0.0;
    for (std::size_t r = 0; r < empirical.size(); ++r) {
        std::set<std::string> classes;
        for (const auto& [code, c] : empirical[r].counts) classes.insert(code);
        for (const auto& [code, c] : reference[r].counts) classes.insert(code);
        for (const auto& code : classes)
            sup = std::max(sup, std::abs(empirical[r].frequency(code) - reference[r].frequency(code)));
    }
    return sup;
}

} // namespace

TesterResult test_betti(const SimplicialComplex& M, const ReferenceCorpus& corpus, int dim,
                        double eps, std::uint64_t seed) {
    if (corpus.entries.empty()) throw Error(Errc::invalid_parameter, "corpus is empty");
    if (!(eps > 0.0) || eps >= 1.0) throw Error(Errc::invalid_parameter, "eps must lie in (0, 1)");
    if (dim < 0) throw Error(Errc::invalid_parameter, "dimension must be non-negative");

    RootCodeTable table(M, corpus.radius, 0);

    // The union bound only needs the classes that can actually appear: the
    // corpus classes plus whatever the sample reveals, doubled for headroom.
    long long class_bound = 2 * std::max<long long>(1, corpus.class_count());
    long long n = sample_size_for(corpus.rho, eps, class_bound);
    auto empirical = empirical_profiles_upto(table, n, seed);

    std::set<std::string> observed;
    for (const auto& p : empirical)
        for (const auto& [code, c] : p.counts) observed.insert(code);
    for (const auto& e : corpus.entries)
        for (const auto& p : e.profiles)
            for (const auto& [code, c] : p.counts) observed.insert(code);
    long long grown = 2 * static_cast<long long>(observed.size());
    if (grown > class_bound) {
        long long n2 = sample_size_for(corpus.rho, eps, grown);
        if (n2 > n) {
            n = n2;
            empirical = empirical_profiles_upto(table, n, seed);
        }
    }

    double threshold = corpus.rho / 5.0;
    for (std::size_t j = 0; j < corpus.entries.size(); ++j) {
        const CorpusEntry& e = corpus.entries[j];
        if (sup_deviation(empirical, e.profiles) < threshold) {
            TesterResult res;
            long long b = dim < static_cast<int>(e.betti.size()) ? e.betti[dim] : 0;
            res.estimate = static_cast<double>(b) / static_cast<double>(e.vertex_count);
            res.matched_index = static_cast<int>(j);
            res.samples_used = n;
            return res;
        }
    }
    throw Error(Errc::no_match,
                "no corpus entry within rho/5 = " + std::to_string(threshold) +
                    " of the sampled local statistics");
}

} // namespace betti
