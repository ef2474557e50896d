#include "bettiscope.h"

#include <cstring>
#include <sstream>

#include <json.hpp>

#include "betti/estimator.hpp"
#include "betti/exact.hpp"
#include "betti/families.hpp"
#include "betti/io.hpp"
#include "betti/spectra.hpp"
#include "betti/tester.hpp"
#include "betti/verify.hpp"

using nlohmann::json;

struct bs_complex {
    betti::SimplicialComplex k;
};

struct bs_corpus {
    int radius = 0;
    double rho = 0.0;
    std::vector<betti::SimplicialComplex> members;
    betti::ReferenceCorpus built;
    bool dirty = true;
};

namespace {

thread_local std::string g_last_error;

bs_status status_of(const betti::Error& e) {
    using betti::Errc;
    switch (e.code()) {
        case Errc::invalid_parameter: return BS_ERR_INVALID_ARGUMENT;
        case Errc::parse_error: return BS_ERR_PARSE;
        case Errc::degree_exceeded: return BS_ERR_DEGREE_EXCEEDED;
        case Errc::duplicate_simplex: return BS_ERR_DUPLICATE_SIMPLEX;
        case Errc::unknown_vertex: return BS_ERR_UNKNOWN_VERTEX;
        case Errc::unknown_simplex: return BS_ERR_UNKNOWN_SIMPLEX;
        case Errc::empty_complex:
        case Errc::empty_dimension: return BS_ERR_EMPTY;
        case Errc::too_large: return BS_ERR_TOO_LARGE;
        case Errc::radius_mismatch: return BS_ERR_RADIUS_MISMATCH;
        case Errc::no_match: return BS_ERR_NO_MATCH;
        case Errc::degenerate_support:
        case Errc::invalid_cut: return BS_ERR_INVALID_ARGUMENT;
        case Errc::io_error: return BS_ERR_IO;
    }
    return BS_ERR_INTERNAL;
}

template <typename Fn>
bs_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return BS_OK;
    } catch (const betti::Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return BS_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return BS_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

json moments_to_json(const betti::MomentData& m) {
    json j;
    j["dim"] = m.dim;
    j["degree"] = m.degree;
    j["k_bound"] = m.k_bound;
    j["population"] = m.population;
    j["samples"] = m.samples;
    j["mode"] = m.exact_mode ? "exact" : "sampled";
    j["seed"] = m.seed;
    j["cheb_moments"] = m.cheb;
    j["raw_moments"] = m.raw;
    return j;
}

} // namespace

extern "C" {

const char* bs_version(void) { return "0.1.0"; }

const char* bs_last_error(void) { return g_last_error.c_str(); }

void bs_string_free(char* s) { std::free(s); }

void bs_complex_free(bs_complex* c) { delete c; }

bs_status bs_complex_parse(const char* text, bs_complex** out) {
    return guarded([&] {
        if (!text || !out) throw betti::Error(betti::Errc::invalid_parameter, "null argument");
        *out = new bs_complex{betti::parse_cplx(text)};
    });
}

bs_status bs_complex_read_file(const char* path, bs_complex** out) {
    return guarded([&] {
        if (!path || !out) throw betti::Error(betti::Errc::invalid_parameter, "null argument");
        *out = new bs_complex{betti::read_cplx_file(path)};
    });
}

bs_status bs_complex_to_text(const bs_complex* c, char** out) {
    return guarded([&] {
        if (!c || !out) throw betti::Error(betti::Errc::invalid_parameter, "null argument");
        *out = dup_string(betti::write_cplx(c->k));
    });
}

bs_status bs_complex_write_file(const bs_complex* c, const char* path) {
    return guarded([&] {
        if (!c || !path) throw betti::Error(betti::Errc::invalid_parameter, "null argument");
        betti::write_cplx_file(c->k, path);
    });
}

bs_status bs_complex_build(const int64_t* flat_vertices, const int32_t* tuple_sizes,
                           int32_t tuple_count, int32_t degree_bound, bs_complex** out) {
    return guarded([&] {
        if (!out || (tuple_count > 0 && (!flat_vertices || !tuple_sizes)))
            throw betti::Error(betti::Errc::invalid_parameter, "null argument");
        std::vector<betti::Simplex> tuples;
        std::size_t pos = 0;
        for (int32_t t = 0; t < tuple_count; ++t) {
            betti::Simplex s(flat_vertices + pos, flat_vertices + pos + tuple_sizes[t]);
            pos += tuple_sizes[t];
            tuples.push_back(std::move(s));
        }
        *out = new bs_complex{betti::SimplicialComplex::build(std::move(tuples), degree_bound)};
    });
}

bs_status bs_generate(const char* kind, int32_t n, int32_t copies, int32_t degree_bound,
                      uint64_t seed, bs_complex** out) {
    return guarded([&] {
        if (!kind || !out) throw betti::Error(betti::Errc::invalid_parameter, "null argument");
        std::string k = kind;
        betti::SimplicialComplex result;
        betti::FamilySpec spec;
        spec.n = n;
        spec.degree_bound = degree_bound;
        spec.seed = seed;
        if (k == "torus") spec.kind = betti::FamilyKind::torus_grid;
        else if (k == "sphere") spec.kind = betti::FamilyKind::sphere_boundary;
        else if (k == "cycle") spec.kind = betti::FamilyKind::cycle;
        else if (k == "path") spec.kind = betti::FamilyKind::path;
        else if (k == "flag") spec.kind = betti::FamilyKind::random_flag;
        else if (k == "triangles" || k == "solid-triangles") {
            std::vector<betti::Simplex> base;
            if (k == "triangles") base = {{0, 1}, {0, 2}, {1, 2}};
            else base = {{0, 1, 2}};
            result = betti::SimplicialComplex::build(base, degree_bound ? degree_bound : 2);
            *out = new bs_complex{betti::disjoint_union(result, copies < 1 ? 1 : copies)};
            return;
        } else {
            throw betti::Error(betti::Errc::invalid_parameter, "unknown family kind: " + k);
        }
        result = betti::generate(spec);
        if (copies > 1) result = betti::disjoint_union(result, copies);
        *out = new bs_complex{std::move(result)};
    });
}

int32_t bs_complex_dimension(const bs_complex* c) { return c ? c->k.dimension() : -1; }

int32_t bs_complex_degree_bound(const bs_complex* c) { return c ? c->k.degree_bound() : 0; }

int64_t bs_complex_simplex_count(const bs_complex* c, int32_t dim) {
    return c ? static_cast<int64_t>(c->k.simplex_count(dim)) : 0;
}

bs_status bs_complex_digest(const bs_complex* c, char** hex_out) {
    return guarded([&] {
        if (!c || !hex_out) throw betti::Error(betti::Errc::invalid_parameter, "null argument");
        *hex_out = dup_string(betti::complex_digest(c->k));
    });
}

bs_status bs_orient_random(const bs_complex* c, uint64_t seed, bs_complex** out) {
    return guarded([&] {
        if (!c || !out) throw betti::Error(betti::Errc::invalid_parameter, "null argument");
        *out = new bs_complex{c->k.orient_random(seed)};
    });
}

bs_status bs_betti_exact(const bs_complex* c, int64_t* out, int32_t cap, int32_t* out_len) {
    return guarded([&] {
        if (!c || !out || !out_len)
            throw betti::Error(betti::Errc::invalid_parameter, "null argument");
        auto b = betti::betti_exact(c->k);
        if (static_cast<int32_t>(b.size()) > cap)
            throw betti::Error(betti::Errc::invalid_parameter, "output buffer too small");
        for (std::size_t i = 0; i < b.size(); ++i) out[i] = b[i];
        *out_len = static_cast<int32_t>(b.size());
    });
}

bs_status bs_spectrum_json(const bs_complex* c, int32_t dim, int64_t size_cap, char** json_out) {
    return guarded([&] {
        if (!c || !json_out) throw betti::Error(betti::Errc::invalid_parameter, "null argument");
        long long cap = size_cap > 0 ? size_cap : 2000;
        betti::SparseOperator L = betti::laplacian(c->k, dim);
        betti::SpectralMeasure m = betti::exact_spectrum(L, cap);
        json j;
        j["dim"] = dim;
        j["n"] = m.n;
        j["k_bound"] = m.support_bound;
        j["kernel_dimension"] = m.zero_count;
        j["eigenvalues_positive"] = m.positives;
        j["log_determinant"] = betti::log_determinant_c(m);
        if (m.n <= 300) j["pseudo_determinant"] = betti::pseudo_determinant(L, cap).str();
        *json_out = dup_string(j.dump(2));
    });
}

bs_status bs_laplacian_triplets(const bs_complex* c, int32_t dim, char** text_out) {
    return guarded([&] {
        if (!c || !text_out) throw betti::Error(betti::Errc::invalid_parameter, "null argument");
        *text_out = dup_string(betti::to_triplet_text(betti::laplacian(c->k, dim)));
    });
}

bs_status bs_verify_json(const bs_complex* c, int64_t pdet_size_cap, char** json_out) {
    return guarded([&] {
        if (!c || !json_out) throw betti::Error(betti::Errc::invalid_parameter, "null argument");
        auto results = betti::verify_complex(c->k, pdet_size_cap > 0 ? pdet_size_cap : 300);
        json props = json::array();
        bool all = true;
        for (const auto& r : results) {
            props.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
            all = all && r.pass;
        }
        json j;
        j["properties"] = props;
        j["all_pass"] = all;
        *json_out = dup_string(j.dump(2));
    });
}

bs_status bs_profile_json(const bs_complex* c, int32_t radius, int32_t root_dim, int64_t samples,
                          uint64_t seed, int32_t threads, char** json_out) {
    return guarded([&] {
        if (!c || !json_out) throw betti::Error(betti::Errc::invalid_parameter, "null argument");
        betti::LocalProfile p;
        if (samples == 0) {
            p = betti::exact_profile(c->k, radius, root_dim, threads > 0 ? threads : 1);
        } else {
            if (root_dim != 0)
                throw betti::Error(betti::Errc::invalid_parameter,
                                   "empirical profiles sample vertices (root_dim 0)");
            p = betti::empirical_profile(c->k, radius, samples, seed);
        }
        *json_out = dup_string(betti::profile_to_json(p));
    });
}

bs_status bs_sampling_distance(const bs_complex* a, const bs_complex* b, int32_t r_max,
                               int32_t threads, double* value, double* truncation) {
    return guarded([&] {
        if (!a || !b || !value || !truncation)
            throw betti::Error(betti::Errc::invalid_parameter, "null argument");
        int t = threads > 0 ? threads : 1;
        betti::RootCodeTable ta(a->k, r_max, 0, t);
        betti::RootCodeTable tb(b->k, r_max, 0, t);
        auto d = betti::sampling_distance(betti::exact_profiles_upto(ta),
                                          betti::exact_profiles_upto(tb), r_max);
        *value = d.value;
        *truncation = d.truncation;
    });
}

bs_status bs_sample_size(double rho, double eps, int64_t class_bound, int64_t* out) {
    return guarded([&] {
        if (!out) throw betti::Error(betti::Errc::invalid_parameter, "null argument");
        *out = betti::sample_size_for(rho, eps, class_bound);
    });
}

bs_status bs_corpus_create(int32_t radius, double rho, bs_corpus** out) {
    return guarded([&] {
        if (!out) throw betti::Error(betti::Errc::invalid_parameter, "null argument");
        if (radius < 1) throw betti::Error(betti::Errc::invalid_parameter, "radius must be >= 1");
        if (!(rho > 0.0) || rho >= 1.0)
            throw betti::Error(betti::Errc::invalid_parameter, "rho must lie in (0, 1)");
        auto* c = new bs_corpus;
        c->radius = radius;
        c->rho = rho;
        *out = c;
    });
}

bs_status bs_corpus_add(bs_corpus* corpus, const bs_complex* member, int32_t threads) {
    return guarded([&] {
        if (!corpus || !member) throw betti::Error(betti::Errc::invalid_parameter, "null argument");
        corpus->members.push_back(member->k);
        corpus->built = betti::ReferenceCorpus::build(corpus->members, corpus->radius, corpus->rho,
                                                      threads > 0 ? threads : 1);
        corpus->dirty = false;
    });
}

int32_t bs_corpus_size(const bs_corpus* corpus) {
    return corpus ? static_cast<int32_t>(corpus->members.size()) : 0;
}

void bs_corpus_free(bs_corpus* corpus) { delete corpus; }

bs_status bs_test_betti_json(const bs_complex* input, const bs_corpus* corpus, int32_t dim,
                             double eps, uint64_t seed, char** json_out) {
    return guarded([&] {
        if (!input || !corpus || !json_out)
            throw betti::Error(betti::Errc::invalid_parameter, "null argument");
        if (corpus->members.empty())
            throw betti::Error(betti::Errc::invalid_parameter, "corpus is empty");
        auto res = betti::test_betti(input->k, corpus->built, dim, eps, seed);
        const auto& entry = corpus->built.entries[res.matched_index];
        json j;
        j["estimate_per_vertex"] = res.estimate;
        j["matched_index"] = res.matched_index;
        j["samples_used"] = res.samples_used;
        j["matched_betti"] = entry.betti;
        j["matched_vertices"] = entry.vertex_count;
        j["radius"] = corpus->radius;
        j["rho"] = corpus->rho;
        *json_out = dup_string(j.dump(2));
    });
}

bs_status bs_estimate_json(const bs_complex* c, int32_t dim, double eps, uint64_t seed,
                           int32_t moments, int64_t samples, double cut, int32_t threads,
                           char** json_out) {
    return guarded([&] {
        if (!c || !json_out) throw betti::Error(betti::Errc::invalid_parameter, "null argument");
        betti::EstimatorOptions opt;
        opt.degree = moments;
        opt.samples = samples;
        opt.cut = cut;
        opt.threads = threads > 0 ? threads : 1;
        auto res = betti::estimate_betti_spectral(c->k, dim, eps, seed, opt);
        json j;
        json summary;
        summary["dim"] = res.summary.dim;
        summary["n_simplices"] = res.summary.n_simplices;
        summary["n_vertices"] = res.summary.n_vertices;
        summary["simplex_density"] = res.summary.simplex_density;
        summary["k_bound"] = res.summary.k_bound;
        summary["moments"] = moments_to_json(res.summary.moments);
        json grid = json::array();
        for (std::size_t i = 0; i < res.summary.grid.size(); ++i)
            grid.push_back({res.summary.grid[i], res.summary.cdf[i]});
        summary["cdf_grid"] = grid;
        j["summary"] = summary;
        j["estimate"] = {{"dim", res.estimate.dim},
                         {"per_vertex", res.estimate.per_vertex},
                         {"kernel_fraction", res.estimate.kernel_fraction},
                         {"epsilon_star", res.estimate.epsilon_star},
                         {"bound_term", res.estimate.bound_term},
                         {"confidence_rho", res.estimate.confidence_rho},
                         {"confidence_delta", res.estimate.confidence_delta}};
        *json_out = dup_string(j.dump(2));
    });
}

} // extern "C"
