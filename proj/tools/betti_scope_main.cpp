// betti-scope: exact and sampled Betti-number computations for bounded-degree
// simplicial complexes, over the shared-library C API.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bettiscope.h"

using nlohmann::json;

namespace {

constexpr int kExitError = 2;   // parse / validation errors
constexpr int kExitNoMatch = 3; // tester found no covering corpus entry

struct ComplexHandle {
    bs_complex* ptr = nullptr;
    ~ComplexHandle() { bs_complex_free(ptr); }
    ComplexHandle() = default;
    ComplexHandle(ComplexHandle&& o) noexcept : ptr(o.ptr) { o.ptr = nullptr; }
    ComplexHandle(const ComplexHandle&) = delete;
};

struct CorpusHandle {
    bs_corpus* ptr = nullptr;
    ~CorpusHandle() { bs_corpus_free(ptr); }
};

[[noreturn]] void fail(bs_status st) {
    std::cerr << "error: " << bs_last_error() << "\n";
    std::exit(st == BS_ERR_NO_MATCH ? kExitNoMatch : kExitError);
}

void check(bs_status st) {
    if (st != BS_OK) fail(st);
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    bs_string_free(s);
    return out;
}

ComplexHandle load_complex(const std::string& path) {
    ComplexHandle h;
    check(bs_complex_read_file(path.c_str(), &h.ptr));
    return h;
}

int default_threads() {
    if (const char* env = std::getenv("BETTI_SCOPE_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    return 1;
}

class Report {
public:
    explicit Report(std::string command) {
        body_["schema_version"] = 1;
        body_["command"] = std::move(command);
        body_["inputs"] = json::array();
        start_ = std::chrono::steady_clock::now();
    }

    json& params() { return body_["params"]; }

    void add_input(const std::string& path, bs_complex* c) {
        char* digest = nullptr;
        check(bs_complex_digest(c, &digest));
        body_["inputs"].push_back({{"path", path}, {"digest", take_string(digest)}});
    }

    void set_outputs(json outputs) { body_["outputs"] = std::move(outputs); }

    void write(const std::string& path) {
        if (path.empty()) return;
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start_)
                           .count();
        body_["timings"] = {{"wall_ms", elapsed}};
        std::ofstream out(path);
        if (!out) {
            std::cerr << "error: cannot write report to " << path << "\n";
            std::exit(kExitError);
        }
        out << body_.dump(2) << "\n";
    }

private:
    json body_;
    std::chrono::steady_clock::time_point start_;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Betti numbers of bounded-degree simplicial complexes"};
    app.require_subcommand(1);
    int threads = default_threads();
    app.add_option("--threads", threads, "worker threads (env BETTI_SCOPE_THREADS)");

    auto* gen = app.add_subcommand("gen", "generate a complex family member");
    std::string gen_kind = "torus", gen_out;
    int gen_n = 4, gen_copies = 1, gen_degree = 0;
    std::uint64_t gen_seed = 0;
    gen->add_option("--kind", gen_kind, "torus|sphere|cycle|path|flag|triangles|solid-triangles");
    gen->add_option("--n", gen_n, "size parameter");
    gen->add_option("--copies", gen_copies, "disjoint copies");
    gen->add_option("--degree-bound", gen_degree, "declared degree bound (0 = natural)");
    gen->add_option("--seed", gen_seed, "seed for random kinds");
    gen->add_option("-o,--output", gen_out, "output .cplx path")->required();

    auto* betti_cmd = app.add_subcommand("betti", "exact Betti numbers");
    std::string betti_file, betti_report;
    betti_cmd->add_option("file", betti_file, ".cplx input")->required();
    betti_cmd->add_option("--report", betti_report, "write a JSON run report");

    auto* spectrum = app.add_subcommand("spectrum", "exact Laplacian spectrum");
    std::string spec_file, spec_report, spec_matrix_out;
    int spec_dim = 0;
    long long spec_cap = 2000;
    spectrum->add_option("file", spec_file, ".cplx input")->required();
    spectrum->add_option("--dim", spec_dim, "Laplacian dimension i");
    spectrum->add_option("--cap", spec_cap, "dense eigensolve size cap");
    spectrum->add_option("--matrix-out", spec_matrix_out, "write Delta^i as triplet text");
    spectrum->add_option("--report", spec_report, "write a JSON run report");

    auto* profile = app.add_subcommand("profile", "rooted-ball class statistics");
    std::string prof_file, prof_out, prof_report;
    int prof_radius = 1, prof_root_dim = 0;
    long long prof_samples = 0;
    std::uint64_t prof_seed = 0;
    profile->add_option("file", prof_file, ".cplx input")->required();
    profile->add_option("--radius", prof_radius, "ball radius")->required();
    profile->add_option("--root-dim", prof_root_dim, "0 = vertex-rooted, i = simplex-rooted");
    profile->add_option("--samples", prof_samples, "0 = exact over all roots");
    profile->add_option("--seed", prof_seed, "sampling seed");
    profile->add_option("-o,--output", prof_out, "write profile JSON to file");
    profile->add_option("--report", prof_report, "write a JSON run report");

    auto* distance = app.add_subcommand("distance", "truncated sampling pseudo-metric");
    std::string dist_a, dist_b, dist_report;
    int dist_rmax = 2;
    distance->add_option("first", dist_a, ".cplx input")->required();
    distance->add_option("second", dist_b, ".cplx input")->required();
    distance->add_option("--rmax", dist_rmax, "truncation radius");
    distance->add_option("--report", dist_report, "write a JSON run report");

    auto* estimate = app.add_subcommand("estimate", "spectral Betti estimate");
    std::string est_file, est_report;
    int est_dim = 1, est_moments = 0;
    long long est_samples = -1;
    double est_eps = 0.05, est_cut = 0.0;
    std::uint64_t est_seed = 0;
    estimate->add_option("file", est_file, ".cplx input")->required();
    estimate->add_option("--dim", est_dim, "homology dimension i")->required();
    estimate->add_option("--eps", est_eps, "target accuracy");
    estimate->add_option("--seed", est_seed, "sampling seed");
    estimate->add_option("--moments", est_moments, "Chebyshev degree override");
    estimate->add_option("--samples", est_samples, "sample count (-1 auto, 0 exact)");
    estimate->add_option("--cut", est_cut, "spectral cut lambda (0 = auto)");
    estimate->add_option("--report", est_report, "write the full JSON report");

    auto* test = app.add_subcommand("test", "corpus-matching Betti tester");
    std::string test_file, test_corpus, test_report;
    int test_dim = 1, test_radius = 2;
    double test_eps = 0.1, test_rho = 0.2;
    std::uint64_t test_seed = 0;
    test->add_option("file", test_file, ".cplx input")->required();
    test->add_option("--corpus", test_corpus, "directory of corpus .cplx files")->required();
    test->add_option("--dim", test_dim, "homology dimension i");
    test->add_option("--eps", test_eps, "failure probability / accuracy");
    test->add_option("--radius", test_radius, "profile radius r");
    test->add_option("--rho", test_rho, "matching tolerance rho");
    test->add_option("--seed", test_seed, "sampling seed");
    test->add_option("--report", test_report, "write a JSON run report");

    auto* verify = app.add_subcommand("verify", "structural invariant suite");
    std::string verify_file, verify_report;
    long long verify_pdet_cap = 300;
    verify->add_option("file", verify_file, ".cplx input")->required();
    verify->add_option("--pdet-cap", verify_pdet_cap, "pseudo-determinant size cap");
    verify->add_option("--report", verify_report, "write a JSON run report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    if (gen->parsed()) {
        ComplexHandle c;
        check(bs_generate(gen_kind.c_str(), gen_n, gen_copies, gen_degree, gen_seed, &c.ptr));
        check(bs_complex_write_file(c.ptr, gen_out.c_str()));
        std::cout << "wrote " << gen_out << " (dim " << bs_complex_dimension(c.ptr) << ", "
                  << bs_complex_simplex_count(c.ptr, 0) << " vertices)\n";
        return 0;
    }

    if (betti_cmd->parsed()) {
        Report report("betti");
        report.params() = {{"file", betti_file}};
        ComplexHandle c = load_complex(betti_file);
        report.add_input(betti_file, c.ptr);
        std::vector<int64_t> b(bs_complex_degree_bound(c.ptr) + 2);
        int32_t len = 0;
        check(bs_betti_exact(c.ptr, b.data(), static_cast<int32_t>(b.size()), &len));
        std::cout << "b = [";
        for (int32_t i = 0; i < len; ++i) std::cout << (i ? ", " : "") << b[i];
        std::cout << "]\n";
        report.set_outputs({{"betti", std::vector<int64_t>(b.begin(), b.begin() + len)}});
        report.write(betti_report);
        return 0;
    }

    if (spectrum->parsed()) {
        Report report("spectrum");
        report.params() = {{"file", spec_file}, {"dim", spec_dim}, {"cap", spec_cap}};
        ComplexHandle c = load_complex(spec_file);
        report.add_input(spec_file, c.ptr);
        char* out = nullptr;
        check(bs_spectrum_json(c.ptr, spec_dim, spec_cap, &out));
        std::string text = take_string(out);
        std::cout << text << "\n";
        if (!spec_matrix_out.empty()) {
            char* trip = nullptr;
            check(bs_laplacian_triplets(c.ptr, spec_dim, &trip));
            std::ofstream mf(spec_matrix_out);
            mf << take_string(trip);
        }
        report.set_outputs(json::parse(text));
        report.write(spec_report);
        return 0;
    }

    if (profile->parsed()) {
        Report report("profile");
        report.params() = {{"file", prof_file},
                           {"radius", prof_radius},
                           {"root_dim", prof_root_dim},
                           {"samples", prof_samples},
                           {"seed", prof_seed}};
        ComplexHandle c = load_complex(prof_file);
        report.add_input(prof_file, c.ptr);
        char* out = nullptr;
        check(bs_profile_json(c.ptr, prof_radius, prof_root_dim, prof_samples, prof_seed, threads,
                              &out));
        std::string text = take_string(out);
        if (prof_out.empty()) {
            std::cout << text << "\n";
        } else {
            std::ofstream f(prof_out);
            f << text << "\n";
        }
        report.set_outputs(json::parse(text));
        report.write(prof_report);
        return 0;
    }

    if (distance->parsed()) {
        Report report("distance");
        report.params() = {{"first", dist_a}, {"second", dist_b}, {"rmax", dist_rmax}};
        ComplexHandle a = load_complex(dist_a);
        ComplexHandle b = load_complex(dist_b);
        report.add_input(dist_a, a.ptr);
        report.add_input(dist_b, b.ptr);
        double value = 0, truncation = 0;
        check(bs_sampling_distance(a.ptr, b.ptr, dist_rmax, threads, &value, &truncation));
        std::cout << "d_s = " << value << " (truncation bound " << truncation << ")\n";
        report.set_outputs({{"distance", value}, {"truncation", truncation}});
        report.write(dist_report);
        return 0;
    }

    if (estimate->parsed()) {
        Report report("estimate");
        report.params() = {{"file", est_file},   {"dim", est_dim},         {"eps", est_eps},
                           {"seed", est_seed},   {"moments", est_moments}, {"samples", est_samples},
                           {"cut", est_cut},     {"threads", threads}};
        ComplexHandle c = load_complex(est_file);
        report.add_input(est_file, c.ptr);
        char* out = nullptr;
        check(bs_estimate_json(c.ptr, est_dim, est_eps, est_seed, est_moments, est_samples,
                               est_cut, threads, &out));
        json result = json::parse(take_string(out));
        const auto& est = result["estimate"];
        std::cout << "per_vertex = " << est["per_vertex"].get<double>()
                  << "  kernel_fraction = " << est["kernel_fraction"].get<double>()
                  << "  cut = " << est["epsilon_star"].get<double>()
                  << "  bound_term = " << est["bound_term"].get<double>() << "\n";
        report.set_outputs(result);
        report.write(est_report);
        return 0;
    }

    if (test->parsed()) {
        Report report("test");
        report.params() = {{"file", test_file},     {"corpus", test_corpus}, {"dim", test_dim},
                           {"eps", test_eps},       {"radius", test_radius}, {"rho", test_rho},
                           {"seed", test_seed}};
        ComplexHandle input = load_complex(test_file);
        report.add_input(test_file, input.ptr);

        std::vector<std::string> members;
        {
            namespace fs = std::filesystem;
            std::error_code ec;
            for (const auto& entry : fs::directory_iterator(test_corpus, ec))
                if (entry.path().extension() == ".cplx") members.push_back(entry.path().string());
            if (ec) {
                std::cerr << "error: cannot read corpus directory " << test_corpus << "\n";
                return kExitError;
            }
            std::sort(members.begin(), members.end());
        }
        if (members.empty()) {
            std::cerr << "error: no .cplx files in corpus directory " << test_corpus << "\n";
            return kExitError;
        }
        CorpusHandle corpus;
        check(bs_corpus_create(test_radius, test_rho, &corpus.ptr));
        for (const auto& path : members) {
            ComplexHandle m = load_complex(path);
            report.add_input(path, m.ptr);
            check(bs_corpus_add(corpus.ptr, m.ptr, threads));
        }
        char* out = nullptr;
        check(bs_test_betti_json(input.ptr, corpus.ptr, test_dim, test_eps, test_seed, &out));
        json result = json::parse(take_string(out));
        std::cout << "matched corpus member " << result["matched_index"].get<int>() << " ("
                  << members[result["matched_index"].get<int>()] << ")\n"
                  << "estimate b^" << test_dim
                  << "/|V| = " << result["estimate_per_vertex"].get<double>() << " using "
                  << result["samples_used"].get<long long>() << " samples\n";
        report.set_outputs(result);
        report.write(test_report);
        return 0;
    }

    if (verify->parsed()) {
        Report report("verify");
        report.params() = {{"file", verify_file}, {"pdet_cap", verify_pdet_cap}};
        ComplexHandle c = load_complex(verify_file);
        report.add_input(verify_file, c.ptr);
        char* out = nullptr;
        check(bs_verify_json(c.ptr, verify_pdet_cap, &out));
        json result = json::parse(take_string(out));
        bool all = result["all_pass"].get<bool>();
        for (const auto& prop : result["properties"])
            std::cout << (prop["pass"].get<bool>() ? "[pass] " : "[FAIL] ")
                      << prop["name"].get<std::string>() << ": "
                      << prop["detail"].get<std::string>() << "\n";
        std::cout << (all ? "all properties hold\n" : "some properties failed\n");
        report.set_outputs(result);
        report.write(verify_report);
        return all ? 0 : 1;
    }

    return kExitError;
}
