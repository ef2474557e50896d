#include "betti/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace betti {

SimplicialComplex parse_cplx(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int degree_bound = -1;
    std::vector<Simplex> tuples;

    while (std::getline(in, line)) {
        ++line_no;
        std::string stripped = line.substr(0, line.find('#'));
        std::istringstream ls(stripped);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (degree_bound < 0) {
            long long d;
            if (tag != "dim" || !(ls >> d) || d < 1)
                throw Error(Errc::parse_error,
                            "line " + std::to_string(line_no) + ": expected `dim <d>` header");
            std::string extra;
            if (ls >> extra)
                throw Error(Errc::parse_error,
                            "line " + std::to_string(line_no) + ": trailing tokens after header");
            degree_bound = static_cast<int>(d);
            continue;
        }
        if (tag != "s")
            throw Error(Errc::parse_error,
                        "line " + std::to_string(line_no) + ": expected `s v0 v1 ...`");
        Simplex s;
        long long v;
        while (ls >> v) {
            if (v < 0)
                throw Error(Errc::parse_error,
                            "line " + std::to_string(line_no) + ": negative vertex id");
            s.push_back(v);
        }
        if (!ls.eof())
            throw Error(Errc::parse_error,
                        "line " + std::to_string(line_no) + ": malformed vertex id");
        if (s.empty())
            throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": empty simplex");
        tuples.push_back(std::move(s));
    }
    if (degree_bound < 0) throw Error(Errc::parse_error, "missing `dim <d>` header");
    try {
        return SimplicialComplex::build(std::move(tuples), degree_bound);
    } catch (const Error& e) {
        if (e.code() == Errc::invalid_parameter)
            throw Error(Errc::parse_error, std::string("invalid complex: ") + e.what());
        throw;
    }
}

std::string write_cplx(const SimplicialComplex& K) {
    std::ostringstream os;
    os << "dim " << K.degree_bound() << "\n";
    os << "# cplx v1\n";
    auto maximal = K.maximal_simplices();
    std::sort(maximal.begin(), maximal.end());
    for (const auto& s : maximal) {
        os << "s";
        for (Vertex v : s) os << " " << v;
        os << "\n";
    }
    return os.str();
}

SimplicialComplex read_cplx_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::io_error, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_cplx(buf.str());
}

void write_cplx_file(const SimplicialComplex& K, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::io_error, "cannot open " + path + " for writing");
    out << write_cplx(K);
}

std::string complex_digest(const SimplicialComplex& K) {
    return hex_u64(fnv1a64(write_cplx(K)));
}

std::string profile_to_json(const LocalProfile& p) {
    nlohmann::json j;
    j["radius"] = p.radius;
    j["root_dim"] = p.root_dimension;
    j["mode"] = p.exact ? "exact" : "empirical";
    j["total"] = p.total;
    if (!p.exact) j["sample_size"] = p.sample_size;
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [code, c] : p.counts) counts[to_hex(code)] = c;
    j["counts"] = counts;
    return j.dump(2);
}

LocalProfile profile_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw Error(Errc::parse_error, std::string("bad profile json: ") + e.what());
    }
    LocalProfile p;
    try {
        p.radius = j.at("radius").get<int>();
        p.root_dimension = j.at("root_dim").get<int>();
        p.exact = j.at("mode").get<std::string>() == "exact";
        p.total = j.at("total").get<long long>();
        if (j.contains("sample_size")) p.sample_size = j["sample_size"].get<long long>();
        for (auto it = j.at("counts").begin(); it != j.at("counts").end(); ++it) {
            const std::string& hex = it.key();
            if (hex.size() % 2 != 0) throw Error(Errc::parse_error, "odd-length code key");
            std::string bytes;
            bytes.reserve(hex.size() / 2);
            auto nibble = [&](char c) -> int {
                if (c >= '0' && c <= '9') return c - '0';
                if (c >= 'a' && c <= 'f') return c - 'a' + 10;
                throw Error(Errc::parse_error, "bad hex digit in code key");
            };
            for (std::size_t i = 0; i < hex.size(); i += 2)
                bytes.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
            p.counts[bytes] = it.value().get<long long>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::parse_error, std::string("bad profile json: ") + e.what());
    }
    return p;
}

} // namespace betti
