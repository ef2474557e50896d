#include "betti/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

namespace betti {

SimplicialComplex SimplicialComplex::build(std::vector<Simplex> input, int degree_bound) {
    if (degree_bound < 1)
        throw Error(Errc::invalid_parameter, "degree bound must be a positive integer");

    std::unordered_set<Simplex, SimplexHash> seen;
    for (auto& t : input) {
        if (t.empty())
            throw Error(Errc::invalid_parameter, "empty vertex tuple");
        std::sort(t.begin(), t.end());
        for (std::size_t j = 1; j < t.size(); ++j)
            if (t[j] == t[j - 1])
                throw Error(Errc::invalid_parameter, "tuple has a repeated vertex id");
        for (Vertex v : t)
            if (v < 0)
                throw Error(Errc::invalid_parameter, "vertex ids must be non-negative");
        if (!seen.insert(t).second)
            throw Error(Errc::duplicate_simplex, "duplicate simplex in input");
    }

    // Face closure, processed from the top dimension down.
    int max_dim = 0;
    for (const auto& t : input) max_dim = std::max(max_dim, static_cast<int>(t.size()) - 1);

    std::vector<std::unordered_set<Simplex, SimplexHash>> by_dim(max_dim + 1);
    for (auto& t : input) by_dim[t.size() - 1].insert(std::move(t));
    for (int dim = max_dim; dim >= 1; --dim) {
        for (const auto& s : by_dim[dim]) {
            Simplex face(s.size() - 1);
            for (std::size_t skip = 0; skip < s.size(); ++skip) {
                std::size_t w = 0;
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (j != skip) face[w++] = s[j];
                by_dim[dim - 1].insert(face);
            }
        }
    }

    SimplicialComplex K;
    K.degree_bound_ = degree_bound;
    K.simplices_.resize(by_dim.size());
    for (int dim = 0; dim <= max_dim; ++dim) {
        K.simplices_[dim].assign(by_dim[dim].begin(), by_dim[dim].end());
        std::sort(K.simplices_[dim].begin(), K.simplices_[dim].end());
    }
    while (!K.simplices_.empty() && K.simplices_.back().empty()) K.simplices_.pop_back();
    K.assemble();

    for (std::size_t vi = 0; vi < K.vertex_ids_.size(); ++vi) {
        std::size_t edges = K.dimension() >= 1 ? K.incidence_[1][vi].size() : 0;
        if (edges > static_cast<std::size_t>(degree_bound))
            throw Error(Errc::degree_exceeded,
                        "vertex " + std::to_string(K.vertex_ids_[vi]) + " lies in " +
                            std::to_string(edges) + " edges, bound is " +
                            std::to_string(degree_bound));
    }
    return K;
}

void SimplicialComplex::assemble() {
    std::set<Vertex> verts;
    for (const auto& level : simplices_)
        for (const auto& s : level)
            for (Vertex v : s) verts.insert(v);
    vertex_ids_.assign(verts.begin(), verts.end());
    vertex_index_.clear();
    vertex_index_.reserve(vertex_ids_.size());
    for (std::size_t i = 0; i < vertex_ids_.size(); ++i)
        vertex_index_[vertex_ids_[i]] = static_cast<int>(i);

    index_.assign(simplices_.size(), {});
    incidence_.assign(simplices_.size(), {});
    for (std::size_t dim = 0; dim < simplices_.size(); ++dim) {
        index_[dim].reserve(simplices_[dim].size());
        incidence_[dim].assign(vertex_ids_.size(), {});
        for (std::size_t i = 0; i < simplices_[dim].size(); ++i) {
            index_[dim][simplices_[dim][i]] = static_cast<int>(i);
            for (Vertex v : simplices_[dim][i])
                incidence_[dim][vertex_index_.at(v)].push_back(static_cast<int>(i));
        }
    }

    adjacency_.assign(vertex_ids_.size(), {});
    if (dimension() >= 1) {
        for (const auto& e : simplices_[1]) {
            int a = vertex_index_.at(e[0]);
            int b = vertex_index_.at(e[1]);
            adjacency_[a].push_back(b);
            adjacency_[b].push_back(a);
        }
        for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
    }
}

std::size_t SimplicialComplex::total_simplices() const {
    std::size_t n = 0;
    for (const auto& level : simplices_) n += level.size();
    return n;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int dim) const {
    static const std::vector<Simplex> empty;
    if (dim < 0 || dim > dimension()) return empty;
    return simplices_[dim];
}

long long SimplicialComplex::simplex_index(int dim, const Simplex& s) const {
    if (dim < 0 || dim > dimension()) return -1;
    auto it = index_[dim].find(s);
    return it == index_[dim].end() ? -1 : it->second;
}

bool SimplicialComplex::contains(const Simplex& s) const {
    if (s.empty()) return false;
    return simplex_index(static_cast<int>(s.size()) - 1, s) >= 0;
}

int SimplicialComplex::vertex_index(Vertex v) const {
    auto it = vertex_index_.find(v);
    return it == vertex_index_.end() ? -1 : it->second;
}

const std::vector<std::vector<int>>& SimplicialComplex::vertex_incidence(int dim) const {
    static const std::vector<std::vector<int>> empty;
    if (dim < 0 || dim > dimension()) return empty;
    return incidence_[dim];
}

SimplicialComplex SimplicialComplex::orient_random(std::uint64_t seed) const {
    SimplicialComplex out = *this;
    std::vector<int> rank(vertex_ids_.size());
    std::iota(rank.begin(), rank.end(), 0);
    Rng rng(seed);
    for (std::size_t i = rank.size(); i > 1; --i)
        std::swap(rank[i - 1], rank[rng.bounded(i)]);
    out.theta_rank_ = std::move(rank);
    return out;
}

Simplex SimplicialComplex::oriented_tuple(const Simplex& sorted) const {
    if (theta_rank_.empty()) return sorted;
    Simplex out = sorted;
    std::sort(out.begin(), out.end(), [&](Vertex a, Vertex b) {
        return theta_rank_[vertex_index_.at(a)] < theta_rank_[vertex_index_.at(b)];
    });
    return out;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
    std::vector<Simplex> out;
    for (int dim = 0; dim <= dimension(); ++dim) {
        std::unordered_set<Simplex, SimplexHash> covered;
        if (dim + 1 <= dimension()) {
            for (const auto& s : simplices_[dim + 1]) {
                Simplex face(s.size() - 1);
                for (std::size_t skip = 0; skip < s.size(); ++skip) {
                    std::size_t w = 0;
                    for (std::size_t j = 0; j < s.size(); ++j)
                        if (j != skip) face[w++] = s[j];
                    covered.insert(face);
                }
            }
        }
        for (const auto& s : simplices_[dim])
            if (!covered.count(s)) out.push_back(s);
    }
    return out;
}

bool SimplicialComplex::same_simplices(const SimplicialComplex& other) const {
    if (dimension() != other.dimension()) return false;
    for (int dim = 0; dim <= dimension(); ++dim)
        if (simplices_[dim] != other.simplices_[dim]) return false;
    return true;
}

SimplicialComplex disjoint_union(const SimplicialComplex& K, int copies) {
    if (copies < 1) throw Error(Errc::invalid_parameter, "copies must be >= 1");
    Vertex offset = 0;
    for (Vertex v : K.vertex_ids()) offset = std::max(offset, v + 1);
    std::vector<Simplex> tuples;
    for (int c = 0; c < copies; ++c) {
        for (const auto& m : K.maximal_simplices()) {
            Simplex t = m;
            for (auto& v : t) v += offset * c;
            tuples.push_back(std::move(t));
        }
    }
    return SimplicialComplex::build(std::move(tuples), K.degree_bound());
}

SimplicialComplex relabel_vertices(const SimplicialComplex& K,
                                   const std::unordered_map<Vertex, Vertex>& relabel) {
    std::vector<Simplex> tuples;
    for (const auto& m : K.maximal_simplices()) {
        Simplex t = m;
        for (auto& v : t) v = relabel.at(v);
        tuples.push_back(std::move(t));
    }
    return SimplicialComplex::build(std::move(tuples), K.degree_bound());
}

} // namespace betti
