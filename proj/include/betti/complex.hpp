#ifndef BETTI_COMPLEX_HPP
#define BETTI_COMPLEX_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "betti/common.hpp"

namespace betti {

using Vertex = std::int64_t;

/// A simplex is stored as a strictly increasing tuple of vertex ids.
using Simplex = std::vector<Vertex>;

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (Vertex v : s) {
            for (int k = 0; k < 8; ++k) {
                h ^= static_cast<unsigned char>(v >> (8 * k));
                h *= 0x100000001b3ULL;
            }
        }
        return static_cast<std::size_t>(h);
    }
};

/// Face-closed simplicial complex with a hard bound d on the number of
/// edges a vertex may lie in (which also caps the dimension at d).
///
/// Vertex ids are arbitrary non-negative integers, not required to be
/// contiguous. Immutable after construction; all accessors are safe for
/// concurrent reads. An orientation is a per-vertex ranking: each simplex
/// is read in increasing rank order, the default ranking being ascending
/// vertex id.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Builds the face closure of the given tuples and validates all
    /// invariants. Throws Errc::degree_exceeded / duplicate_simplex /
    /// invalid_parameter.
    static SimplicialComplex build(std::vector<Simplex> simplices, int degree_bound);

    int degree_bound() const { return degree_bound_; }

    /// Largest i with a nonempty simplex set, or -1 for the empty complex.
    int dimension() const { return static_cast<int>(simplices_.size()) - 1; }

    std::size_t vertex_count() const { return vertex_ids_.size(); }
    const std::vector<Vertex>& vertex_ids() const { return vertex_ids_; }

    std::size_t simplex_count(int dim) const {
        if (dim < 0 || dim > dimension()) return 0;
        return simplices_[dim].size();
    }
    std::size_t total_simplices() const;

    /// Simplices of one dimension, sorted lexicographically.
    const std::vector<Simplex>& simplices(int dim) const;

    /// Index of a sorted tuple within its dimension, or -1 when absent.
    long long simplex_index(int dim, const Simplex& sorted_tuple) const;
    bool contains(const Simplex& sorted_tuple) const;

    int vertex_index(Vertex v) const;
    Vertex vertex_id(int idx) const { return vertex_ids_[idx]; }

    /// 1-skeleton adjacency, by vertex index.
    const std::vector<std::vector<int>>& skeleton_adjacency() const { return adjacency_; }

    /// For each vertex index, the indices of dim-simplices containing it.
    const std::vector<std::vector<int>>& vertex_incidence(int dim) const;

    /// Orientation rank of a vertex (by vertex index).
    int theta_rank(int vertex_idx) const { return theta_rank_.empty() ? vertex_idx : theta_rank_[vertex_idx]; }
    bool default_orientation() const { return theta_rank_.empty(); }

    /// Copy of this complex whose simplex orderings follow a fresh random
    /// vertex ranking. The simplex sets are unchanged; deterministic in seed.
    SimplicialComplex orient_random(std::uint64_t seed) const;

    /// Vertices of a simplex in orientation order (increasing theta rank).
    Simplex oriented_tuple(const Simplex& sorted_tuple) const;

    /// Simplices not contained in any higher simplex, sorted lex by dim then tuple.
    std::vector<Simplex> maximal_simplices() const;

    bool same_simplices(const SimplicialComplex& other) const;

private:
    int degree_bound_ = 0;
    std::vector<Vertex> vertex_ids_;
    std::unordered_map<Vertex, int> vertex_index_;
    std::vector<std::vector<Simplex>> simplices_;                       // [dim], dim 0 included
    std::vector<std::unordered_map<Simplex, int, SimplexHash>> index_; // [dim]
    std::vector<std::vector<std::vector<int>>> incidence_;             // [dim][vertex idx]
    std::vector<std::vector<int>> adjacency_;
    std::vector<int> theta_rank_; // empty => ascending ids

    void assemble();
};

/// Disjoint union of `copies` relabeled copies of K.
SimplicialComplex disjoint_union(const SimplicialComplex& K, int copies);

/// Rebuilds K with every vertex id mapped through `relabel` (must be injective).
SimplicialComplex relabel_vertices(const SimplicialComplex& K,
                                   const std::unordered_map<Vertex, Vertex>& relabel);

} // namespace betti

#endif
