#include "betti/families.hpp"

#include <algorithm>
#include <set>

namespace betti {

namespace {

SimplicialComplex make_torus(int n, int degree_bound) {
    if (n < 3) throw Error(Errc::invalid_parameter, "torus grid needs n >= 3");
    auto id = [n](int i, int j) -> Vertex {
        return static_cast<Vertex>(((i % n + n) % n) * n + ((j % n + n) % n));
    };
    std::vector<Simplex> tris;
    tris.reserve(2 * n * n);
    // each grid square split along the (i,j) -> (i+1,j+1) diagonal
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            tris.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
            tris.push_back({id(i, j), id(i, j + 1), id(i + 1, j + 1)});
        }
    for (auto& t : tris) std::sort(t.begin(), t.end());
    return SimplicialComplex::build(std::move(tris), degree_bound ? degree_bound : 6);
}

SimplicialComplex make_sphere(int k, int degree_bound) {
    if (k < 1) throw Error(Errc::invalid_parameter, "sphere boundary needs k >= 1");
    std::vector<Simplex> faces;
    // all (k+1)-subsets of {0..k+1}
    for (Vertex skip = 0; skip <= k + 1; ++skip) {
        Simplex s;
        for (Vertex v = 0; v <= k + 1; ++v)
            if (v != skip) s.push_back(v);
        faces.push_back(std::move(s));
    }
    return SimplicialComplex::build(std::move(faces), degree_bound ? degree_bound : k + 1);
}

SimplicialComplex make_cycle(int n, int degree_bound) {
    if (n < 3) throw Error(Errc::invalid_parameter, "cycle needs n >= 3");
    std::vector<Simplex> edges;
    for (int j = 0; j < n; ++j) {
        Simplex e{static_cast<Vertex>(j), static_cast<Vertex>((j + 1) % n)};
        std::sort(e.begin(), e.end());
        edges.push_back(std::move(e));
    }
    return SimplicialComplex::build(std::move(edges), degree_bound ? degree_bound : 2);
}

SimplicialComplex make_path(int n, int degree_bound) {
    if (n < 1) throw Error(Errc::invalid_parameter, "path needs n >= 1");
    std::vector<Simplex> parts;
    if (n == 1) {
        parts.push_back({0});
    } else {
        for (int j = 0; j + 1 < n; ++j)
            parts.push_back({static_cast<Vertex>(j), static_cast<Vertex>(j + 1)});
    }
    return SimplicialComplex::build(std::move(parts), degree_bound ? degree_bound : 2);
}

SimplicialComplex make_random_flag(int n, int degree_bound, int edge_attempts,
                                   std::uint64_t seed) {
    if (n < 1) throw Error(Errc::invalid_parameter, "random flag complex needs n >= 1");
    int d = degree_bound ? degree_bound : 6;
    int attempts = edge_attempts ? edge_attempts : 4 * n;

    Rng rng(seed);
    std::vector<std::set<int>> adj(n);
    std::vector<int> deg(n, 0);
    for (int a = 0; a < attempts; ++a) {
        int u = static_cast<int>(rng.bounded(n));
        int v = static_cast<int>(rng.bounded(n));
        if (u == v || deg[u] >= d || deg[v] >= d || adj[u].count(v)) continue;
        adj[u].insert(v);
        adj[v].insert(u);
        ++deg[u];
        ++deg[v];
    }

    // Flag completion: every clique of the graph, capped at d+1 vertices,
    // spans a simplex. Maximal cliques suffice as build input.
    std::vector<Simplex> cliques;
    std::vector<int> current;
    std::function<void(int, std::vector<int>)> extend = [&](int last, std::vector<int> cands) {
        bool maximal = true;
        if (static_cast<int>(current.size()) < d + 1) {
            for (int c : cands) {
                maximal = false;
                current.push_back(c);
                std::vector<int> next;
                for (int w : cands)
                    if (w > c && adj[c].count(w)) next.push_back(w);
                extend(c, std::move(next));
                current.pop_back();
            }
        }
        if (maximal) {
            // keep only cliques not extendable by any earlier vertex
            for (int w = 0; w < n && maximal; ++w) {
                if (std::find(current.begin(), current.end(), w) != current.end()) continue;
                bool joins_all = true;
                for (int c : current)
                    if (!adj[c].count(w)) { joins_all = false; break; }
                if (joins_all && static_cast<int>(current.size()) < d + 1) maximal = false;
            }
            if (maximal) {
                Simplex s;
                for (int c : current) s.push_back(static_cast<Vertex>(c));
                cliques.push_back(std::move(s));
            }
        }
    };
    for (int v = 0; v < n; ++v) {
        current = {v};
        std::vector<int> cands(adj[v].begin(), adj[v].end());
        cands.erase(std::remove_if(cands.begin(), cands.end(), [&](int w) { return w <= v; }),
                    cands.end());
        extend(v, std::move(cands));
    }
    return SimplicialComplex::build(std::move(cliques), d);
}

} // namespace

SimplicialComplex generate(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::torus_grid:
            return make_torus(spec.n, spec.degree_bound);
        case FamilyKind::sphere_boundary:
            return make_sphere(spec.n, spec.degree_bound);
        case FamilyKind::cycle:
            return make_cycle(spec.n, spec.degree_bound);
        case FamilyKind::path:
            return make_path(spec.n, spec.degree_bound);
        case FamilyKind::random_flag:
            return make_random_flag(spec.n, spec.degree_bound, spec.edge_attempts, spec.seed);
        case FamilyKind::disjoint_union: {
            if (!spec.base)
                throw Error(Errc::invalid_parameter, "disjoint_union requires a base family");
            SimplicialComplex base = generate(*spec.base);
            return disjoint_union(base, spec.copies);
        }
    }
    throw Error(Errc::invalid_parameter, "unknown family kind");
}

std::vector<SimplicialComplex> convergent_sequence(const FamilySpec& family,
                                                   const std::vector<int>& sizes) {
    for (std::size_t j = 1; j < sizes.size(); ++j)
        if (sizes[j] <= sizes[j - 1])
            throw Error(Errc::invalid_parameter, "sizes must be strictly increasing");
    std::vector<SimplicialComplex> out;
    for (int s : sizes) {
        FamilySpec spec = family;
        if (spec.kind == FamilyKind::disjoint_union)
            spec.copies = s;
        else
            spec.n = s;
        out.push_back(generate(spec));
    }
    return out;
}

} // namespace betti
