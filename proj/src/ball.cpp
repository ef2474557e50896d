#include "betti/ball.hpp"

#include <algorithm>
#include <queue>

namespace betti {

namespace {

// BFS distances (capped at r) in the 1-skeleton from one vertex index.
std::vector<int> skeleton_distances(const SimplicialComplex& K, int start, int r) {
    std::vector<int> dist(K.vertex_count(), -1);
    dist[start] = 0;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (dist[u] == r) continue;
        for (int w : K.skeleton_adjacency()[u]) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

// All simplices of K whose vertices all satisfy `inside`.
std::vector<Simplex> spanned_simplices(const SimplicialComplex& K,
                                       const std::vector<char>& inside) {
    std::vector<Simplex> out;
    for (int dim = 0; dim <= K.dimension(); ++dim) {
        std::vector<char> visited(K.simplex_count(dim), 0);
        for (std::size_t vi = 0; vi < K.vertex_count(); ++vi) {
            if (!inside[vi]) continue;
            for (int si : K.vertex_incidence(dim)[vi]) {
                if (visited[si]) continue;
                visited[si] = 1;
                const Simplex& s = K.simplices(dim)[si];
                bool all_in = true;
                for (Vertex v : s)
                    if (!inside[K.vertex_index(v)]) { all_in = false; break; }
                if (all_in) out.push_back(s);
            }
        }
    }
    return out;
}

} // namespace

RootedBall extract_vertex_ball(const SimplicialComplex& K, Vertex p, int r) {
    if (r < 0) throw Error(Errc::invalid_parameter, "radius must be non-negative");
    int pi = K.vertex_index(p);
    if (pi < 0) throw Error(Errc::unknown_vertex, "vertex " + std::to_string(p) + " not in complex");

    auto dist = skeleton_distances(K, pi, r);
    std::vector<char> inside(K.vertex_count(), 0);
    for (std::size_t i = 0; i < dist.size(); ++i) inside[i] = dist[i] >= 0;

    RootedBall b;
    b.ball = SimplicialComplex::build(spanned_simplices(K, inside), K.degree_bound());
    b.root_dimension = 0;
    b.root = {p};
    b.radius = r;
    return b;
}

std::vector<RootedBall> extract_vertex_balls_upto(const SimplicialComplex& K, Vertex p,
                                                  int r_max) {
    if (r_max < 1) throw Error(Errc::invalid_parameter, "r_max must be >= 1");
    int pi = K.vertex_index(p);
    if (pi < 0) throw Error(Errc::unknown_vertex, "vertex " + std::to_string(p) + " not in complex");

    auto dist = skeleton_distances(K, pi, r_max);
    std::vector<RootedBall> out;
    out.reserve(r_max);
    for (int r = 1; r <= r_max; ++r) {
        std::vector<char> inside(K.vertex_count(), 0);
        for (std::size_t i = 0; i < dist.size(); ++i) inside[i] = dist[i] >= 0 && dist[i] <= r;
        RootedBall b;
        b.ball = SimplicialComplex::build(spanned_simplices(K, inside), K.degree_bound());
        b.root_dimension = 0;
        b.root = {p};
        b.radius = r;
        out.push_back(std::move(b));
    }
    return out;
}

RootedBall extract_simplex_ball(const SimplicialComplex& K, const Simplex& sigma, int r) {
    if (r < 0) throw Error(Errc::invalid_parameter, "radius must be non-negative");
    Simplex root = sigma;
    std::sort(root.begin(), root.end());
    int dim = static_cast<int>(root.size()) - 1;
    long long start = K.simplex_index(dim, root);
    if (start < 0) throw Error(Errc::unknown_simplex, "simplex not in complex");

    // BFS in the shared-vertex adjacency graph on K_dim.
    std::vector<int> dist(K.simplex_count(dim), -1);
    dist[start] = 0;
    std::queue<int> q;
    q.push(static_cast<int>(start));
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (dist[u] == r) continue;
        for (Vertex v : K.simplices(dim)[u]) {
            for (int w : K.vertex_incidence(dim)[K.vertex_index(v)]) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
            }
        }
    }

    std::vector<Simplex> collected;
    for (std::size_t i = 0; i < dist.size(); ++i)
        if (dist[i] >= 0) collected.push_back(K.simplices(dim)[i]);

    RootedBall b;
    b.ball = SimplicialComplex::build(std::move(collected), K.degree_bound());
    b.root_dimension = dim;
    b.root = std::move(root);
    b.radius = r;
    return b;
}

} // namespace betti
