#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <map>
#include <set>

#include "betti/canonical.hpp"
#include "oracles.hpp"

using namespace betti;

namespace {

// Every face-closed complex on the labeled vertex set {0..n-1} (n <= 4 keeps
// this small): enumerate graphs, then closed triangle sets, then admissible
// tetrahedra.
std::vector<SimplicialComplex> enumerate_complexes(int n) {
    std::vector<std::pair<int, int>> all_edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) all_edges.emplace_back(a, b);

    std::vector<SimplicialComplex> out;
    for (unsigned mask = 0; mask < (1u << all_edges.size()); ++mask) {
        std::set<std::pair<int, int>> edges;
        for (std::size_t j = 0; j < all_edges.size(); ++j)
            if (mask & (1u << j)) edges.insert(all_edges[j]);
        auto has_edge = [&](int a, int b) {
            return edges.count({std::min(a, b), std::max(a, b)}) > 0;
        };
        std::vector<std::array<int, 3>> tris;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    if (has_edge(a, b) && has_edge(a, c) && has_edge(b, c))
                        tris.push_back({a, b, c});
        for (unsigned tmask = 0; tmask < (1u << tris.size()); ++tmask) {
            std::set<std::array<int, 3>> chosen;
            for (std::size_t j = 0; j < tris.size(); ++j)
                if (tmask & (1u << j)) chosen.insert(tris[j]);
            std::vector<std::array<int, 4>> tetras;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    for (int c = b + 1; c < n; ++c)
                        for (int d = c + 1; d < n; ++d)
                            if (chosen.count({a, b, c}) && chosen.count({a, b, d}) &&
                                chosen.count({a, c, d}) && chosen.count({b, c, d}))
                                tetras.push_back({a, b, c, d});
            for (unsigned qmask = 0; qmask < (1u << tetras.size()); ++qmask) {
                std::vector<Simplex> tuples;
                for (int v = 0; v < n; ++v) tuples.push_back({v});
                for (const auto& [a, b] : edges) tuples.push_back({a, b});
                for (const auto& t : chosen) tuples.push_back({t[0], t[1], t[2]});
                for (std::size_t j = 0; j < tetras.size(); ++j)
                    if (qmask & (1u << j))
                        tuples.push_back({tetras[j][0], tetras[j][1], tetras[j][2], tetras[j][3]});
                out.push_back(SimplicialComplex::build(std::move(tuples), n));
            }
        }
    }
    return out;
}

// Group balls by code, then check code equality agrees with brute-force
// root-preserving isomorphism within and across groups.
void verify_separation(const std::vector<RootedBall>& balls, Rng& rng) {
    std::map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < balls.size(); ++i)
        groups[canonical_code(balls[i]).bytes].push_back(i);

    for (const auto& [code, members] : groups) {
        std::size_t checks = std::min<std::size_t>(members.size() - 1, 25);
        for (std::size_t j = 1; j <= checks; ++j)
            CHECK(oracles::brute_force_root_isomorphic(balls[members[0]], balls[members[j]]));
    }

    std::vector<std::string> keys;
    for (const auto& [code, members] : groups) keys.push_back(code);
    if (keys.size() >= 2) {
        for (int trial = 0; trial < 400; ++trial) {
            std::size_t a = rng.bounded(keys.size());
            std::size_t b = rng.bounded(keys.size());
            if (a == b) continue;
            const auto& ga = groups[keys[a]];
            const auto& gb = groups[keys[b]];
            const RootedBall& ba = balls[ga[rng.bounded(ga.size())]];
            const RootedBall& bb = balls[gb[rng.bounded(gb.size())]];
            CHECK(!oracles::brute_force_root_isomorphic(ba, bb));
        }
    }
}

} // namespace

TEST_CASE("relabeling invariance") {
    auto K = oracles::hollow_triangle();
    auto L = relabel_vertices(K, {{0, 10}, {1, 20}, {2, 30}});
    for (int root = 0; root < 3; ++root) {
        auto ca = canonical_code(extract_vertex_ball(K, K.vertex_ids()[root], 1));
        auto cb = canonical_code(extract_vertex_ball(L, L.vertex_ids()[root], 1));
        CHECK(ca == cb);
    }
}

TEST_CASE("hollow and solid triangles separate") {
    auto a = canonical_code(extract_vertex_ball(oracles::hollow_triangle(), 0, 1));
    auto b = canonical_code(extract_vertex_ball(oracles::solid_triangle(), 0, 1));
    CHECK(!(a == b));
}

TEST_CASE("radius only changes the radius field") {
    auto K = SimplicialComplex::build({{0}}, 1);
    auto c0 = canonical_code(extract_vertex_ball(K, 0, 0));
    auto c3 = canonical_code(extract_vertex_ball(K, 0, 3));
    CHECK(!(c0 == c3));
    CHECK(c0.radius == 0);
    CHECK(c3.radius == 3);
    // prefix layout: version, root_dim, radius(2 bytes), then the body
    CHECK(c0.bytes.substr(0, 2) == c3.bytes.substr(0, 2));
    CHECK(c0.bytes.substr(4) == c3.bytes.substr(4));
}

TEST_CASE("codes ignore orientation") {
    auto K = generate([] {
        FamilySpec s;
        s.kind = FamilyKind::torus_grid;
        s.n = 3;
        return s;
    }());
    auto Q = K.orient_random(5);
    auto a = canonical_code(extract_vertex_ball(K, 0, 1));
    auto b = canonical_code(extract_vertex_ball(Q, 0, 1));
    CHECK(a == b);
}

TEST_CASE("random relabelings of mixed fixtures keep codes fixed") {
    Rng rng(2024);
    auto pool = oracles::fixture_pool(10);
    for (const auto& K : pool) {
        if (K.vertex_count() == 0) continue;
        std::unordered_map<Vertex, Vertex> map;
        std::vector<Vertex> shuffled = K.vertex_ids();
        for (std::size_t i = shuffled.size(); i > 1; --i)
            std::swap(shuffled[i - 1], shuffled[rng.bounded(i)]);
        for (std::size_t i = 0; i < shuffled.size(); ++i)
            map[K.vertex_ids()[i]] = shuffled[i] + 1000;
        auto L = relabel_vertices(K, map);
        for (std::size_t root = 0; root < std::min<std::size_t>(4, K.vertex_count()); ++root) {
            Vertex p = K.vertex_ids()[root];
            auto ca = canonical_code(extract_vertex_ball(K, p, 2));
            auto cb = canonical_code(extract_vertex_ball(L, map[p], 2));
            CHECK(ca == cb);
        }
    }
}

TEST_CASE("exhaustive separation on all complexes over 4 labeled vertices") {
    auto complexes = enumerate_complexes(4);
    std::vector<RootedBall> balls;
    for (const auto& K : complexes)
        for (Vertex p : K.vertex_ids())
            for (int r : {1, 2}) balls.push_back(extract_vertex_ball(K, p, r));
    Rng rng(77);
    verify_separation(balls, rng);
}

TEST_CASE("randomized separation on 5- and 6-vertex complexes") {
    std::vector<RootedBall> balls;
    for (int k = 0; k < 150; ++k) {
        FamilySpec spec;
        spec.kind = FamilyKind::random_flag;
        spec.n = 5 + (k % 2);
        spec.degree_bound = 5;
        spec.seed = 9000 + k;
        spec.edge_attempts = 5 + (k % 13);
        auto K = generate(spec);
        if (K.vertex_count() == 0) continue;
        for (Vertex p : K.vertex_ids()) balls.push_back(extract_vertex_ball(K, p, 2));
    }
    Rng rng(78);
    verify_separation(balls, rng);
}

TEST_CASE("edge-rooted codes separate by root position") {
    // path of 4: middle edge vs end edge at radius 1
    auto K = SimplicialComplex::build({{0, 1}, {1, 2}, {2, 3}}, 2);
    auto mid = canonical_code(extract_simplex_ball(K, {1, 2}, 1));
    auto end = canonical_code(extract_simplex_ball(K, {0, 1}, 1));
    CHECK(!(mid == end));
    // but the two end edges agree
    auto other_end = canonical_code(extract_simplex_ball(K, {2, 3}, 1));
    CHECK(end == other_end);
}

TEST_CASE("star balls canonicalize quickly at any degree") {
    // high-symmetry case: the search must collapse the leaf orbits
    std::vector<Simplex> edges;
    for (Vertex leaf = 1; leaf <= 8; ++leaf) edges.push_back({0, leaf});
    auto K = SimplicialComplex::build(edges, 8);
    auto a = canonical_code(extract_vertex_ball(K, 0, 1));
    auto L = relabel_vertices(K, {{0, 50}, {1, 41}, {2, 32}, {3, 23}, {4, 14}, {5, 5},
                                  {6, 66}, {7, 77}, {8, 88}});
    auto b = canonical_code(extract_vertex_ball(L, 50, 1));
    CHECK(a == b);
}
