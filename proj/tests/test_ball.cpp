#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "betti/ball.hpp"
#include "oracles.hpp"

using namespace betti;

TEST_CASE("vertex ball of the hollow triangle at r=1 is the whole complex") {
    auto K = oracles::hollow_triangle();
    auto b = extract_vertex_ball(K, 0, 1);
    CHECK(b.ball.same_simplices(K));
    CHECK(b.root == Simplex{0});
}

TEST_CASE("vertex ball of the solid triangle includes the 2-simplex") {
    auto K = oracles::solid_triangle();
    auto b = extract_vertex_ball(K, 0, 1);
    CHECK(b.ball.simplex_count(2) == 1);
}

TEST_CASE("path ball cuts off at distance") {
    auto K = SimplicialComplex::build({{0, 1}, {1, 2}}, 2);
    auto b = extract_vertex_ball(K, 0, 1);
    CHECK(b.ball.vertex_count() == 2);
    CHECK(b.ball.contains({0, 1}));
    CHECK(!b.ball.contains({1, 2}));
    auto b0 = extract_vertex_ball(K, 0, 0);
    CHECK(b0.ball.vertex_count() == 1);
    CHECK(b0.ball.total_simplices() == 1);
}

TEST_CASE("unknown roots are rejected") {
    auto K = oracles::hollow_triangle();
    CHECK_THROWS_AS(extract_vertex_ball(K, 9, 1), Error);
    CHECK_THROWS_AS(extract_simplex_ball(K, {0, 9}, 1), Error);
}

TEST_CASE("edge ball of the hollow triangle at r=1 is everything") {
    auto K = oracles::hollow_triangle();
    auto b = extract_simplex_ball(K, {0, 1}, 1);
    CHECK(b.ball.simplex_count(1) == 3); // every pair of edges shares a vertex
    CHECK(b.root_dimension == 1);
}

TEST_CASE("simplex ball never crosses components") {
    auto K = SimplicialComplex::build({{0, 1}, {2, 3}}, 2);
    auto b = extract_simplex_ball(K, {0, 1}, 5);
    CHECK(b.ball.simplex_count(1) == 1);
    CHECK(b.ball.vertex_count() == 2);
}

TEST_CASE("edge ball of the 6-cycle at r=1 has three edges") {
    FamilySpec spec;
    spec.kind = FamilyKind::cycle;
    spec.n = 6;
    auto K = generate(spec);
    auto b = extract_simplex_ball(K, {0, 1}, 1);
    CHECK(b.ball.simplex_count(1) == 3);
    CHECK(b.ball.contains({0, 5}));
    CHECK(b.ball.contains({0, 1}));
    CHECK(b.ball.contains({1, 2}));
}

TEST_CASE("simplex ball at r=0 is the root with its faces") {
    auto K = oracles::solid_triangle();
    auto b = extract_simplex_ball(K, {0, 1, 2}, 0);
    CHECK(b.ball.simplex_count(2) == 1);
    CHECK(b.ball.simplex_count(1) == 3);
    CHECK(b.ball.vertex_count() == 3);
}

TEST_CASE("balls are valid complexes and grow monotonically") {
    auto pool = oracles::fixture_pool(18);
    for (const auto& K : pool) {
        if (K.vertex_count() == 0) continue;
        Vertex p = K.vertex_ids()[K.vertex_count() / 2];
        std::size_t prev = 0;
        for (int r = 0; r <= 3; ++r) {
            auto b = extract_vertex_ball(K, p, r);
            CHECK(b.ball.degree_bound() == K.degree_bound());
            CHECK(b.ball.total_simplices() >= prev);
            // every simplex of the smaller ball persists in the larger one
            prev = b.ball.total_simplices();
        }
        if (K.dimension() >= 1 && K.simplex_count(1) > 0) {
            std::size_t prev_e = 0;
            for (int r = 0; r <= 2; ++r) {
                auto b = extract_simplex_ball(K, K.simplices(1)[0], r);
                CHECK(b.ball.total_simplices() >= prev_e);
                prev_e = b.ball.total_simplices();
            }
        }
    }
}

TEST_CASE("ball containment is simplexwise, not just by counts") {
    auto pool = oracles::fixture_pool(8);
    for (const auto& K : pool) {
        if (K.vertex_count() == 0) continue;
        Vertex p = K.vertex_ids()[0];
        auto small = extract_vertex_ball(K, p, 1);
        auto large = extract_vertex_ball(K, p, 2);
        for (int d = 0; d <= small.ball.dimension(); ++d)
            for (const auto& s : small.ball.simplices(d)) CHECK(large.ball.contains(s));
    }
}

TEST_CASE("multi-radius extraction matches per-radius extraction") {
    auto K = oracles::fixture_pool(7)[6];
    Vertex p = K.vertex_ids()[0];
    auto balls = extract_vertex_balls_upto(K, p, 3);
    for (int r = 1; r <= 3; ++r) {
        auto single = extract_vertex_ball(K, p, r);
        CHECK(balls[r - 1].ball.same_simplices(single.ball));
    }
}
