#ifndef BETTI_BALL_HPP
#define BETTI_BALL_HPP

#include "betti/complex.hpp"

namespace betti {

/// A rooted sub-complex extracted around a vertex or an i-simplex.
struct RootedBall {
    SimplicialComplex ball;
    int root_dimension = 0; // 0 for vertex-rooted, i for simplex-rooted
    Simplex root;           // {p} or the root i-simplex, ascending ids
    int radius = 0;
};

/// Sub-complex spanned by the vertices at graph distance <= r from p in the
/// 1-skeleton: contains exactly the simplices all of whose vertices lie in
/// that vertex set.
RootedBall extract_vertex_ball(const SimplicialComplex& K, Vertex p, int r);

/// All i-simplices within distance r of sigma in the shared-vertex adjacency
/// graph on K_i, together with all of their faces (so the result is a valid
/// complex). r = 0 returns sigma with its faces.
RootedBall extract_simplex_ball(const SimplicialComplex& K, const Simplex& sigma, int r);

/// Vertex balls at every radius 1..r_max around p, computed from one BFS.
std::vector<RootedBall> extract_vertex_balls_upto(const SimplicialComplex& K, Vertex p,
                                                  int r_max);

} // namespace betti

#endif
