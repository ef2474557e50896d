#ifndef BETTI_FAMILIES_HPP
#define BETTI_FAMILIES_HPP

#include <memory>

#include "betti/complex.hpp"

namespace betti {

enum class FamilyKind {
    disjoint_union, // `copies` relabeled copies of `base`
    torus_grid,     // n x n triangulated torus, 2n^2 triangles, degree 6
    sphere_boundary,// boundary complex of the (k+1)-simplex
    cycle,          // n-gon, n >= 3
    path,           // path on n vertices
    random_flag,    // flag complex of a seeded degree-bounded random graph
};

struct FamilySpec {
    FamilyKind kind = FamilyKind::path;
    int n = 1;            // size parameter (grid side, sphere k, vertex count)
    int copies = 1;       // disjoint_union
    int degree_bound = 0; // 0 = natural bound of the kind
    std::uint64_t seed = 0;
    int edge_attempts = 0; // random_flag; 0 = 4n
    std::shared_ptr<FamilySpec> base; // disjoint_union
};

SimplicialComplex generate(const FamilySpec& spec);

/// The same family at increasing sizes.
std::vector<SimplicialComplex> convergent_sequence(const FamilySpec& family,
                                                   const std::vector<int>& sizes);

} // namespace betti

#endif
