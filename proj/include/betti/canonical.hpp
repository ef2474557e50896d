#ifndef BETTI_CANONICAL_HPP
#define BETTI_CANONICAL_HPP

#include <string>

#include "betti/ball.hpp"

namespace betti {

/// Fingerprint of the rooted isomorphism class of a ball. Two balls receive
/// equal codes exactly when a simplicial isomorphism maps one to the other
/// carrying root to root (and radius/root dimension agree).
struct CanonicalCode {
    std::string bytes;
    int radius = 0;
    int root_dimension = 0;

    bool operator==(const CanonicalCode& o) const { return bytes == o.bytes; }
    bool operator<(const CanonicalCode& o) const { return bytes < o.bytes; }
    std::string hex() const { return to_hex(bytes); }
};

/// Exact canonical labeling (not a hash): colour refinement over the simplex
/// structure plus individualization backtracking, with the root pinned to
/// label 0. Bounded degree and radius keep balls small enough for this to be
/// effectively constant-time.
CanonicalCode canonical_code(const RootedBall& ball);

} // namespace betti

#endif
