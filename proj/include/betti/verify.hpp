#ifndef BETTI_VERIFY_HPP
#define BETTI_VERIFY_HPP

#include <string>
#include <vector>

#include "betti/complex.hpp"

namespace betti {

struct PropertyResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

/// Structural invariant suite for one complex: cochain composition vanishes,
/// Laplacian entry/support/symmetry bounds, exact kernel dimensions against
/// the Betti numbers, Euler characteristic, norm bound against the true
/// spectrum, pseudo-determinant >= 1 with non-negative log determinant, and
/// the log-tail inequalities. Spectral checks run on matrices up to
/// spectrum_cap; pseudo-determinants up to pdet_cap.
std::vector<PropertyResult> verify_complex(const SimplicialComplex& K,
                                           long long pdet_cap = 300,
                                           long long spectrum_cap = 2000);

} // namespace betti

#endif
