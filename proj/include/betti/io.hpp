#ifndef BETTI_IO_HPP
#define BETTI_IO_HPP

#include <string>

#include "betti/complex.hpp"
#include "betti/profile.hpp"

namespace betti {

/// "cplx v1" text format: first line `dim <d>` declares the degree bound,
/// each `s v0 v1 ... vk` line one maximal simplex, `#` starts a comment.
/// Face closure is applied on load; the writer emits maximal simplices sorted
/// lexicographically.
SimplicialComplex parse_cplx(const std::string& text);
std::string write_cplx(const SimplicialComplex& K);

SimplicialComplex read_cplx_file(const std::string& path);
void write_cplx_file(const SimplicialComplex& K, const std::string& path);

/// Content hash (FNV-1a over the canonical serialized form), as 16 hex chars.
std::string complex_digest(const SimplicialComplex& K);

/// Profile serialization: sorted JSON map code-hex -> count with a
/// (radius, root_dim, mode, total) header.
std::string profile_to_json(const LocalProfile& p);
LocalProfile profile_from_json(const std::string& text);

} // namespace betti

#endif
