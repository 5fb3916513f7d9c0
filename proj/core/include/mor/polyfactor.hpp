#ifndef MOR_POLYFACTOR_HPP
#define MOR_POLYFACTOR_HPP

#include <utility>
#include <vector>

#include "mor/poly.hpp"
#include "mor/rng.hpp"

namespace mor {

/// Complete factorization into monic irreducibles: squarefree split, then
/// distinct-degree, then Cantor-Zassenhaus equal-degree splitting (the char-2
/// variant uses the trace map). Output is sorted by degree, then by
/// coefficients from the highest term down, so runs are reproducible given
/// the RNG seed. The product of factor^multiplicity equals f up to the
/// leading coefficient.
std::vector<std::pair<PolyFp, unsigned>> factor_poly(const PolyFp& f, Rng& rng);

/// Same, with a fixed internal seed (results do not depend on it).
std::vector<std::pair<PolyFp, unsigned>> factor_poly(const PolyFp& f);

bool is_irreducible(const PolyFp& f);

}  // namespace mor

#endif
