#ifndef REFLINV_DETFF_HPP
#define REFLINV_DETFF_HPP

#include <vector>

#include "poly.hpp"

namespace reflinv {

using PolyMatrix = std::vector<std::vector<Poly>>;

// Exact determinant by fraction-free Bareiss elimination with exact divisions.
// Pivots are chosen among nonzero candidates by fewest terms (then lowest
// degree); the zero polynomial is returned for singular input.
Poly det_fraction_free(const PolyMatrix& m);

// Cofactor expansion; used to cross-check Bareiss on small sizes.
Poly det_cofactor(const PolyMatrix& m);

}  // namespace reflinv

#endif
