#ifndef ORECURV_FACTOR_HPP
#define ORECURV_FACTOR_HPP

#include <utility>
#include <vector>

#include "orecurv/poly.hpp"

namespace orecurv {

struct Factor {
  PolyP poly;  // monic irreducible
  int multiplicity;
};

// Complete factorization over F_p: square-free, distinct-degree, then equal-degree splitting.
// Factors are sorted by degree, then by coefficient list.
std::vector<Factor> factor(const PolyP& f);

bool is_irreducible(const PolyP& f);

// Lexicographic order on coefficient lists, lowest degree first.
bool coefficient_less(const PolyP& a, const PolyP& b);

}  // namespace orecurv

#endif
