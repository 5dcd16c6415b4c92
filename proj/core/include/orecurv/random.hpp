#ifndef ORECURV_RANDOM_HPP
#define ORECURV_RANDOM_HPP

#include <random>

#include "orecurv/ore.hpp"

namespace orecurv {

// Uniform coefficients up to max_degree; with nonzero set, resamples the zero polynomial.
PolyP random_poly(const PrimeField& field, int max_degree, std::mt19937_64& rng, bool nonzero = false);

// Random integral operator of the given order with a_0 and a_n nonzero, x-degree <= max_degree.
OreP random_operator(const PrimeField& field, int order, int max_degree, std::mt19937_64& rng);

// prim of a random operator; resamples until the order survives content removal.
OreP random_primitive_operator(const PrimeField& field, int order, int max_degree, std::mt19937_64& rng);

}  // namespace orecurv

#endif
