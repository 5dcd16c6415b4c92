#ifndef ORECURV_TESTS_ORACLES_HPP
#define ORECURV_TESTS_ORACLES_HPP

#include <optional>
#include <random>
#include <vector>

#include "orecurv/center.hpp"
#include "orecurv/ore.hpp"

namespace oracle {

using namespace orecurv;

// Schoolbook product with plain modular reduction per term.
PolyP naive_mul(const PolyP& a, const PolyP& b);

// f(x + k) by Horner evaluation at x + k with naive_mul.
PolyP naive_shift(const PolyP& f, std::int64_t k);

// f(x) f(x+1) ... f(x+p-1) expanded in x.
PolyP shifted_product(const PolyP& f);

// g(x^p - x) expanded in x.
PolyP substitute_center(const PolyP& g);

// Euclid over Q with plain rational arithmetic, monic.
PolyQ naive_gcd(const PolyQ& a, const PolyQ& b);

// Solutions of A v = rhs over F_p by Gauss-Jordan elimination; nullopt when inconsistent.
std::optional<std::vector<std::uint64_t>> solve_mod_p(std::uint64_t p, std::vector<std::vector<std::uint64_t>> a,
                                                      std::vector<std::uint64_t> rhs);

// b of degree < deg m with b a_i = tau(a_{i-1}) mod m for every i, if one exists.
std::optional<PolyP> order_one_numerator(const OreP& l, const PolyP& m);

// Generator of the ideal of adjusted leading coefficients of order-1 integral left multiples,
// found by testing every prime-power divisor of shift(a_n, 1) for a compatible numerator.
PolyP lc1_brute_force(const OreP& l);

// b with Cont((tau - b) L) = shift(rp1, n + 1), searched through the linear condition; checked exactly.
std::optional<PolyP> content_realizer(const OreP& l, const PolyP& rp1);

// Matrix of T acting on D/DL in the basis 1, ..., tau^(n-1): row i holds tau^(p+i) mod L.
std::vector<std::vector<RatFunP>> p_curvature_by_reduction(const OreP& l);

// det(T I - M) by determinants at T = 0..n and Lagrange interpolation; needs p > n.
std::vector<RatFunP> charpoly_by_interpolation(const std::vector<std::vector<RatFunP>>& m);

// chi(L) as coefficients in F_p(Z), independent of the core p-curvature code.
CenterPoly chi_oracle(const OreP& l);

}  // namespace oracle

#endif
