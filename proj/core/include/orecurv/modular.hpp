#ifndef ORECURV_MODULAR_HPP
#define ORECURV_MODULAR_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "orecurv/poly.hpp"

namespace orecurv {

// Integer polynomials used to speed up arithmetic in Q[x].
namespace zx {

using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& f);
// f = num / den with num in Z[x] and den > 0 the lcm of the coefficient denominators.
ZPoly to_integral(const PolyQ& f, mpz_class& den);
PolyQ from_integral(const ZPoly& num, const mpz_class& den);
ZPoly mul(const ZPoly& a, const ZPoly& b);
void taylor_shift(ZPoly& f, const mpz_class& k);
mpz_class content(const ZPoly& f);
void divide_content(ZPoly& f);
// Division in Z[x]; returns false when b does not divide a.
bool exact_divide(const ZPoly& a, const ZPoly& b, ZPoly* quotient);
PolyP reduce(const ZPoly& f, const PrimeField& field);

}  // namespace zx

// i-th prime below 2^62 in decreasing order, used for multimodular algorithms.
inline constexpr std::size_t kMaxModularPrimes = 4096;
std::uint64_t modular_prime(std::size_t i);

// acc is known modulo m; fold in acc = r (mod q) so that acc becomes known modulo m*q.
void crt_accumulate(mpz_class& acc, const mpz_class& m, std::uint64_t r, std::uint64_t q);

// Symmetric representative of u modulo m.
mpz_class symmetric_mod(const mpz_class& u, const mpz_class& m);

// Finds n/d = u (mod m) with |n|, d <= sqrt(m/2); false if none exists.
bool rational_reconstruct(const mpz_class& u, const mpz_class& m, mpq_class& out);

// Monic gcd in Q[x] by the modular method with trial-division check.
PolyQ gcd_modular(const PolyQ& a, const PolyQ& b);

// Reduction of a polynomial with rational coefficients; false if p divides a denominator.
bool reduce_rational(const PolyQ& f, const PrimeField& field, PolyP& out);

}  // namespace orecurv

#endif
