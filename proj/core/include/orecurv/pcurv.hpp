#ifndef ORECURV_PCURV_HPP
#define ORECURV_PCURV_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "orecurv/center.hpp"
#include "orecurv/desing.hpp"
#include "orecurv/ore.hpp"

namespace orecurv {

inline constexpr std::uint64_t kDefaultPrimeCap = 211;

// Matrix of T = tau^p on D/DL in the basis 1, tau, ..., tau^(n-1), acting on coordinate rows:
// M = shift(C, p-1) ... shift(C, 1) C with C the companion matrix.
struct PCurvMatrix {
  int size = 0;
  std::vector<std::vector<RatFunP>> entries;
};

struct ChiResult {
  CenterPoly chi;                         // monic in T
  std::optional<CenterPoly> chi_tilde;    // N(lc*(L)) chi, for integral L
  PolyP denom;                            // monic, in Z
  CenterPoly prim_chi;                    // denom * chi
};

PCurvMatrix p_curvature(const OreP& l, std::uint64_t prime_cap = kDefaultPrimeCap);

ChiResult chi(const OreP& l, std::uint64_t prime_cap = kDefaultPrimeCap);

PolyP denom_chi(const OreP& l, std::uint64_t prime_cap = kDefaultPrimeCap);

bool is_gaussian(const OreP& l, std::uint64_t prime_cap = kDefaultPrimeCap);

struct SingularityClass {
  PolyP representative;
  int multiplicity;
};

std::vector<SingularityClass> true_singularity_classes(const OreP& l, std::uint64_t prime_cap = kDefaultPrimeCap);

// chi_tilde(L) mod Z^precision, coefficientwise in T.
std::vector<PolyP> chi_tilde_truncated(const OreP& l, int precision, std::uint64_t prime_cap = kDefaultPrimeCap);

struct XiReport {
  CenterPoly prim_chi;
  PolyP alpha;
  PolyP beta;
  int v = 0;
  int d = 0;
  int d1 = 0;
  int precision = 0;
};

XiReport xi_p_desing_report(const OreP& l, std::uint64_t prime_cap = kDefaultPrimeCap);

CenterPoly xi_p_desing(const OreP& l, std::uint64_t prime_cap = kDefaultPrimeCap);

bool denom_multiplicativity_check(const OreP& a, const OreP& l, std::uint64_t prime_cap = kDefaultPrimeCap);

bool shift_equivalent(const RatFunP& r1, const RatFunP& r2);

// Operator in tau with coefficient f_k(x^p - x) at tau^(p k).
OreP central_to_operator(const CenterPoly& c);

// Characteristic polynomial det(T I - A) by the division-free Berkowitz method;
// returns c_0 = 1, c_1, ..., c_n with det = sum c_k T^(n-k).
std::vector<PolyP> charpoly_berkowitz(const std::vector<std::vector<PolyP>>& a);

}  // namespace orecurv

#endif
