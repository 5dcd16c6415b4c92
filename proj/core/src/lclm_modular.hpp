#ifndef ORECURV_LCLM_MODULAR_HPP
#define ORECURV_LCLM_MODULAR_HPP

#include "orecurv/ore.hpp"

namespace orecurv::detail {

// prim(lclm(a, b)) over Q from images modulo word-size primes, verified by exact right division.
OrePoly<RationalField> lclm_prim_multimodular(const OrePoly<RationalField>& a, const OrePoly<RationalField>& b);

}  // namespace orecurv::detail

#endif
