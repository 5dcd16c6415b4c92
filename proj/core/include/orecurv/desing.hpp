#ifndef ORECURV_DESING_HPP
#define ORECURV_DESING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "orecurv/ore.hpp"

namespace orecurv {

enum class DesingMethod { algorithm2, algorithm3, lclm_mc };

const char* method_name(DesingMethod m);

template <class F>
struct Witness {
  int index;
  Poly<F> lc0;
};

// For algorithm3, lc1 holds the bound l and tc_bound the bound t.
template <class F>
struct DesingReport {
  DesingMethod method;
  Poly<F> lc0;
  Poly<F> lc1;
  Poly<F> rp1;
  std::optional<Poly<F>> tc_bound;
  std::vector<Witness<F>> witnesses;
};

// lc*(prim(L))
template <class F>
Poly<F> lc0(const OrePoly<F>& l);

// (a_i tau - tau(a_{i-1})) L, with a_{-1} = a_{n+1} = 0.
template <class F>
OrePoly<F> build_Li(const OrePoly<F>& l, int i);

template <class F>
std::vector<int> select_index_set(const OrePoly<F>& l);

template <class F>
DesingReport<F> lc1_algorithm2(const OrePoly<F>& l);

template <class F>
DesingReport<F> lc1_tc1_algorithm3(const OrePoly<F>& l);

// Monte-Carlo bound: gcd over trials of gcd(lc*(L), lc*(prim(lclm(sum c_i tau^i, L)))).
template <class F>
Poly<F> lclm_method(const OrePoly<F>& l, int k, int trials, std::uint64_t seed);

// lc*(L) / lc_k(L) for k in {0, 1}.
template <class F>
Poly<F> rp(const OrePoly<F>& l, int k);

// L' = (C_1 tau - C_0) L with C_1 = sum c_i a_i, C_0 = sum c_i tau(a_{i-1}); checks
// lc1 | lc0(L') | shift(C_1, -n-1) lc1.
template <class F>
bool sandwich_check(const OrePoly<F>& l, const std::vector<typename F::value_type>& c);

}  // namespace orecurv

#endif
