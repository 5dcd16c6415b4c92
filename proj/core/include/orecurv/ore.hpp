#ifndef ORECURV_ORE_HPP
#define ORECURV_ORE_HPP

#include <string>
#include <utility>
#include <vector>

#include "orecurv/ratfun.hpp"

namespace orecurv {

// Sum of a_i(x) tau^i with tau * r(x) = r(x+1) * tau.
template <class F>
class OrePoly {
 public:
  using PolyT = Poly<F>;
  using RatFunT = RatFun<F>;

  explicit OrePoly(const F& field) : field_(field) {}
  OrePoly(const F& field, std::vector<RatFunT> coeffs);
  static OrePoly from_polys(const F& field, const std::vector<PolyT>& coeffs);
  static OrePoly tau_power(const F& field, int k);
  static OrePoly scalar(const RatFunT& r);

  const F& field() const { return field_; }
  int order() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_integral() const;
  const std::vector<RatFunT>& coeffs() const { return c_; }
  RatFunT coeff(int i) const { return i >= 0 && i <= order() ? c_[i] : RatFunT(field_); }
  const RatFunT& lead() const { return c_.back(); }
  // Polynomial coefficients; throws NotIntegral unless is_integral().
  std::vector<PolyT> polys() const;
  int x_degree() const;
  // Lowest index with a nonzero coefficient.
  int trailing_index() const;

  OrePoly operator-() const;
  OrePoly& operator+=(const OrePoly& o);
  OrePoly& operator-=(const OrePoly& o);
  friend OrePoly operator+(OrePoly a, const OrePoly& b) { return a += b; }
  friend OrePoly operator-(OrePoly a, const OrePoly& b) { return a -= b; }
  // r * L for r in F(x)
  OrePoly left_scale(const RatFunT& r) const;
  // tau^k * L * tau^-k, i.e. every coefficient shifted by k
  OrePoly shift_coeffs(std::int64_t k) const;
  // tau^k * L
  OrePoly tau_mul(int k) const;

  bool operator==(const OrePoly& o) const { return c_ == o.c_; }
  bool operator!=(const OrePoly& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  F field_;
  std::vector<RatFunT> c_;
};

template <class F>
OrePoly<F> ore_mul(const OrePoly<F>& a, const OrePoly<F>& b);

template <class F>
struct DivisionResult {
  OrePoly<F> quotient;
  OrePoly<F> remainder;
};

// a = q*b + r with ord r < ord b.
template <class F>
DivisionResult<F> right_divide(const OrePoly<F>& a, const OrePoly<F>& b);

// True iff b right-divides a; fraction free for integral inputs.
template <class F>
bool right_divides(const OrePoly<F>& b, const OrePoly<F>& a);

template <class F>
OrePoly<F> make_monic(const OrePoly<F>& l);

template <class F>
OrePoly<F> gcrd(const OrePoly<F>& a, const OrePoly<F>& b);

// Monic least common left multiple.
template <class F>
OrePoly<F> lclm(const OrePoly<F>& a, const OrePoly<F>& b);

// prim(lclm(a, b)) without passing through the monic form; multimodular over Q.
template <class F>
OrePoly<F> lclm_prim(const OrePoly<F>& a, const OrePoly<F>& b);

// Plain extended Euclidean algorithm over F(x), for any field.
template <class F>
OrePoly<F> lclm_euclidean(const OrePoly<F>& a, const OrePoly<F>& b);

// sum_i c^i L_i, a left multiple of L by an operator of order 1 and right-divisible by tau - c.
template <class F>
OrePoly<F> lclm_first_order(const OrePoly<F>& l, const typename F::value_type& c);

template <class F>
Poly<F> content(const OrePoly<F>& l);

template <class F>
OrePoly<F> prim(const OrePoly<F>& l);

template <class F>
bool is_primitive(const OrePoly<F>& l);

// a_n(x - n) made monic.
template <class F>
Poly<F> lc_star(const OrePoly<F>& l);

// a_0 made monic; ZeroTrailing when a_0 = 0.
template <class F>
Poly<F> tc_star(const OrePoly<F>& l);

// a_m(x + m) made monic for the lowest nonzero index m.
template <class F>
Poly<F> tc_adjusted(const OrePoly<F>& l);

template <class F>
struct CompanionMatrix {
  int size = 0;
  std::vector<std::vector<RatFun<F>>> entries;
};

template <class F>
CompanionMatrix<F> companion(const OrePoly<F>& l);

struct Reduction {
  OrePoly<PrimeField> op;
  bool order_dropped = false;
};

Reduction reduce_mod_p(const OrePoly<RationalField>& l, std::uint64_t p);

using OreP = OrePoly<PrimeField>;
using OreQ = OrePoly<RationalField>;

}  // namespace orecurv

#endif
