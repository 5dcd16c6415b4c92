#include "orecurv/ratfun.hpp"

namespace orecurv {

template <class F>
RatFun<F>::RatFun(PolyT num, PolyT den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = PolyT::constant(num_.field(), num_.field().one());
    return;
  }
  if (den_.degree() > 0) {
    PolyT g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  if (!den_.field().is_one(den_.lead())) {
    auto s = den_.field().inv(den_.lead());
    num_ = num_.scale(s);
    den_ = den_.scale(s);
  }
}

template <class F>
RatFun<F> RatFun<F>::from_normalized(PolyT num, PolyT den) {
  RatFun r(num.field());
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

template <class F>
RatFun<F> RatFun<F>::inv() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero rational function");
  auto s = field().inv(num_.lead());
  return from_normalized(den_.scale(s), num_.scale(s));
}

template <class F>
RatFun<F> RatFun<F>::add(const RatFun& a, const RatFun& b, bool subtract) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return subtract ? -b : b;
  if (a.is_polynomial() && b.is_polynomial())
    return RatFun(subtract ? a.num_ - b.num_ : a.num_ + b.num_);
  if (a.den_ == b.den_) {
    PolyT n = subtract ? a.num_ - b.num_ : a.num_ + b.num_;
    return RatFun(std::move(n), a.den_);
  }
  PolyT g = gcd(a.den_, b.den_);
  PolyT ad = exact_div(a.den_, g);
  PolyT bd = exact_div(b.den_, g);
  PolyT n = subtract ? a.num_ * bd - b.num_ * ad : a.num_ * bd + b.num_ * ad;
  PolyT d = ad * b.den_;
  if (n.is_zero()) return RatFun(a.field());
  if (g.degree() > 0) {
    PolyT h = gcd(n, g);
    if (h.degree() > 0) {
      n = exact_div(n, h);
      d = exact_div(d, h);
    }
  }
  return from_normalized(std::move(n), std::move(d));
}

template <class F>
RatFun<F> RatFun<F>::mul(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return RatFun(a.field());
  if (a.is_polynomial() && b.is_polynomial()) return from_normalized(a.num_ * b.num_, a.den_);
  PolyT an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (bd.degree() > 0 && an.degree() > 0) {
    PolyT g = gcd(an, bd);
    if (g.degree() > 0) {
      an = exact_div(an, g);
      bd = exact_div(bd, g);
    }
  }
  if (ad.degree() > 0 && bn.degree() > 0) {
    PolyT g = gcd(bn, ad);
    if (g.degree() > 0) {
      bn = exact_div(bn, g);
      ad = exact_div(ad, g);
    }
  }
  return from_normalized(an * bn, ad * bd);
}

template <class F>
std::string RatFun<F>::to_string(const std::string& var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

template <class F>
RatFun<F> shift(const RatFun<F>& r, std::int64_t k) {
  if (k == 0) return r;
  return RatFun<F>::from_normalized(shift(r.num(), k), shift(r.den(), k));
}

template class RatFun<PrimeField>;
template class RatFun<RationalField>;
template RatFun<PrimeField> shift(const RatFun<PrimeField>&, std::int64_t);
template RatFun<RationalField> shift(const RatFun<RationalField>&, std::int64_t);

}  // namespace orecurv
