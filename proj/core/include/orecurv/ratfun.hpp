#ifndef ORECURV_RATFUN_HPP
#define ORECURV_RATFUN_HPP

#include <string>

#include "orecurv/poly.hpp"

namespace orecurv {

// num/den with gcd(num, den) = 1 and den monic; zero is 0/1.
template <class F>
class RatFun {
 public:
  using PolyT = Poly<F>;

  explicit RatFun(const F& field) : num_(field), den_(PolyT::constant(field, field.one())) {}
  explicit RatFun(PolyT num) : num_(std::move(num)), den_(PolyT::constant(num_.field(), num_.field().one())) {}
  RatFun(PolyT num, PolyT den);

  // Trusts the caller that the pair is already in lowest terms with monic denominator.
  static RatFun from_normalized(PolyT num, PolyT den);

  const F& field() const { return num_.field(); }
  const PolyT& num() const { return num_; }
  const PolyT& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFun inv() const;
  RatFun operator-() const { return from_normalized(-num_, den_); }
  friend RatFun operator+(const RatFun& a, const RatFun& b) { return add(a, b, false); }
  friend RatFun operator-(const RatFun& a, const RatFun& b) { return add(a, b, true); }
  friend RatFun operator*(const RatFun& a, const RatFun& b) { return mul(a, b); }
  friend RatFun operator/(const RatFun& a, const RatFun& b) { return mul(a, b.inv()); }
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }

  bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  std::string to_string(const std::string& var = "x") const;

 private:
  static RatFun add(const RatFun& a, const RatFun& b, bool subtract);
  static RatFun mul(const RatFun& a, const RatFun& b);

  PolyT num_;
  PolyT den_;
};

template <class F>
RatFun<F> shift(const RatFun<F>& r, std::int64_t k);

using RatFunP = RatFun<PrimeField>;
using RatFunQ = RatFun<RationalField>;

}  // namespace orecurv

#endif
