#ifndef ORECURV_CENTER_HPP
#define ORECURV_CENTER_HPP

#include <string>
#include <vector>

#include "orecurv/ratfun.hpp"

namespace orecurv {

// Element of F_p(Z)[T]; coefficient i multiplies T^i, each a rational function in Z.
class CenterPoly {
 public:
  explicit CenterPoly(const PrimeField& field) : field_(field) {}
  CenterPoly(const PrimeField& field, std::vector<RatFunP> coeffs);
  static CenterPoly from_polys(const PrimeField& field, const std::vector<PolyP>& coeffs);

  const PrimeField& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_integral() const;
  const std::vector<RatFunP>& coeffs() const { return c_; }
  RatFunP coeff(int i) const { return i >= 0 && i <= degree() ? c_[i] : RatFunP(field_); }
  // Requires is_integral().
  std::vector<PolyP> polys() const;
  int z_degree() const;

  CenterPoly scale(const RatFunP& s) const;
  friend CenterPoly operator*(const CenterPoly& a, const CenterPoly& b);
  bool operator==(const CenterPoly& o) const { return field_ == o.field_ && c_ == o.c_; }
  bool operator!=(const CenterPoly& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  PrimeField field_;
  std::vector<RatFunP> c_;
};

// g with g(x^p - x) = f(x) f(x+1) ... f(x+p-1).
PolyP norm(const PolyP& f);
PolyQ norm(const PolyQ& f);
RatFunP norm_ratfun(const RatFunP& r);

// g with g(x^p - x) = f; throws NotCentral when f is not shift invariant.
PolyP to_center(const PolyP& f);
// f(x^p - x)
PolyP from_center(const PolyP& g);

// u with u*b = 1 mod Z^m.
PolyP series_inverse(const PolyP& b, int m);

}  // namespace orecurv

#endif
