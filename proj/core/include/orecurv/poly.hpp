#ifndef ORECURV_POLY_HPP
#define ORECURV_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "orecurv/field.hpp"

namespace orecurv {

// Dense univariate polynomial, coefficients lowest degree first, trailing zeros trimmed.
template <class F>
class Poly {
 public:
  using Field = F;
  using value_type = typename F::value_type;

  explicit Poly(const F& field) : field_(field) {}
  Poly(const F& field, std::vector<value_type> coeffs);

  static Poly constant(const F& field, const value_type& c);
  static Poly monomial(const F& field, const value_type& c, int deg);
  static Poly x(const F& field) { return monomial(field, field.one(), 1); }
  static Poly from_ints(const F& field, const std::vector<std::int64_t>& coeffs);

  const F& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && field_.is_one(c_[0]); }
  const std::vector<value_type>& coeffs() const { return c_; }
  value_type coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : field_.zero(); }
  const value_type& lead() const { return c_.back(); }

  Poly monic() const;
  Poly scale(const value_type& s) const;
  Poly mul_xpow(int k) const;
  Poly truncate(int n) const;  // f mod x^n
  Poly derivative() const;
  value_type eval(const value_type& v) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();

  F field_;
  std::vector<value_type> c_;
};

template <class F>
Poly<F> operator*(const Poly<F>& a, const Poly<F>& b);

// f(x + k)
template <class F>
Poly<F> shift(const Poly<F>& f, std::int64_t k);

template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b);

// a / b, throws Internal if the division is not exact.
template <class F>
Poly<F> exact_div(const Poly<F>& a, const Poly<F>& b);

// true iff a divides b
template <class F>
bool divides(const Poly<F>& a, const Poly<F>& b);

// Monic gcd; gcd(0, 0) = 0.
template <class F>
Poly<F> gcd(const Poly<F>& a, const Poly<F>& b);

template <class F>
Poly<F> lcm(const Poly<F>& a, const Poly<F>& b);

// Monic gcd of a family; throws AllZero if every input vanishes.
template <class F>
Poly<F> content_poly(const std::vector<Poly<F>>& fs);

template <class F>
Poly<F> pow(const Poly<F>& f, std::uint64_t e);

// f(g)
template <class F>
Poly<F> compose(const Poly<F>& f, const Poly<F>& g);

// Largest v with x^v | f (f nonzero).
template <class F>
int valuation(const Poly<F>& f);

using PolyP = Poly<PrimeField>;
using PolyQ = Poly<RationalField>;

}  // namespace orecurv

#endif
