#include "orecurv/ore.hpp"

#include <sstream>
#include <type_traits>

#include "lclm_modular.hpp"
#include "orecurv/modular.hpp"

namespace orecurv {

template <class F>
OrePoly<F>::OrePoly(const F& field, std::vector<RatFunT> coeffs) : field_(field), c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

template <class F>
OrePoly<F> OrePoly<F>::from_polys(const F& field, const std::vector<PolyT>& coeffs) {
  std::vector<RatFunT> c;
  c.reserve(coeffs.size());
  for (const auto& f : coeffs) c.emplace_back(f);
  return OrePoly(field, std::move(c));
}

template <class F>
OrePoly<F> OrePoly<F>::tau_power(const F& field, int k) {
  std::vector<RatFunT> c(k + 1, RatFunT(field));
  c[k] = RatFunT(PolyT::constant(field, field.one()));
  return OrePoly(field, std::move(c));
}

template <class F>
OrePoly<F> OrePoly<F>::scalar(const RatFunT& r) {
  return OrePoly(r.field(), std::vector<RatFunT>{r});
}

template <class F>
bool OrePoly<F>::is_integral() const {
  for (const auto& c : c_)
    if (!c.is_polynomial()) return false;
  return true;
}

template <class F>
std::vector<Poly<F>> OrePoly<F>::polys() const {
  if (!is_integral()) throw Error(ErrorCode::NotIntegral, "operator has non-polynomial coefficients");
  std::vector<PolyT> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(c.num());
  return r;
}

template <class F>
int OrePoly<F>::x_degree() const {
  int d = -1;
  for (const auto& c : c_) d = std::max({d, c.num().degree(), c.den().degree()});
  return d;
}

template <class F>
int OrePoly<F>::trailing_index() const {
  if (is_zero()) throw Error(ErrorCode::ZeroInput, "zero operator");
  int m = 0;
  while (c_[m].is_zero()) ++m;
  return m;
}

template <class F>
OrePoly<F> OrePoly<F>::operator-() const {
  std::vector<RatFunT> c;
  c.reserve(c_.size());
  for (const auto& x : c_) c.push_back(-x);
  return OrePoly(field_, std::move(c));
}

template <class F>
OrePoly<F>& OrePoly<F>::operator+=(const OrePoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), RatFunT(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  return *this;
}

template <class F>
OrePoly<F>& OrePoly<F>::operator-=(const OrePoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), RatFunT(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  return *this;
}

template <class F>
OrePoly<F> OrePoly<F>::left_scale(const RatFunT& r) const {
  std::vector<RatFunT> c;
  c.reserve(c_.size());
  for (const auto& x : c_) c.push_back(r * x);
  return OrePoly(field_, std::move(c));
}

template <class F>
OrePoly<F> OrePoly<F>::shift_coeffs(std::int64_t k) const {
  std::vector<RatFunT> c;
  c.reserve(c_.size());
  for (const auto& x : c_) c.push_back(shift(x, k));
  return OrePoly(field_, std::move(c));
}

template <class F>
OrePoly<F> OrePoly<F>::tau_mul(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<RatFunT> c(k, RatFunT(field_));
  for (const auto& x : c_) c.push_back(shift(x, k));
  return OrePoly(field_, std::move(c));
}

template <class F>
std::string OrePoly<F>::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << c_[i].to_string() << ")";
    if (i > 0) out << "*t";
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

template <class F>
OrePoly<F> ore_mul(const OrePoly<F>& a, const OrePoly<F>& b) {
  if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, "operators over different fields");
  const F& field = a.field();
  if (a.is_zero() || b.is_zero()) return OrePoly<F>(field);
  std::vector<RatFun<F>> c(a.order() + b.order() + 1, RatFun<F>(field));
  for (int i = 0; i <= a.order(); ++i) {
    const auto& ai = a.coeffs()[i];
    if (ai.is_zero()) continue;
    for (int j = 0; j <= b.order(); ++j) {
      const auto& bj = b.coeffs()[j];
      if (bj.is_zero()) continue;
      c[i + j] += ai * shift(bj, i);
    }
  }
  return OrePoly<F>(field, std::move(c));
}

template <class F>
DivisionResult<F> right_divide(const OrePoly<F>& a, const OrePoly<F>& b) {
  const F& field = a.field();
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "right division by the zero operator");
  if (a.order() < b.order()) return {OrePoly<F>(field), a};
  std::vector<RatFun<F>> q(a.order() - b.order() + 1, RatFun<F>(field));
  auto r = a.coeffs();
  const int m = b.order();
  std::vector<std::vector<RatFun<F>>> shifted(q.size());
  for (int top = a.order(); top >= m; --top) {
    if (r[top].is_zero()) continue;
    const int k = top - m;
    if (shifted[k].empty())
      for (const auto& bj : b.coeffs()) shifted[k].push_back(shift(bj, k));
    RatFun<F> c = r[top] / shifted[k][m];
    q[k] = c;
    r[top] = RatFun<F>(field);
    for (int j = 0; j < m; ++j)
      if (!shifted[k][j].is_zero()) r[j + k] -= c * shifted[k][j];
  }
  r.resize(m, RatFun<F>(field));
  return {OrePoly<F>(field, std::move(q)), OrePoly<F>(field, std::move(r))};
}

template <class F>
bool right_divides(const OrePoly<F>& b, const OrePoly<F>& a) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "right division by the zero operator");
  if (a.is_zero()) return true;
  if (!a.is_integral() || !b.is_integral()) return right_divide(a, b).remainder.is_zero();
  const F& field = a.field();
  std::vector<Poly<F>> r = a.polys();
  const std::vector<Poly<F>> bp = b.polys();
  const int m = b.order();
  int top = a.order();
  while (top >= m) {
    const int k = top - m;
    Poly<F> s = shift(bp[m], k);
    Poly<F> l = r[top];
    for (int j = 0; j < top; ++j) r[j] = r[j] * s;
    for (int j = 0; j < m; ++j)
      if (!bp[j].is_zero()) r[j + k] -= l * shift(bp[j], k);
    r[top] = Poly<F>(field);
    while (top >= 0 && r[top].is_zero()) --top;
    if (top < 0) return true;
  }
  return false;
}

template <class F>
OrePoly<F> make_monic(const OrePoly<F>& l) {
  if (l.is_zero()) throw Error(ErrorCode::ZeroInput, "zero operator");
  if (l.lead().is_polynomial() && l.lead().num().is_one()) return l;
  return l.left_scale(l.lead().inv());
}

template <class F>
OrePoly<F> gcrd(const OrePoly<F>& a, const OrePoly<F>& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::AllZero, "gcrd of two zero operators");
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  OrePoly<F> r0 = make_monic(a.order() >= b.order() ? a : b);
  OrePoly<F> r1 = make_monic(a.order() >= b.order() ? b : a);
  while (!r1.is_zero()) {
    OrePoly<F> r = right_divide(r0, r1).remainder;
    r0 = std::move(r1);
    r1 = r.is_zero() ? r : make_monic(r);
  }
  return r0;
}

template <class F>
OrePoly<F> lclm_euclidean(const OrePoly<F>& a, const OrePoly<F>& b) {
  const F& field = a.field();
  if (a.is_zero() || b.is_zero()) throw Error(ErrorCode::ZeroInput, "lclm with a zero operator");
  // u_i * a = r_i modulo left multiples of b
  OrePoly<F> r0 = make_monic(a), r1 = make_monic(b);
  OrePoly<F> u0 = OrePoly<F>::tau_power(field, 0).left_scale(a.lead().inv());
  OrePoly<F> u1(field);
  while (!r1.is_zero()) {
    auto [q, r] = right_divide(r0, r1);
    OrePoly<F> u = u0 - ore_mul(q, u1);
    if (!r.is_zero()) {
      RatFun<F> s = r.lead().inv();
      r = r.left_scale(s);
      u = u.left_scale(s);
    }
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u);
  }
  return make_monic(ore_mul(u1, a));
}

template <class F>
OrePoly<F> lclm(const OrePoly<F>& a, const OrePoly<F>& b) {
  if constexpr (std::is_same_v<F, RationalField>) {
    return make_monic(lclm_prim(a, b));
  } else {
    return lclm_euclidean(a, b);
  }
}

template <class F>
OrePoly<F> lclm_prim(const OrePoly<F>& a, const OrePoly<F>& b) {
  if (a.is_zero() || b.is_zero()) throw Error(ErrorCode::ZeroInput, "lclm with a zero operator");
  if constexpr (std::is_same_v<F, RationalField>) {
    return detail::lclm_prim_multimodular(prim(a), prim(b));
  } else {
    return prim(lclm_euclidean(a, b));
  }
}

template <class F>
OrePoly<F> lclm_first_order(const OrePoly<F>& l, const typename F::value_type& c) {
  const F& field = l.field();
  if (l.is_zero()) throw Error(ErrorCode::ZeroInput, "zero operator");
  // sum_i c^i (a_i tau - tau(a_{i-1})) = C1 tau - c tau(C1) with C1 = sum_i c^i a_i
  RatFun<F> c1(field);
  auto ci = field.one();
  for (int i = 0; i <= l.order(); ++i) {
    c1 += l.coeffs()[i] * RatFun<F>(Poly<F>::constant(field, ci));
    ci = field.mul(ci, c);
  }
  RatFun<F> c0 = shift(c1, 1) * RatFun<F>(Poly<F>::constant(field, c));
  OrePoly<F> left(field, {-c0, c1});
  return ore_mul(left, l);
}

template <class F>
Poly<F> content(const OrePoly<F>& l) {
  if (l.is_zero()) throw Error(ErrorCode::ZeroInput, "content of zero operator");
  return content_poly(l.polys());
}

template <class F>
OrePoly<F> prim(const OrePoly<F>& l) {
  if (l.is_zero()) throw Error(ErrorCode::ZeroInput, "primitive part of zero operator");
  const F& field = l.field();
  std::vector<Poly<F>> p;
  if (l.is_integral()) {
    p = l.polys();
  } else {
    Poly<F> d = Poly<F>::constant(field, field.one());
    for (const auto& c : l.coeffs()) d = lcm(d, c.den());
    for (const auto& c : l.coeffs()) p.push_back(c.num() * exact_div(d, c.den()));
  }
  Poly<F> g = content_poly(p);
  auto s = field.one();
  if (g.degree() > 0) {
    for (auto& f : p) f = exact_div(f, g);
  }
  s = field.inv(p.back().lead());
  if (!field.is_one(s))
    for (auto& f : p) f = f.scale(s);
  return OrePoly<F>::from_polys(field, p);
}

template <class F>
bool is_primitive(const OrePoly<F>& l) {
  return l.is_integral() && content(l).degree() == 0;
}

template <class F>
Poly<F> lc_star(const OrePoly<F>& l) {
  if (l.is_zero()) throw Error(ErrorCode::ZeroInput, "zero operator");
  if (!l.is_integral()) throw Error(ErrorCode::NotIntegral, "lc* needs an integral operator");
  return shift(l.lead().num(), -l.order()).monic();
}

template <class F>
Poly<F> tc_star(const OrePoly<F>& l) {
  if (l.is_zero()) throw Error(ErrorCode::ZeroInput, "zero operator");
  if (!l.is_integral()) throw Error(ErrorCode::NotIntegral, "tc* needs an integral operator");
  if (l.coeffs()[0].is_zero()) throw Error(ErrorCode::ZeroTrailing, "a_0 = 0");
  return l.coeffs()[0].num().monic();
}

template <class F>
Poly<F> tc_adjusted(const OrePoly<F>& l) {
  if (!l.is_integral()) throw Error(ErrorCode::NotIntegral, "tc needs an integral operator");
  const int m = l.trailing_index();
  return shift(l.coeffs()[m].num(), -m).monic();
}

template <class F>
CompanionMatrix<F> companion(const OrePoly<F>& l) {
  if (l.is_zero()) throw Error(ErrorCode::ZeroInput, "zero operator");
  const int n = l.order();
  if (n < 1) throw Error(ErrorCode::OrderZero, "companion matrix of an order 0 operator");
  const F& field = l.field();
  CompanionMatrix<F> m;
  m.size = n;
  m.entries.assign(n, std::vector<RatFun<F>>(n, RatFun<F>(field)));
  const RatFun<F> one(Poly<F>::constant(field, field.one()));
  for (int i = 0; i + 1 < n; ++i) m.entries[i][i + 1] = one;
  const RatFun<F> inv_lead = l.lead().inv();
  for (int j = 0; j < n; ++j) m.entries[n - 1][j] = -(l.coeffs()[j] * inv_lead);
  return m;
}

Reduction reduce_mod_p(const OrePoly<RationalField>& l, std::uint64_t p) {
  PrimeField fp(p);
  if (l.is_zero()) throw Error(ErrorCode::ZeroInput, "zero operator");
  std::vector<PolyQ> polys;
  if (l.is_integral()) {
    polys = l.polys();
  } else {
    PolyQ d = PolyQ::constant(RationalField(), 1);
    for (const auto& c : l.coeffs()) d = lcm(d, c.den());
    for (const auto& c : l.coeffs()) polys.push_back(c.num() * exact_div(d, c.den()));
  }
  mpz_class den = 1;
  for (const auto& f : polys)
    for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<PolyP> out;
  bool all_zero = true;
  for (const auto& f : polys) {
    std::vector<std::uint64_t> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = fp.from_mpz(mpz_class(f.coeffs()[i] * den));
    out.emplace_back(fp, std::move(c));
    if (!out.back().is_zero()) all_zero = false;
  }
  if (all_zero) throw Error(ErrorCode::DegenerateReduction, "operator vanishes modulo " + std::to_string(p));
  Reduction r{OrePoly<PrimeField>::from_polys(fp, out), false};
  r.order_dropped = r.op.order() < l.order();
  return r;
}

#define ORECURV_INSTANTIATE_ORE(F)                                                            \
  template class OrePoly<F>;                                                                  \
  template OrePoly<F> ore_mul(const OrePoly<F>&, const OrePoly<F>&);                          \
  template DivisionResult<F> right_divide(const OrePoly<F>&, const OrePoly<F>&);              \
  template bool right_divides(const OrePoly<F>&, const OrePoly<F>&);                          \
  template OrePoly<F> make_monic(const OrePoly<F>&);                                          \
  template OrePoly<F> gcrd(const OrePoly<F>&, const OrePoly<F>&);                             \
  template OrePoly<F> lclm(const OrePoly<F>&, const OrePoly<F>&);                             \
  template OrePoly<F> lclm_prim(const OrePoly<F>&, const OrePoly<F>&);                        \
  template OrePoly<F> lclm_euclidean(const OrePoly<F>&, const OrePoly<F>&);                   \
  template OrePoly<F> lclm_first_order(const OrePoly<F>&, const typename F::value_type&);     \
  template Poly<F> content(const OrePoly<F>&);                                                \
  template OrePoly<F> prim(const OrePoly<F>&);                                                \
  template bool is_primitive(const OrePoly<F>&);                                              \
  template Poly<F> lc_star(const OrePoly<F>&);                                                \
  template Poly<F> tc_star(const OrePoly<F>&);                                                \
  template Poly<F> tc_adjusted(const OrePoly<F>&);                                            \
  template CompanionMatrix<F> companion(const OrePoly<F>&);

ORECURV_INSTANTIATE_ORE(PrimeField)
ORECURV_INSTANTIATE_ORE(RationalField)

}  // namespace orecurv
