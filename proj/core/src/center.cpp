#include "orecurv/center.hpp"

#include <sstream>

namespace orecurv {

CenterPoly::CenterPoly(const PrimeField& field, std::vector<RatFunP> coeffs) : field_(field), c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

CenterPoly CenterPoly::from_polys(const PrimeField& field, const std::vector<PolyP>& coeffs) {
  std::vector<RatFunP> c;
  c.reserve(coeffs.size());
  for (const auto& f : coeffs) c.emplace_back(f);
  return CenterPoly(field, std::move(c));
}

bool CenterPoly::is_integral() const {
  for (const auto& c : c_)
    if (!c.is_polynomial()) return false;
  return true;
}

std::vector<PolyP> CenterPoly::polys() const {
  if (!is_integral()) throw Error(ErrorCode::NotIntegral, "center polynomial has denominators");
  std::vector<PolyP> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(c.num());
  return r;
}

int CenterPoly::z_degree() const {
  int d = -1;
  for (const auto& c : c_) d = std::max({d, c.num().degree(), c.den().degree()});
  return d;
}

CenterPoly CenterPoly::scale(const RatFunP& s) const {
  std::vector<RatFunP> c;
  c.reserve(c_.size());
  for (const auto& x : c_) c.push_back(x * s);
  return CenterPoly(field_, std::move(c));
}

CenterPoly operator*(const CenterPoly& a, const CenterPoly& b) {
  if (a.is_zero() || b.is_zero()) return CenterPoly(a.field_);
  std::vector<RatFunP> c(a.c_.size() + b.c_.size() - 1, RatFunP(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return CenterPoly(a.field_, std::move(c));
}

std::string CenterPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << c_[i].to_string("Z") << ")";
    if (i > 0) out << "*T";
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

namespace {

template <class F>
Poly<F> shifted_product(const Poly<F>& f, std::uint64_t p) {
  // balanced product of f(x+i), i < p
  std::vector<Poly<F>> level;
  level.reserve(p);
  for (std::uint64_t i = 0; i < p; ++i) level.push_back(shift(f, static_cast<std::int64_t>(i)));
  while (level.size() > 1) {
    std::vector<Poly<F>> next;
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] * level[i + 1]);
    if (level.size() % 2) next.push_back(level.back());
    level = std::move(next);
  }
  return level[0];
}

}  // namespace

PolyP norm(const PolyP& f) {
  if (f.degree() <= 0) return f;
  return to_center(shifted_product(f, f.field().characteristic()));
}

PolyQ norm(const PolyQ&) {
  throw Error(ErrorCode::NeedsPositiveCharacteristic, "norm requires a field of positive characteristic");
}

RatFunP norm_ratfun(const RatFunP& r) {
  if (r.is_zero()) throw Error(ErrorCode::ZeroInput, "norm of zero");
  return RatFunP(norm(r.num()), norm(r.den()));
}

PolyP to_center(const PolyP& f) {
  const PrimeField& field = f.field();
  const std::uint64_t p = field.characteristic();
  if (f.degree() <= 0) return f;
  // division by x^p - x: the quotient step only touches coefficients p apart
  std::vector<std::uint64_t> rest = f.coeffs();
  std::vector<std::uint64_t> out;
  while (!rest.empty()) {
    const std::size_t n = rest.size();
    if (n <= p) {
      for (std::size_t i = 1; i < n; ++i)
        if (rest[i] != 0) throw Error(ErrorCode::NotCentral, "polynomial is not shift invariant");
      out.push_back(rest[0]);
      break;
    }
    // rest = q*(x^p - x) + r, deg r < p
    std::vector<std::uint64_t> q(n - p, 0);
    for (std::size_t i = n; i-- > p;) {
      std::uint64_t c = rest[i];
      if (c == 0) continue;
      q[i - p] = c;
      rest[i] = 0;
      rest[i - p + 1] = field.add(rest[i - p + 1], c);
    }
    for (std::size_t i = 1; i < p; ++i)
      if (rest[i] != 0) throw Error(ErrorCode::NotCentral, "polynomial is not shift invariant");
    out.push_back(rest[0]);
    while (!q.empty() && q.back() == 0) q.pop_back();
    rest = std::move(q);
  }
  return PolyP(field, std::move(out));
}

PolyP from_center(const PolyP& g) {
  const PrimeField& field = g.field();
  PolyP z = PolyP::monomial(field, 1, static_cast<int>(field.characteristic())) - PolyP::x(field);
  return compose(g, z);
}

PolyP series_inverse(const PolyP& b, int m) {
  const PrimeField& field = b.field();
  if (b.is_zero() || b.coeffs()[0] == 0) throw Error(ErrorCode::NotAUnit, "series has no constant term");
  if (m <= 0) return PolyP(field);
  std::vector<std::uint64_t> u(m, 0);
  const std::uint64_t inv0 = field.inv(b.coeffs()[0]);
  u[0] = inv0;
  for (int k = 1; k < m; ++k) {
    std::uint64_t s = 0;
    for (int j = 1; j <= std::min(k, b.degree()); ++j) s = field.add(s, field.mul(b.coeffs()[j], u[k - j]));
    u[k] = field.mul(field.neg(s), inv0);
  }
  return PolyP(field, std::move(u));
}

}  // namespace orecurv
