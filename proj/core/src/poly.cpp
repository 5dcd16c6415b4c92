#include "orecurv/poly.hpp"

#include <cmath>
#include <sstream>
#include <type_traits>

#include "orecurv/modular.hpp"

namespace orecurv {

namespace {

template <class F>
constexpr bool is_rational_v = std::is_same_v<F, RationalField>;

// Kronecker substitution: one coefficient per slot of w 64-bit words, multiplied as integers by GMP.
std::vector<std::uint64_t> mul_kronecker(std::uint64_t p, const std::vector<std::uint64_t>& a,
                                         const std::vector<std::uint64_t>& b, std::size_t w) {
  auto pack = [w](const std::vector<std::uint64_t>& f) {
    std::vector<std::uint64_t> words(f.size() * w, 0);
    for (std::size_t i = 0; i < f.size(); ++i) words[i * w] = f[i];
    mpz_class z;
    mpz_import(z.get_mpz_t(), words.size(), -1, sizeof(std::uint64_t), 0, 0, words.data());
    return z;
  };
  mpz_class c = pack(a) * pack(b);
  const std::size_t n = a.size() + b.size() - 1;
  std::vector<std::uint64_t> words(n * w + 1, 0);
  std::size_t count = 0;
  mpz_export(words.data(), &count, -1, sizeof(std::uint64_t), 0, 0, c.get_mpz_t());
  std::vector<std::uint64_t> r(n);
  for (std::size_t k = 0; k < n; ++k) {
    unsigned __int128 v = words[k * w];
    if (w == 2) v |= static_cast<unsigned __int128>(words[k * w + 1]) << 64;
    r[k] = static_cast<std::uint64_t>(v % p);
  }
  return r;
}

std::vector<PolyP::value_type> mul_mod_p(const PrimeField& field, const std::vector<std::uint64_t>& a,
                                         const std::vector<std::uint64_t>& b) {
  const std::uint64_t p = field.characteristic();
  if (std::min(a.size(), b.size()) >= 24) {
    // bound on a coefficient of the integer product: min(len) (p-1)^2
    const double bits = 2 * std::log2(static_cast<double>(p)) + std::log2(static_cast<double>(std::min(a.size(), b.size()))) + 1;
    if (bits < 63) return mul_kronecker(p, a, b, 1);
    if (bits < 127) return mul_kronecker(p, a, b, 2);
  }
  std::vector<std::uint64_t> r(a.size() + b.size() - 1);
  if (p < (1ULL << 32)) {
    // products fit in 64 bits; 2^64 of them fit in the 128-bit accumulator
    for (std::size_t k = 0; k < r.size(); ++k) {
      std::size_t lo = k >= b.size() ? k - b.size() + 1 : 0;
      std::size_t hi = std::min(k, a.size() - 1);
      unsigned __int128 acc = 0;
      for (std::size_t i = lo; i <= hi; ++i) acc += static_cast<unsigned __int128>(a[i] * b[k - i]);
      r[k] = static_cast<std::uint64_t>(acc % p);
    }
  } else {
    for (std::size_t k = 0; k < r.size(); ++k) {
      std::size_t lo = k >= b.size() ? k - b.size() + 1 : 0;
      std::size_t hi = std::min(k, a.size() - 1);
      unsigned __int128 acc = 0;
      int pending = 0;
      for (std::size_t i = lo; i <= hi; ++i) {
        acc += static_cast<unsigned __int128>(a[i]) * b[k - i];
        if (++pending == 8) {
          acc %= p;
          pending = 0;
        }
      }
      r[k] = static_cast<std::uint64_t>(acc % p);
    }
  }
  return r;
}

}  // namespace

template <class F>
Poly<F>::Poly(const F& field, std::vector<value_type> coeffs) : field_(field), c_(std::move(coeffs)) {
  trim();
}

template <class F>
void Poly<F>::trim() {
  while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
}

template <class F>
Poly<F> Poly<F>::constant(const F& field, const value_type& c) {
  return Poly(field, std::vector<value_type>{c});
}

template <class F>
Poly<F> Poly<F>::monomial(const F& field, const value_type& c, int deg) {
  std::vector<value_type> v(deg + 1, field.zero());
  v[deg] = c;
  return Poly(field, std::move(v));
}

template <class F>
Poly<F> Poly<F>::from_ints(const F& field, const std::vector<std::int64_t>& coeffs) {
  std::vector<value_type> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(field.from_int(c));
  return Poly(field, std::move(v));
}

template <class F>
Poly<F> Poly<F>::monic() const {
  if (is_zero() || field_.is_one(lead())) return *this;
  return scale(field_.inv(lead()));
}

template <class F>
Poly<F> Poly<F>::scale(const value_type& s) const {
  if (field_.is_zero(s)) return Poly(field_);
  std::vector<value_type> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_.mul(c_[i], s);
  return Poly(field_, std::move(v));
}

template <class F>
Poly<F> Poly<F>::mul_xpow(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<value_type> v(k, field_.zero());
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(field_, std::move(v));
}

template <class F>
Poly<F> Poly<F>::truncate(int n) const {
  if (n >= static_cast<int>(c_.size())) return *this;
  if (n <= 0) return Poly(field_);
  return Poly(field_, std::vector<value_type>(c_.begin(), c_.begin() + n));
}

template <class F>
Poly<F> Poly<F>::derivative() const {
  if (c_.size() <= 1) return Poly(field_);
  std::vector<value_type> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = field_.mul(c_[i], field_.from_int(static_cast<std::int64_t>(i)));
  return Poly(field_, std::move(v));
}

template <class F>
typename Poly<F>::value_type Poly<F>::eval(const value_type& v) const {
  value_type r = field_.zero();
  for (std::size_t i = c_.size(); i-- > 0;) r = field_.add(field_.mul(r, v), c_[i]);
  return r;
}

template <class F>
Poly<F> Poly<F>::operator-() const {
  std::vector<value_type> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_.neg(c_[i]);
  return Poly(field_, std::move(v));
}

template <class F>
Poly<F>& Poly<F>::operator+=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), field_.zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
  trim();
  return *this;
}

template <class F>
Poly<F>& Poly<F>::operator-=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), field_.zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

template <class F>
std::string Poly<F>::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (field_.is_zero(c_[i])) continue;
    std::string c = field_.to_string(c_[i]);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c = c.substr(1);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? "-" : "+");
    }
    first = false;
    if (i == 0) {
      out << c;
      continue;
    }
    if (c != "1") out << c << "*";
    out << var;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

template <class F>
Poly<F> operator*(const Poly<F>& a, const Poly<F>& b) {
  const F& field = a.field();
  if (a.is_zero() || b.is_zero()) return Poly<F>(field);
  if constexpr (is_rational_v<F>) {
    if (a.degree() + b.degree() < 4) {
      std::vector<mpq_class> r(a.degree() + b.degree() + 1);
      for (int i = 0; i <= a.degree(); ++i)
        for (int j = 0; j <= b.degree(); ++j) r[i + j] += a.coeffs()[i] * b.coeffs()[j];
      return Poly<F>(field, std::move(r));
    }
    mpz_class da, db;
    zx::ZPoly za = zx::to_integral(a, da);
    zx::ZPoly zb = zx::to_integral(b, db);
    return zx::from_integral(zx::mul(za, zb), da * db);
  } else {
    return Poly<F>(field, mul_mod_p(field, a.coeffs(), b.coeffs()));
  }
}

template <class F>
Poly<F> shift(const Poly<F>& f, std::int64_t k) {
  if (k == 0 || f.degree() <= 0) return f;
  const F& field = f.field();
  if constexpr (is_rational_v<F>) {
    mpz_class den;
    zx::ZPoly z = zx::to_integral(f, den);
    zx::taylor_shift(z, mpz_class(static_cast<long>(k)));
    return zx::from_integral(z, den);
  } else {
    auto c = f.coeffs();
    auto kk = field.from_int(k);
    const int n = f.degree();
    for (int i = 0; i < n; ++i)
      for (int j = n - 1; j >= i; --j) c[j] = field.add(c[j], field.mul(kk, c[j + 1]));
    return Poly<F>(field, std::move(c));
  }
}

template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
  const F& field = a.field();
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<F>(field), a};
  auto r = a.coeffs();
  const int db = b.degree();
  std::vector<typename F::value_type> q(a.degree() - db + 1, field.zero());
  const auto inv_lead = field.inv(b.lead());
  const auto& bc = b.coeffs();
  for (int i = a.degree() - db; i >= 0; --i) {
    auto c = r[i + db];
    if (field.is_zero(c)) continue;
    c = field.mul(c, inv_lead);
    q[i] = c;
    for (int j = 0; j <= db; ++j) r[i + j] = field.sub(r[i + j], field.mul(c, bc[j]));
  }
  r.resize(db);
  return {Poly<F>(field, std::move(q)), Poly<F>(field, std::move(r))};
}

template <class F>
Poly<F> exact_div(const Poly<F>& a, const Poly<F>& b) {
  if constexpr (is_rational_v<F>) {
    if (b.degree() > 0 && a.degree() > 8) {
      mpz_class da, db;
      zx::ZPoly za = zx::to_integral(a, da);
      zx::ZPoly zb = zx::to_integral(b, db);
      mpz_class cb = zx::content(zb);
      for (auto& c : zb) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cb.get_mpz_t());
      zx::ZPoly q;
      if (!zx::exact_divide(za, zb, &q)) throw Error(ErrorCode::Internal, "inexact polynomial division");
      // a/b = (za/da) / (zb*cb/db)
      return zx::from_integral(q, da * cb).scale(mpq_class(db));
    }
  }
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorCode::Internal, "inexact polynomial division");
  return q;
}

template <class F>
bool divides(const Poly<F>& a, const Poly<F>& b) {
  if (a.is_zero()) return b.is_zero();
  if (b.is_zero()) return true;
  if (a.degree() > b.degree()) return false;
  if constexpr (is_rational_v<F>) {
    if (a.degree() > 0 && b.degree() > 8) {
      mpz_class da, db;
      zx::ZPoly za = zx::to_integral(a, da);
      zx::ZPoly zb = zx::to_integral(b, db);
      zx::divide_content(za);
      return zx::exact_divide(zb, za, nullptr);
    }
  }
  return divmod(b, a).second.is_zero();
}

template <class F>
Poly<F> gcd(const Poly<F>& a, const Poly<F>& b) {
  if constexpr (is_rational_v<F>) {
    return gcd_modular(a, b);
  } else {
    Poly<F> r0 = a, r1 = b;
    while (!r1.is_zero()) {
      Poly<F> r = divmod(r0, r1).second;
      r0 = std::move(r1);
      r1 = std::move(r);
    }
    return r0.monic();
  }
}

template <class F>
Poly<F> lcm(const Poly<F>& a, const Poly<F>& b) {
  if (a.is_zero() || b.is_zero()) return Poly<F>(a.field());
  return (exact_div(a, gcd(a, b)) * b).monic();
}

template <class F>
Poly<F> content_poly(const std::vector<Poly<F>>& fs) {
  if (fs.empty()) throw Error(ErrorCode::AllZero, "content of an empty family");
  // small inputs first keeps the running gcd cheap
  std::vector<const Poly<F>*> order;
  for (const auto& f : fs)
    if (!f.is_zero()) order.push_back(&f);
  if (order.empty()) throw Error(ErrorCode::AllZero, "all polynomials are zero");
  std::stable_sort(order.begin(), order.end(), [](auto* u, auto* v) { return u->degree() < v->degree(); });
  Poly<F> g = order[0]->monic();
  for (std::size_t i = 1; i < order.size() && g.degree() > 0; ++i) {
    if (divides(g, *order[i])) continue;
    g = gcd(g, *order[i]);
  }
  return g;
}

template <class F>
Poly<F> pow(const Poly<F>& f, std::uint64_t e) {
  Poly<F> r = Poly<F>::constant(f.field(), f.field().one());
  Poly<F> b = f;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

template <class F>
Poly<F> compose(const Poly<F>& f, const Poly<F>& g) {
  Poly<F> r(f.field());
  for (int i = f.degree(); i >= 0; --i) r = r * g + Poly<F>::constant(f.field(), f.coeffs()[i]);
  return r;
}

template <class F>
int valuation(const Poly<F>& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroInput, "valuation of zero");
  int v = 0;
  while (f.field().is_zero(f.coeffs()[v])) ++v;
  return v;
}

#define ORECURV_INSTANTIATE_POLY(F)                                                  \
  template class Poly<F>;                                                            \
  template Poly<F> operator*(const Poly<F>&, const Poly<F>&);                        \
  template Poly<F> shift(const Poly<F>&, std::int64_t);                              \
  template std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>&, const Poly<F>&);       \
  template Poly<F> exact_div(const Poly<F>&, const Poly<F>&);                        \
  template bool divides(const Poly<F>&, const Poly<F>&);                             \
  template Poly<F> gcd(const Poly<F>&, const Poly<F>&);                              \
  template Poly<F> lcm(const Poly<F>&, const Poly<F>&);                              \
  template Poly<F> content_poly(const std::vector<Poly<F>>&);                        \
  template Poly<F> pow(const Poly<F>&, std::uint64_t);                               \
  template Poly<F> compose(const Poly<F>&, const Poly<F>&);                          \
  template int valuation(const Poly<F>&);

ORECURV_INSTANTIATE_POLY(PrimeField)
ORECURV_INSTANTIATE_POLY(RationalField)

}  // namespace orecurv
