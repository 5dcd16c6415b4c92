#include "orecurv/modular.hpp"

#include <mutex>

namespace orecurv {

namespace zx {

void trim(ZPoly& f) {
  while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

ZPoly to_integral(const PolyQ& f, mpz_class& den) {
  den = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly r(f.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto& c = f.coeffs()[i];
    if (c.get_den() == den) {
      r[i] = c.get_num();
    } else {
      mpz_divexact(r[i].get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
      r[i] *= c.get_num();
    }
  }
  return r;
}

PolyQ from_integral(const ZPoly& num, const mpz_class& den) {
  std::vector<mpq_class> c(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) {
    c[i].get_num() = num[i];
    c[i].get_den() = den;
    c[i].canonicalize();
  }
  return PolyQ(RationalField(), std::move(c));
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(r);
  return r;
}

void taylor_shift(ZPoly& f, const mpz_class& k) {
  const int n = static_cast<int>(f.size()) - 1;
  if (k == 1) {
    for (int i = 0; i < n; ++i)
      for (int j = n - 1; j >= i; --j) f[j] += f[j + 1];
  } else if (k == -1) {
    for (int i = 0; i < n; ++i)
      for (int j = n - 1; j >= i; --j) f[j] -= f[j + 1];
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = n - 1; j >= i; --j) mpz_addmul(f[j].get_mpz_t(), k.get_mpz_t(), f[j + 1].get_mpz_t());
  }
}

mpz_class content(const ZPoly& f) {
  mpz_class g = 0;
  for (const auto& c : f) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void divide_content(ZPoly& f) {
  mpz_class g = content(f);
  if (f.empty()) return;
  if (sgn(f.back()) < 0) g = -g;
  if (g == 1) return;
  for (auto& c : f) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

bool exact_divide(const ZPoly& a, const ZPoly& b, ZPoly* quotient) {
  if (b.empty()) return false;
  if (a.empty()) {
    if (quotient) quotient->clear();
    return true;
  }
  if (a.size() < b.size()) return false;
  ZPoly r = a;
  const std::size_t db = b.size() - 1;
  ZPoly q(a.size() - db);
  const mpz_class& lb = b.back();
  for (std::size_t i = q.size(); i-- > 0;) {
    mpz_class& top = r[i + db];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return false;
    mpz_divexact(q[i].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[i + j].get_mpz_t(), q[i].get_mpz_t(), b[j].get_mpz_t());
  }
  for (std::size_t i = 0; i < db; ++i)
    if (sgn(r[i]) != 0) return false;
  if (quotient) {
    trim(q);
    *quotient = std::move(q);
  }
  return true;
}

PolyP reduce(const ZPoly& f, const PrimeField& field) {
  std::vector<std::uint64_t> c(f.size());
  const unsigned long q = field.characteristic();
  for (std::size_t i = 0; i < f.size(); ++i) c[i] = mpz_fdiv_ui(f[i].get_mpz_t(), q);
  return PolyP(field, std::move(c));
}

}  // namespace zx

std::uint64_t modular_prime(std::size_t i) {
  static std::mutex mu;
  static std::vector<std::uint64_t> primes;
  std::lock_guard<std::mutex> lock(mu);
  std::uint64_t next = primes.empty() ? (1ULL << 62) - 1 : primes.back() - 2;
  while (primes.size() <= i) {
    while (!is_prime_u64(next)) next -= 2;
    primes.push_back(next);
    next -= 2;
  }
  return primes[i];
}

void crt_accumulate(mpz_class& acc, const mpz_class& m, std::uint64_t r, std::uint64_t q) {
  PrimeField fq(q);
  std::uint64_t a = mpz_fdiv_ui(acc.get_mpz_t(), q);
  std::uint64_t mq = mpz_fdiv_ui(m.get_mpz_t(), q);
  std::uint64_t t = fq.mul(fq.sub(r, a), fq.inv(mq));
  mpz_class tt(static_cast<unsigned long>(t));
  mpz_addmul(acc.get_mpz_t(), m.get_mpz_t(), tt.get_mpz_t());
}

mpz_class symmetric_mod(const mpz_class& u, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), u.get_mpz_t(), m.get_mpz_t());
  mpz_class twice = r * 2;
  if (twice > m) r -= m;
  return r;
}

bool rational_reconstruct(const mpz_class& u, const mpz_class& m, mpq_class& out) {
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1;
  mpz_fdiv_r(r1.get_mpz_t(), u.get_mpz_t(), m.get_mpz_t());
  mpz_class t0 = 0, t1 = 1, q, tmp;
  while (r1 > bound) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (abs(t1) > bound || sgn(t1) == 0) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return false;
  out = mpq_class(r1, t1);
  out.canonicalize();
  return true;
}

bool reduce_rational(const PolyQ& f, const PrimeField& field, PolyP& out) {
  std::vector<std::uint64_t> c(f.coeffs().size());
  const unsigned long q = field.characteristic();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& v = f.coeffs()[i];
    std::uint64_t den = mpz_fdiv_ui(v.get_den_mpz_t(), q);
    if (den == 0) return false;
    c[i] = field.div(mpz_fdiv_ui(v.get_num_mpz_t(), q), den);
  }
  out = PolyP(field, std::move(c));
  return true;
}

PolyQ gcd_modular(const PolyQ& a, const PolyQ& b) {
  RationalField Q;
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return PolyQ::constant(Q, 1);
  mpz_class da, db;
  zx::ZPoly A = zx::to_integral(a, da);
  zx::ZPoly B = zx::to_integral(b, db);
  zx::divide_content(A);
  zx::divide_content(B);
  if (A.size() < B.size()) std::swap(A, B);
  if (zx::exact_divide(A, B, nullptr)) return zx::from_integral(B, 1).monic();

  mpz_class gamma;
  mpz_gcd(gamma.get_mpz_t(), A.back().get_mpz_t(), B.back().get_mpz_t());
  int best_degree = static_cast<int>(B.size()) - 1;
  bool have = false;
  zx::ZPoly acc;
  mpz_class modulus = 1;
  zx::ZPoly previous;
  for (std::size_t i = 0;; ++i) {
    if (i == kMaxModularPrimes) throw Error(ErrorCode::Internal, "multimodular reconstruction did not stabilize");
    const std::uint64_t q = modular_prime(i);
    if (mpz_fdiv_ui(gamma.get_mpz_t(), q) == 0) continue;
    if (mpz_fdiv_ui(A.back().get_mpz_t(), q) == 0 || mpz_fdiv_ui(B.back().get_mpz_t(), q) == 0) continue;
    PrimeField fq(q);
    PolyP g = gcd(zx::reduce(A, fq), zx::reduce(B, fq));
    if (g.degree() == 0) return PolyQ::constant(Q, 1);
    if (g.degree() > best_degree) continue;
    g = g.scale(fq.from_mpz(gamma));
    if (!have || g.degree() < best_degree) {
      best_degree = g.degree();
      have = true;
      acc.assign(best_degree + 1, 0);
      for (int k = 0; k <= best_degree; ++k) acc[k] = static_cast<unsigned long>(g.coeffs()[k]);
      modulus = static_cast<unsigned long>(q);
      previous.clear();
      continue;
    }
    for (int k = 0; k <= best_degree; ++k) crt_accumulate(acc[k], modulus, g.coeffs()[k], q);
    modulus *= static_cast<unsigned long>(q);
    zx::ZPoly candidate(best_degree + 1);
    for (int k = 0; k <= best_degree; ++k) candidate[k] = symmetric_mod(acc[k], modulus);
    zx::divide_content(candidate);
    if (candidate == previous && zx::exact_divide(B, candidate, nullptr) && zx::exact_divide(A, candidate, nullptr))
      return zx::from_integral(candidate, 1).monic();
    previous = std::move(candidate);
  }
}

}  // namespace orecurv
