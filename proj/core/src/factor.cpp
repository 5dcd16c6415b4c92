#include "orecurv/factor.hpp"

#include <algorithm>
#include <random>

namespace orecurv {

namespace {

PolyP mulmod(const PolyP& a, const PolyP& b, const PolyP& m) { return divmod(a * b, m).second; }

PolyP powmod(PolyP base, std::uint64_t e, const PolyP& m) {
  PolyP r = PolyP::constant(m.field(), 1);
  base = divmod(base, m).second;
  while (e) {
    if (e & 1) r = mulmod(r, base, m);
    e >>= 1;
    if (e) base = mulmod(base, base, m);
  }
  return r;
}

PolyP pth_root(const PolyP& f) {
  const std::uint64_t p = f.field().characteristic();
  std::vector<std::uint64_t> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i]);
  return PolyP(f.field(), std::move(c));
}

void square_free(const PolyP& f, int mult, std::vector<Factor>& out) {
  if (f.degree() <= 0) return;
  const std::uint64_t p = f.field().characteristic();
  PolyP c = gcd(f, f.derivative());
  PolyP w = exact_div(f, c);
  int i = 1;
  while (w.degree() > 0) {
    PolyP y = gcd(w, c);
    PolyP z = exact_div(w, y);
    if (z.degree() > 0) out.push_back({z.monic(), i * mult});
    ++i;
    w = y;
    c = exact_div(c, y);
  }
  if (c.degree() > 0) square_free(pth_root(c), mult * static_cast<int>(p), out);
}

// Splits a product of distinct irreducibles of degree d.
void equal_degree(const PolyP& f, int d, std::mt19937_64& rng, std::vector<PolyP>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const PrimeField& field = f.field();
  const std::uint64_t p = field.characteristic();
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  for (;;) {
    std::vector<std::uint64_t> c(f.degree());
    for (auto& v : c) v = dist(rng);
    PolyP a(field, std::move(c));
    if (a.degree() <= 0) continue;
    PolyP g = gcd(a, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(exact_div(f, g), d, rng, out);
      return;
    }
    PolyP b(field);
    if (p == 2) {
      // trace map a + a^2 + ... + a^(2^(d-1))
      PolyP t = a;
      b = a;
      for (int j = 1; j < d; ++j) {
        t = mulmod(t, t, f);
        b += t;
      }
    } else {
      // a^((p^d - 1)/2) = (a * a^p * ... * a^(p^(d-1)))^((p-1)/2)
      PolyP t = a, s = a;
      for (int j = 1; j < d; ++j) {
        t = powmod(t, p, f);
        s = mulmod(s, t, f);
      }
      b = powmod(s, (p - 1) / 2, f) - PolyP::constant(field, 1);
    }
    g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(exact_div(f, g), d, rng, out);
      return;
    }
  }
}

}  // namespace

bool coefficient_less(const PolyP& a, const PolyP& b) {
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
}

std::vector<Factor> factor(const PolyP& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroInput, "factorization of zero");
  const PrimeField& field = f.field();
  const std::uint64_t p = field.characteristic();
  std::vector<Factor> sqf;
  square_free(f.monic(), 1, sqf);
  std::mt19937_64 rng(0x5eed);
  std::vector<Factor> out;
  const PolyP x = PolyP::x(field);
  for (const auto& [g0, mult] : sqf) {
    PolyP g = g0;
    PolyP h = x;
    for (int d = 1; g.degree() >= 2 * d; ++d) {
      h = powmod(h, p, g);
      PolyP part = gcd(h - x, g);
      if (part.degree() > 0) {
        std::vector<PolyP> pieces;
        equal_degree(part, d, rng, pieces);
        for (auto& q : pieces) out.push_back({std::move(q), mult});
        g = exact_div(g, part);
        h = divmod(h, g).second;
      }
    }
    if (g.degree() > 0) out.push_back({g.monic(), mult});
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    return coefficient_less(a.poly, b.poly);
  });
  // merge repeated irreducibles coming from different square-free layers
  std::vector<Factor> merged;
  for (auto& fac : out) {
    if (!merged.empty() && merged.back().poly == fac.poly)
      merged.back().multiplicity += fac.multiplicity;
    else
      merged.push_back(std::move(fac));
  }
  return merged;
}

bool is_irreducible(const PolyP& f) {
  if (f.degree() <= 0) return false;
  auto fs = factor(f);
  return fs.size() == 1 && fs[0].multiplicity == 1;
}

}  // namespace orecurv
