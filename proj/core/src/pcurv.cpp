#include "orecurv/pcurv.hpp"

#include <algorithm>

#include "orecurv/factor.hpp"

namespace orecurv {

namespace {

using PolyMatrix = std::vector<std::vector<PolyP>>;

void check_prime(const OreP& l, std::uint64_t prime_cap) {
  if (l.is_zero()) throw Error(ErrorCode::ZeroInput, "zero operator");
  const std::uint64_t p = l.field().characteristic();
  if (p > prime_cap)
    throw Error(ErrorCode::PrimeTooLarge, "p = " + std::to_string(p) + " exceeds the cap " + std::to_string(prime_cap));
  if (l.order() < 1) throw Error(ErrorCode::OrderZero, "operator has order 0");
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t n = a.size();
  const PrimeField& field = a[0][0].field();
  PolyMatrix c(n, std::vector<PolyP>(n, PolyP(field)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

PolyMatrix shift_matrix(const PolyMatrix& a, std::int64_t k) {
  PolyMatrix r = a;
  for (auto& row : r)
    for (auto& e : row) e = shift(e, k);
  return r;
}

struct Integral {
  PolyMatrix product;  // p-fold product of a_n C
  PolyP lead_product;  // a_n(x) a_n(x+1) ... a_n(x+p-1)
};

Integral integral_p_curvature(const OreP& prim_l) {
  const PrimeField& field = prim_l.field();
  const std::uint64_t p = field.characteristic();
  const int n = prim_l.order();
  std::vector<PolyP> a = prim_l.polys();
  PolyMatrix c(n, std::vector<PolyP>(n, PolyP(field)));
  for (int i = 0; i + 1 < n; ++i) c[i][i + 1] = a[n];
  for (int j = 0; j < n; ++j) c[n - 1][j] = -a[j];
  Integral r{c, a[n]};
  for (std::uint64_t i = 1; i < p; ++i) {
    r.product = multiply(shift_matrix(c, static_cast<std::int64_t>(i)), r.product);
    r.lead_product = r.lead_product * shift(a[n], static_cast<std::int64_t>(i));
  }
  return r;
}

PolyP lcm_of_denominators(const CenterPoly& c) {
  PolyP d = PolyP::constant(c.field(), 1);
  for (const auto& x : c.coeffs()) d = lcm(d, x.den());
  return d;
}

}  // namespace

std::vector<PolyP> charpoly_berkowitz(const PolyMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) throw Error(ErrorCode::OrderZero, "empty matrix");
  const PrimeField& field = a[0][0].field();
  const PolyP one = PolyP::constant(field, 1);
  // characteristic vector of the trailing principal submatrices, innermost first
  std::vector<PolyP> v{one, -a[n - 1][n - 1]};
  for (std::size_t s = n - 1; s-- > 0;) {
    const std::size_t m = n - s;  // size of the current submatrix, rows s..n-1
    // first column of the Toeplitz matrix: 1, -a, -R C, -R A C, ..., -R A^(m-2) C
    std::vector<PolyP> diag{one, -a[s][s]};
    std::vector<PolyP> col(m - 1, PolyP(field));
    for (std::size_t i = 0; i + 1 < m; ++i) col[i] = a[s + 1 + i][s];
    for (std::size_t k = 0; k + 1 < m; ++k) {
      PolyP rc(field);
      for (std::size_t i = 0; i + 1 < m; ++i)
        if (!col[i].is_zero() && !a[s][s + 1 + i].is_zero()) rc += a[s][s + 1 + i] * col[i];
      diag.push_back(-rc);
      if (k + 2 < m) {
        std::vector<PolyP> next(m - 1, PolyP(field));
        for (std::size_t i = 0; i + 1 < m; ++i)
          for (std::size_t j = 0; j + 1 < m; ++j)
            if (!col[j].is_zero() && !a[s + 1 + i][s + 1 + j].is_zero()) next[i] += a[s + 1 + i][s + 1 + j] * col[j];
        col = std::move(next);
      }
    }
    std::vector<PolyP> w(m + 1, PolyP(field));
    for (std::size_t i = 0; i <= m; ++i)
      for (std::size_t j = 0; j <= std::min(i, m - 1); ++j)
        if (!diag[i - j].is_zero() && !v[j].is_zero()) w[i] += diag[i - j] * v[j];
    v = std::move(w);
  }
  return v;
}

PCurvMatrix p_curvature(const OreP& l, std::uint64_t prime_cap) {
  check_prime(l, prime_cap);
  Integral in = integral_p_curvature(prim(l));
  PCurvMatrix m;
  m.size = l.order();
  m.entries.assign(m.size, {});
  for (int i = 0; i < m.size; ++i)
    for (int j = 0; j < m.size; ++j) m.entries[i].emplace_back(in.product[i][j], in.lead_product);
  return m;
}

ChiResult chi(const OreP& l, std::uint64_t prime_cap) {
  check_prime(l, prime_cap);
  const PrimeField& field = l.field();
  const int n = l.order();
  OreP pl = prim(l);
  Integral in = integral_p_curvature(pl);
  std::vector<PolyP> e = charpoly_berkowitz(in.product);
  // coefficient of T^(n-k) is e_k / D^k with D the norm of the leading coefficient
  const PolyP dz = to_center(in.lead_product);
  std::vector<RatFunP> coeffs(n + 1, RatFunP(field));
  PolyP dk = PolyP::constant(field, 1);
  coeffs[n] = RatFunP(PolyP::constant(field, 1));
  for (int k = 1; k <= n; ++k) {
    dk = dk * dz;
    coeffs[n - k] = RatFunP(to_center(e[k]), dk);
  }
  ChiResult r{CenterPoly(field, std::move(coeffs)), std::nullopt, PolyP(field), CenterPoly(field)};
  r.denom = lcm_of_denominators(r.chi);
  r.prim_chi = r.chi.scale(RatFunP(r.denom));
  if (l.is_integral()) {
    CenterPoly t = r.chi.scale(RatFunP(norm(lc_star(l))));
    if (!t.is_integral()) throw Error(ErrorCode::Internal, "reduced norm is not integral");
    r.chi_tilde = std::move(t);
  }
  return r;
}

PolyP denom_chi(const OreP& l, std::uint64_t prime_cap) { return chi(l, prime_cap).denom; }

bool is_gaussian(const OreP& l, std::uint64_t prime_cap) {
  if (!is_primitive(l)) throw Error(ErrorCode::NotPrimitive, "operator is not primitive");
  return norm(lc0(l)) == denom_chi(l, prime_cap);
}

std::vector<SingularityClass> true_singularity_classes(const OreP& l, std::uint64_t prime_cap) {
  PolyP d = denom_chi(l, prime_cap);
  std::vector<SingularityClass> out;
  if (d.degree() <= 0) return out;
  for (const auto& fz : factor(d)) {
    std::vector<Factor> orbit = factor(from_center(fz.poly));
    auto best = std::min_element(orbit.begin(), orbit.end(),
                                 [](const Factor& a, const Factor& b) { return coefficient_less(a.poly, b.poly); });
    out.push_back({best->poly, fz.multiplicity});
  }
  std::sort(out.begin(), out.end(), [](const SingularityClass& a, const SingularityClass& b) {
    if (a.representative.degree() != b.representative.degree())
      return a.representative.degree() < b.representative.degree();
    return coefficient_less(a.representative, b.representative);
  });
  return out;
}

std::vector<PolyP> chi_tilde_truncated(const OreP& l, int precision, std::uint64_t prime_cap) {
  ChiResult r = chi(l, prime_cap);
  if (!r.chi_tilde) throw Error(ErrorCode::NotIntegral, "reduced norm needs an integral operator");
  std::vector<PolyP> out;
  for (const auto& c : r.chi_tilde->polys()) out.push_back(c.truncate(precision));
  return out;
}

XiReport xi_p_desing_report(const OreP& l, std::uint64_t prime_cap) {
  check_prime(l, prime_cap);
  const PrimeField& field = l.field();
  DesingReport<PrimeField> desing = lc1_algorithm2(l);
  XiReport r{CenterPoly(field), desing.rp1, PolyP(field), 0, l.x_degree(), 0, 0};
  PolyP n_alpha = norm(r.alpha);
  r.v = valuation(n_alpha);
  r.beta = PolyP(field, std::vector<std::uint64_t>(n_alpha.coeffs().begin() + r.v, n_alpha.coeffs().end()));
  r.d1 = r.beta.degree();
  r.precision = r.d - r.d1 + 1;
  const int m = r.d - r.d1 - r.v + 1;
  if (m < 1) throw Error(ErrorCode::PrecisionContract, "removable part exceeds the x-degree");
  std::vector<PolyP> chi1 = chi_tilde_truncated(l, r.precision, prime_cap);
  PolyP u = series_inverse(r.beta, m);
  std::vector<PolyP> f;
  for (const auto& c : chi1) {
    for (int i = 0; i < r.v; ++i)
      if (c.coeff(i) != 0) throw Error(ErrorCode::PrecisionContract, "Z^v does not divide the truncated reduced norm");
    PolyP shifted = c.degree() < r.v
                        ? PolyP(field)
                        : PolyP(field, std::vector<std::uint64_t>(c.coeffs().begin() + r.v, c.coeffs().end()));
    f.push_back((u * shifted).truncate(m));
  }
  PolyP g = content_poly(f);
  for (auto& c : f) c = exact_div(c, g);
  while (!f.empty() && f.back().is_zero()) f.pop_back();
  if (f.empty()) throw Error(ErrorCode::PrecisionContract, "truncated result vanished");
  const std::uint64_t s = field.inv(f.back().lead());
  for (auto& c : f) c = c.scale(s);
  r.prim_chi = CenterPoly::from_polys(field, f);
  return r;
}

CenterPoly xi_p_desing(const OreP& l, std::uint64_t prime_cap) { return xi_p_desing_report(l, prime_cap).prim_chi; }

bool denom_multiplicativity_check(const OreP& a, const OreP& l, std::uint64_t prime_cap) {
  return denom_chi(ore_mul(a, l), prime_cap) == denom_chi(a, prime_cap) * denom_chi(l, prime_cap);
}

bool shift_equivalent(const RatFunP& r1, const RatFunP& r2) { return norm_ratfun(r1) == norm_ratfun(r2); }

OreP central_to_operator(const CenterPoly& c) {
  const PrimeField& field = c.field();
  const int p = static_cast<int>(field.characteristic());
  std::vector<RatFunP> coeffs(c.degree() * p + 1, RatFunP(field));
  for (int k = 0; k <= c.degree(); ++k) {
    const RatFunP& f = c.coeffs()[k];
    coeffs[k * p] = RatFunP(from_center(f.num()), from_center(f.den()));
  }
  return OreP(field, std::move(coeffs));
}

}  // namespace orecurv
