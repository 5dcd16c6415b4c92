#include "orecurv/desing.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <type_traits>

namespace orecurv {

const char* method_name(DesingMethod m) {
  switch (m) {
    case DesingMethod::algorithm2: return "alg2";
    case DesingMethod::algorithm3: return "alg3";
    case DesingMethod::lclm_mc: return "lclm";
  }
  return "unknown";
}

namespace {

template <class F>
void require_primitive(const OrePoly<F>& l) {
  if (l.is_zero()) throw Error(ErrorCode::ZeroInput, "zero operator");
  if (!is_primitive(l)) throw Error(ErrorCode::NotPrimitive, "operator is not primitive");
  if (l.order() < 1) throw Error(ErrorCode::OrderZero, "operator has order 0");
}

template <class F>
Poly<F> coefficient(const std::vector<Poly<F>>& a, int i) {
  if (i < 0 || i >= static_cast<int>(a.size())) return Poly<F>(a.front().field());
  return a[i];
}

// lc0 and the adjusted trailing coefficient of prim(L) without dividing every coefficient.
template <class F>
std::pair<Poly<F>, Poly<F>> lc0_tc0(const OrePoly<F>& l) {
  std::vector<Poly<F>> p = l.polys();
  Poly<F> g = content_poly(p);
  const int n = l.order();
  const int m = l.trailing_index();
  Poly<F> lead = g.degree() > 0 ? exact_div(p[n], g) : p[n];
  Poly<F> trail = g.degree() > 0 ? exact_div(p[m], g) : p[m];
  return {shift(lead, -n).monic(), shift(trail, -m).monic()};
}

template <class F>
typename F::value_type random_element(const F& field, std::mt19937_64& rng, bool nonzero) {
  if constexpr (std::is_same_v<F, RationalField>) {
    std::uniform_int_distribution<long> dist(-1000, 1000);
    long v = 0;
    do v = dist(rng);
    while (nonzero && v == 0);
    return field.from_int(v);
  } else {
    std::uniform_int_distribution<std::uint64_t> dist(nonzero ? 1 : 0, field.characteristic() - 1);
    return dist(rng);
  }
}

}  // namespace

template <class F>
Poly<F> lc0(const OrePoly<F>& l) {
  if (l.is_zero()) throw Error(ErrorCode::ZeroInput, "zero operator");
  if (!l.is_integral()) return lc_star(prim(l));
  return lc0_tc0(l).first;
}

template <class F>
OrePoly<F> build_Li(const OrePoly<F>& l, int i) {
  const int n = l.order();
  if (i < 0 || i > n + 1) throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(i) + " outside [0, n+1]");
  const F& field = l.field();
  RatFun<F> ai = l.coeff(i);
  RatFun<F> prev = i >= 1 ? shift(l.coeff(i - 1), 1) : RatFun<F>(field);
  OrePoly<F> left(field, {-prev, ai});
  return ore_mul(left, l);
}

template <class F>
std::vector<int> select_index_set(const OrePoly<F>& l) {
  std::vector<Poly<F>> a = l.polys();
  std::vector<int> order;
  for (int i = 0; i <= l.order(); ++i)
    if (!a[i].is_zero()) order.push_back(i);
  std::stable_sort(order.begin(), order.end(), [&](int u, int v) { return a[u].degree() < a[v].degree(); });
  std::vector<int> chosen{order[0]};
  Poly<F> g = a[order[0]].monic();
  for (std::size_t k = 1; k < order.size() && g.degree() > 0; ++k) {
    Poly<F> h = gcd(g, a[order[k]]);
    if (h.degree() < g.degree()) {
      chosen.push_back(order[k]);
      g = std::move(h);
    }
  }
  if (g.degree() > 0) throw Error(ErrorCode::NotPrimitive, "coefficients share a common factor");
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

template <class F>
DesingReport<F> lc1_algorithm2(const OrePoly<F>& l) {
  require_primitive(l);
  DesingReport<F> r{DesingMethod::algorithm2, lc0(l), Poly<F>(l.field()), Poly<F>(l.field()), std::nullopt, {}};
  Poly<F> g(l.field());
  for (int i : select_index_set(l)) {
    Poly<F> w = lc0(build_Li(l, i));
    g = g.is_zero() ? w : gcd(g, w);
    r.witnesses.push_back({i, std::move(w)});
  }
  r.lc1 = g;
  r.rp1 = exact_div(r.lc0, g);
  return r;
}

template <class F>
DesingReport<F> lc1_tc1_algorithm3(const OrePoly<F>& l) {
  require_primitive(l);
  const int n = l.order();
  // the middle index; when a_i and a_{i-1} both vanish L_i is zero and the nearest usable index is taken
  std::vector<int> candidates(n + 2);
  for (int j = 0; j <= n + 1; ++j) candidates[j] = j;
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](int u, int v) { return std::abs(u - n / 2) < std::abs(v - n / 2); });
  int i = candidates[0];
  OrePoly<F> li(l.field());
  for (int j : candidates) {
    li = build_Li(l, j);
    i = j;
    if (!li.is_zero()) break;
  }
  auto [lead_i, trail_i] = lc0_tc0(li);
  Poly<F> lead = lc_star(l);
  Poly<F> trail = tc_adjusted(l);
  DesingReport<F> r{DesingMethod::algorithm3, lead, gcd(lead, lead_i), Poly<F>(l.field()), gcd(trail, trail_i), {}};
  r.rp1 = exact_div(r.lc0, r.lc1);
  r.witnesses.push_back({i, lead_i});
  return r;
}

template <class F>
Poly<F> lclm_method(const OrePoly<F>& l, int k, int trials, std::uint64_t seed) {
  require_primitive(l);
  const F& field = l.field();
  if (k < 1) throw Error(ErrorCode::IndexOutOfRange, "k must be positive");
  if (trials < 1) throw Error(ErrorCode::IndexOutOfRange, "trials must be positive");
  if constexpr (std::is_same_v<F, PrimeField>) {
    if (field.characteristic() <= static_cast<std::uint64_t>(k) + 1)
      throw Error(ErrorCode::FieldTooSmall, "need p > k + 1 to sample the constants");
  }
  std::mt19937_64 rng(seed);
  const Poly<F> lead = lc_star(l);
  Poly<F> result = lead;
  for (int t = 0; t < trials && result.degree() > 0; ++t) {
    std::vector<RatFun<F>> c;
    for (int i = 0; i <= k; ++i) c.emplace_back(Poly<F>::constant(field, random_element(field, rng, i == k)));
    OrePoly<F> a(field, std::move(c));
    OrePoly<F> lp = lclm_prim(a, l);
    result = gcd(result, lc_star(lp));
  }
  return result;
}

template <class F>
Poly<F> rp(const OrePoly<F>& l, int k) {
  if (l.is_zero()) throw Error(ErrorCode::ZeroInput, "zero operator");
  if (k != 0 && k != 1) throw Error(ErrorCode::IndexOutOfRange, "rp is available for k in {0, 1}");
  OrePoly<F> integral = l.is_integral() ? l : prim(l);
  Poly<F> lead = lc_star(integral);
  Poly<F> lk = k == 0 ? lc0(integral) : lc1_algorithm2(prim(integral)).lc1;
  return exact_div(lead, lk).monic();
}

template <class F>
bool sandwich_check(const OrePoly<F>& l, const std::vector<typename F::value_type>& c) {
  require_primitive(l);
  const F& field = l.field();
  const int n = l.order();
  if (static_cast<int>(c.size()) != n + 2) throw Error(ErrorCode::IndexOutOfRange, "need n + 2 constants");
  std::vector<Poly<F>> a = l.polys();
  Poly<F> c1(field), c0(field);
  for (int i = 0; i <= n + 1; ++i) {
    Poly<F> ai = coefficient(a, i);
    Poly<F> prev = i >= 1 ? shift(coefficient(a, i - 1), 1) : Poly<F>(field);
    c1 += ai.scale(c[i]);
    c0 += prev.scale(c[i]);
  }
  if (c1.is_zero()) throw Error(ErrorCode::ZeroInput, "C_1 vanishes");
  OrePoly<F> left = OrePoly<F>::from_polys(field, {-c0, c1});
  Poly<F> lprime = lc0(ore_mul(left, l));
  Poly<F> l1 = lc1_algorithm2(l).lc1;
  return divides(l1, lprime) && divides(lprime, shift(c1, -n - 1) * l1);
}

#define ORECURV_INSTANTIATE_DESING(F)                                                       \
  template Poly<F> lc0(const OrePoly<F>&);                                                  \
  template OrePoly<F> build_Li(const OrePoly<F>&, int);                                     \
  template std::vector<int> select_index_set(const OrePoly<F>&);                            \
  template DesingReport<F> lc1_algorithm2(const OrePoly<F>&);                               \
  template DesingReport<F> lc1_tc1_algorithm3(const OrePoly<F>&);                           \
  template Poly<F> lclm_method(const OrePoly<F>&, int, int, std::uint64_t);                 \
  template Poly<F> rp(const OrePoly<F>&, int);                                              \
  template bool sandwich_check(const OrePoly<F>&, const std::vector<typename F::value_type>&);

ORECURV_INSTANTIATE_DESING(PrimeField)
ORECURV_INSTANTIATE_DESING(RationalField)

}  // namespace orecurv
