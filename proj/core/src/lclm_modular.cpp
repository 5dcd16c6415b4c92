#include "lclm_modular.hpp"

#include "orecurv/modular.hpp"

namespace orecurv::detail {

namespace {

struct Image {
  std::vector<int> degrees;
  std::vector<std::vector<std::uint64_t>> coeffs;
};

bool reduce_operator(const std::vector<PolyQ>& l, const PrimeField& fq, OrePoly<PrimeField>& out) {
  std::vector<PolyP> r;
  r.reserve(l.size());
  for (const auto& f : l) {
    PolyP g(fq);
    if (!reduce_rational(f, fq, g)) return false;
    r.push_back(std::move(g));
  }
  if (r.back().degree() != l.back().degree()) return false;
  out = OrePoly<PrimeField>::from_polys(fq, r);
  return true;
}

Image image_of(const OrePoly<PrimeField>& l) {
  Image im;
  for (const auto& f : l.polys()) {
    im.degrees.push_back(f.degree());
    im.coeffs.push_back(f.coeffs());
  }
  return im;
}

// Images with fewer common factors modulo q have larger order, then larger total degree.
int compare_signature(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  long sa = 0, sb = 0;
  for (int d : a) sa += d;
  for (int d : b) sb += d;
  if (sa != sb) return sa < sb ? -1 : 1;
  return a == b ? 0 : -1;
}

bool reconstruct(const std::vector<std::vector<mpz_class>>& acc, const mpz_class& modulus,
                 std::vector<std::vector<mpq_class>>& out) {
  out.assign(acc.size(), {});
  for (std::size_t i = 0; i < acc.size(); ++i) {
    out[i].resize(acc[i].size());
    for (std::size_t k = 0; k < acc[i].size(); ++k)
      if (!rational_reconstruct(acc[i][k], modulus, out[i][k])) return false;
  }
  return true;
}

}  // namespace

OrePoly<RationalField> lclm_prim_multimodular(const OrePoly<RationalField>& a, const OrePoly<RationalField>& b) {
  RationalField Q;
  const std::vector<PolyQ> ap = a.polys();
  const std::vector<PolyQ> bp = b.polys();

  std::vector<int> signature;
  std::vector<std::vector<mpz_class>> acc;
  mpz_class modulus = 1;
  std::size_t images = 0;
  std::vector<mpq_class> probe_previous;
  std::vector<std::pair<std::size_t, std::size_t>> probes;

  for (std::size_t i = 0;; ++i) {
    if (i == kMaxModularPrimes) throw Error(ErrorCode::Internal, "multimodular reconstruction did not stabilize");
    const std::uint64_t q = modular_prime(i);
    PrimeField fq(q);
    OrePoly<PrimeField> aq(fq), bq(fq);
    if (!reduce_operator(ap, fq, aq) || !reduce_operator(bp, fq, bq)) continue;
    Image im = image_of(prim(lclm_euclidean(aq, bq)));
    int cmp = images == 0 ? 1 : compare_signature(im.degrees, signature);
    if (cmp < 0) continue;
    if (cmp > 0) {
      signature = im.degrees;
      acc.assign(im.coeffs.size(), {});
      for (std::size_t j = 0; j < im.coeffs.size(); ++j)
        for (auto c : im.coeffs[j]) acc[j].emplace_back(static_cast<unsigned long>(c));
      modulus = static_cast<unsigned long>(q);
      images = 1;
      probes.clear();
      probe_previous.clear();
      // a handful of coefficients decide when a full reconstruction is worth trying
      for (std::size_t j = 0; j < acc.size(); ++j)
        if (!acc[j].empty()) probes.emplace_back(j, acc[j].size() / 2);
      if (probes.size() > 4) probes = {probes[0], probes[probes.size() / 3], probes[2 * probes.size() / 3], probes.back()};
      continue;
    }
    for (std::size_t j = 0; j < acc.size(); ++j)
      for (std::size_t k = 0; k < acc[j].size(); ++k) crt_accumulate(acc[j][k], modulus, im.coeffs[j][k], q);
    modulus *= static_cast<unsigned long>(q);
    ++images;

    std::vector<mpq_class> probe_values;
    bool ok = true;
    for (auto [j, k] : probes) {
      mpq_class v;
      if (!rational_reconstruct(acc[j][k], modulus, v)) {
        ok = false;
        break;
      }
      probe_values.push_back(v);
    }
    if (!ok) {
      probe_previous.clear();
      continue;
    }
    bool stable = probe_values == probe_previous;
    probe_previous = std::move(probe_values);
    if (!stable) continue;

    std::vector<std::vector<mpq_class>> rec;
    if (!reconstruct(acc, modulus, rec)) continue;
    std::vector<PolyQ> polys;
    for (auto& c : rec) polys.emplace_back(Q, std::move(c));
    OrePoly<RationalField> candidate = OrePoly<RationalField>::from_polys(Q, polys);
    if (right_divides(a, candidate) && right_divides(b, candidate)) return prim(candidate);
  }
}

}  // namespace orecurv::detail
