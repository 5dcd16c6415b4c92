#include "orecurv/random.hpp"

namespace orecurv {

PolyP random_poly(const PrimeField& field, int max_degree, std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<std::uint64_t> dist(0, field.characteristic() - 1);
  for (;;) {
    std::vector<std::uint64_t> c(max_degree + 1);
    for (auto& v : c) v = dist(rng);
    PolyP f(field, std::move(c));
    if (!nonzero || !f.is_zero()) return f;
  }
}

OreP random_operator(const PrimeField& field, int order, int max_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<PolyP> c;
  for (int i = 0; i <= order; ++i) {
    bool needed = i == 0 || i == order;
    c.push_back(random_poly(field, deg(rng), rng, needed));
  }
  return OreP::from_polys(field, c);
}

OreP random_primitive_operator(const PrimeField& field, int order, int max_degree, std::mt19937_64& rng) {
  for (;;) {
    OreP l = prim(random_operator(field, order, max_degree, rng));
    if (l.order() == order) return l;
  }
}

}  // namespace orecurv
