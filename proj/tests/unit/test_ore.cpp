#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "orecurv/ore.hpp"
#include "orecurv/random.hpp"

using namespace orecurv;

namespace {

RationalField qf;

PolyQ q(std::vector<std::int64_t> c) { return PolyQ::from_ints(qf, c); }
OreQ ore_q(std::vector<PolyQ> c) { return OreQ::from_polys(qf, c); }
OreQ tau_q() { return OreQ::tau_power(qf, 1); }
OreQ scalar_q(const PolyQ& f) { return OreQ::scalar(RatFunQ(f)); }

// x^2 (x^2 + 1) tau - (x + 1)(x^2 + 2x + 2)
OreQ example_l() { return ore_q({-(q({1, 1}) * q({2, 2, 1})), q({0, 0, 1}) * q({1, 0, 1})}); }

OreQ example_a() {
  OreQ num = ore_q({q({14, 15, 11}), q({10})});
  return num.left_scale(RatFunQ(q({1}), q({1, 1}) * q({2, 2, 1})));
}

OreQ example_al() { return ore_q({q({-14, -15, -11}), q({-50, 35, -18, 11}), q({10, 10})}); }

OreP random_op(const PrimeField& f, int max_order, int max_deg, std::mt19937_64& rng) {
  return random_operator(f, 1 + static_cast<int>(rng() % max_order), max_deg, rng);
}

}  // namespace

TEST(Ore, CommutationRule) {
  OreQ x = scalar_q(q({0, 1}));
  EXPECT_EQ(ore_mul(tau_q(), x), ore_q({q({}), q({1, 1})}));
  EXPECT_EQ(ore_mul(tau_q() - scalar_q(q({1})), tau_q() + scalar_q(q({1}))), ore_q({q({-1}), q({}), q({1})}));
}

TEST(Ore, ExampleProduct) {
  OreQ al = ore_mul(example_a(), example_l());
  EXPECT_EQ(al, example_al());
  EXPECT_TRUE(al.is_integral());
  EXPECT_FALSE(example_a().is_integral());
  EXPECT_EQ(lc_star(al), q({-1, 1}));
  EXPECT_EQ(lc_star(example_l()), q({-1, 1}) * q({-1, 1}) * q({2, -2, 1}));
}

TEST(Ore, OrderAddsAndFieldsMustAgree) {
  std::mt19937_64 rng(1);
  PrimeField f(7);
  OreP a = random_op(f, 3, 3, rng), b = random_op(f, 3, 3, rng);
  EXPECT_EQ(ore_mul(a, b).order(), a.order() + b.order());
  OreP other = random_op(PrimeField(11), 2, 2, rng);
  EXPECT_THROW(ore_mul(a, other), Error);
}

TEST(Ore, AssociativeAndDistributive) {
  std::mt19937_64 rng(2);
  PrimeField f(13);
  for (int t = 0; t < 100; ++t) {
    OreP a = random_op(f, 2, 3, rng), b = random_op(f, 2, 3, rng), c = random_op(f, 2, 3, rng);
    EXPECT_EQ(ore_mul(ore_mul(a, b), c), ore_mul(a, ore_mul(b, c)));
    EXPECT_EQ(ore_mul(a, b + c), ore_mul(a, b) + ore_mul(a, c));
    EXPECT_EQ(ore_mul(a + b, c), ore_mul(a, c) + ore_mul(b, c));
  }
}

TEST(Ore, RightDivideExamples) {
  OreQ t3 = OreQ::tau_power(qf, 3);
  OreQ d = tau_q() - scalar_q(q({5}));
  EXPECT_EQ(right_divide(t3, d).remainder, scalar_q(q({125})));
  OreQ l = example_l();
  auto self = right_divide(l, l);
  EXPECT_EQ(self.quotient, scalar_q(q({1})));
  EXPECT_TRUE(self.remainder.is_zero());
  auto r = right_divide(OreQ::tau_power(qf, 2) - scalar_q(q({0, 1})), tau_q());
  EXPECT_EQ(r.quotient, tau_q());
  EXPECT_EQ(r.remainder, scalar_q(q({0, -1})));
  EXPECT_THROW(right_divide(l, OreQ(qf)), Error);
}

TEST(Ore, RightDivideReconstructs) {
  std::mt19937_64 rng(3);
  PrimeField f(11);
  for (int t = 0; t < 200; ++t) {
    OreP a = random_op(f, 4, 3, rng), b = random_op(f, 3, 3, rng);
    auto [qq, r] = right_divide(a, b);
    EXPECT_EQ(ore_mul(qq, b) + r, a);
    EXPECT_LT(r.order(), b.order());
  }
}

TEST(Ore, GcrdExamples) {
  OreQ l = example_l();
  EXPECT_EQ(gcrd(l, l), make_monic(l));
  EXPECT_EQ(gcrd(tau_q() - scalar_q(q({1})), tau_q() - scalar_q(q({0, 1}))).order(), 0);
  EXPECT_THROW(gcrd(OreQ(qf), OreQ(qf)), Error);
  std::mt19937_64 rng(4);
  PrimeField f(7);
  for (int t = 0; t < 30; ++t) {
    OreP a = random_op(f, 2, 2, rng), b = random_op(f, 2, 2, rng), r = random_op(f, 2, 2, rng);
    OreP g = gcrd(ore_mul(a, r), ore_mul(b, r));
    EXPECT_TRUE(right_divide(g, r).remainder.is_zero());
  }
}

TEST(Ore, LclmExamples) {
  OreQ c1 = tau_q() - scalar_q(q({1})), c2 = tau_q() - scalar_q(q({2}));
  EXPECT_EQ(lclm(c1, c2), ore_q({q({2}), q({-3}), q({1})}));
  EXPECT_EQ(lclm(example_l(), example_l()), make_monic(example_l()));
  EXPECT_THROW(lclm(c1, OreQ(qf)), Error);
}

TEST(Ore, LclmOrderIdentity) {
  std::mt19937_64 rng(5);
  PrimeField f(11);
  for (int t = 0; t < 100; ++t) {
    OreP a = random_op(f, 3, 2, rng), b = random_op(f, 3, 2, rng);
    if (t % 4 == 0) b = ore_mul(random_op(f, 1, 2, rng), a);  // shares a right factor
    OreP m = lclm(a, b);
    EXPECT_TRUE(right_divide(m, a).remainder.is_zero());
    EXPECT_TRUE(right_divide(m, b).remainder.is_zero());
    EXPECT_EQ(m.order() + gcrd(a, b).order(), a.order() + b.order());
    EXPECT_EQ(m, make_monic(lclm_euclidean(a, b)));
  }
}

TEST(Ore, LclmWithFirstOrderFactor) {
  std::mt19937_64 rng(6);
  PrimeField f(101);
  for (int t = 0; t < 30; ++t) {
    OreP l = random_primitive_operator(f, 1 + static_cast<int>(rng() % 3), 3, rng);
    std::uint64_t c = 1 + rng() % 100;
    OreP closed = lclm_first_order(l, c);
    OreP generic = lclm(l, OreP::tau_power(f, 1) - OreP::scalar(RatFunP(PolyP::constant(f, c))));
    EXPECT_EQ(make_monic(closed), generic);
    EXPECT_EQ(prim(closed), lclm_prim(l, OreP::tau_power(f, 1) - OreP::scalar(RatFunP(PolyP::constant(f, c)))));
  }
}

TEST(Ore, MultimodularLclmOverRationals) {
  OreQ l1 = ore_q({q({1, 2}), q({-3, 0, 1}), q({2, 1})});
  OreQ l2 = ore_q({q({5, 0, -1}), q({1, 1, 1})});
  OreQ want = prim(lclm_euclidean(l1, l2));
  EXPECT_EQ(lclm_prim(l1, l2), want);
  EXPECT_EQ(want.order(), 3);
  EXPECT_EQ(lclm_prim(example_l(), tau_q() - scalar_q(q({3}))), prim(lclm_euclidean(example_l(), tau_q() - scalar_q(q({3})))));
}

TEST(Ore, ContentAndPrim) {
  OreQ a = ore_q({q({-1, -1}), q({1, 1})});
  EXPECT_EQ(prim(a), tau_q() - scalar_q(q({1})));
  EXPECT_EQ(content(ore_q({q({-4, 4}), q({-2, 2})})), q({-1, 1}));
  EXPECT_EQ(prim(example_l()).order(), 1);
  EXPECT_EQ(prim(example_l()), ore_q({q({-1, -1}) * q({2, 2, 1}) , q({0, 0, 1}) * q({1, 0, 1})}));
  EXPECT_THROW(prim(OreQ(qf)), Error);
  // prim also clears denominators
  EXPECT_EQ(prim(example_a()), ore_q({q({14, 15, 11}), q({10})}).left_scale(RatFunQ(q({1}), q({10}))));
}

TEST(Ore, PrimIdempotentAndCanonical) {
  std::mt19937_64 rng(7);
  PrimeField f(7);
  for (int t = 0; t < 50; ++t) {
    OreP l = ore_mul(OreP::scalar(RatFunP(random_poly(f, 2, rng, true))), random_op(f, 3, 3, rng));
    OreP p1 = prim(l);
    EXPECT_EQ(prim(p1), p1);
    EXPECT_TRUE(is_primitive(p1));
    EXPECT_EQ(p1.polys().back(), p1.polys().back().monic());
    EXPECT_TRUE(content(p1).is_one());
  }
}

TEST(Ore, ContentIsNotMultiplicative) {
  OreQ al = ore_mul(example_a(), example_l());
  EXPECT_TRUE(is_primitive(example_l()));
  EXPECT_TRUE(al.is_integral());
  EXPECT_FALSE(example_a().is_integral());
}

TEST(Ore, LeadingCoefficientProductRule) {
  std::mt19937_64 rng(8);
  PrimeField f(11);
  for (int t = 0; t < 50; ++t) {
    OreP a = random_op(f, 2, 3, rng), l = random_op(f, 2, 3, rng);
    const int m = a.order(), n = l.order();
    PolyP want = (shift(a.polys()[m], -m - n) * shift(l.polys()[n], -n)).monic();
    EXPECT_EQ(lc_star(ore_mul(a, l)), want);
  }
}

TEST(Ore, StarExamples) {
  EXPECT_EQ(lc_star(tau_q() - scalar_q(q({0, 1}))), q({1}));
  EXPECT_EQ(lc_star(ore_q({q({}), q({0, 1})})), q({-1, 1}));
  EXPECT_EQ(tc_star(tau_q() - scalar_q(q({2, 1}))), q({2, 1}));
  EXPECT_EQ(tc_star(example_l()), q({2, 4, 3, 1}));
  EXPECT_EQ(tc_star(ore_q({q({6}), q({2})})), q({1}));
  EXPECT_THROW(tc_star(tau_q()), Error);
}

TEST(Ore, CompanionExamples) {
  auto c = companion(OreQ::tau_power(qf, 2) - scalar_q(q({0, 1})));
  ASSERT_EQ(c.size, 2);
  EXPECT_EQ(c.entries[0][0], RatFunQ(q({})));
  EXPECT_EQ(c.entries[0][1], RatFunQ(q({1})));
  EXPECT_EQ(c.entries[1][0], RatFunQ(q({0, 1})));
  EXPECT_EQ(c.entries[1][1], RatFunQ(q({})));
  auto e = companion(example_l());
  ASSERT_EQ(e.size, 1);
  EXPECT_EQ(e.entries[0][0], RatFunQ(q({1, 1}) * q({2, 2, 1}), q({0, 0, 1}) * q({1, 0, 1})));
  EXPECT_THROW(companion(scalar_q(q({1}))), Error);
}

TEST(Ore, ReduceModP) {
  Reduction r = reduce_mod_p(tau_q() - scalar_q(q({3})), 3);
  EXPECT_EQ(r.op, OreP::tau_power(PrimeField(3), 1));
  EXPECT_FALSE(r.order_dropped);
  EXPECT_THROW(reduce_mod_p(ore_q({q({-2}), q({2})}), 2), Error);
  Reduction e = reduce_mod_p(example_l(), 7);
  EXPECT_EQ(e.op, OreP::from_polys(PrimeField(7), {PolyP::from_ints(PrimeField(7), {-2, -4, -3, -1}),
                                                  PolyP::from_ints(PrimeField(7), {0, 0, 1, 0, 1})}));
  Reduction dropped = reduce_mod_p(ore_q({q({1}), q({1}), q({5})}), 5);
  EXPECT_TRUE(dropped.order_dropped);
  EXPECT_EQ(dropped.op.order(), 1);
}
