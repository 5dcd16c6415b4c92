#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "orecurv/center.hpp"
#include "orecurv/factor.hpp"
#include "orecurv/modular.hpp"
#include "orecurv/random.hpp"

using namespace orecurv;

namespace {

PolyQ q(std::vector<std::int64_t> c) { return PolyQ::from_ints(RationalField(), c); }
PolyP fp(std::uint64_t p, std::vector<std::int64_t> c) { return PolyP::from_ints(PrimeField(p), c); }

}  // namespace

TEST(Field, PrimalityIsChecked) {
  EXPECT_NO_THROW(FieldSpec::make(0));
  EXPECT_NO_THROW(FieldSpec::make(101));
  EXPECT_THROW(FieldSpec::make(1), Error);
  EXPECT_THROW(FieldSpec::make(91), Error);
  EXPECT_TRUE(is_prime_u64((1ULL << 61) - 1));
  EXPECT_FALSE(is_prime_u64(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(Field, PrimeFieldArithmetic) {
  PrimeField f(7);
  EXPECT_EQ(f.mul(3, 5), 1u);
  EXPECT_EQ(f.inv(3), 5u);
  EXPECT_EQ(f.from_int(-1), 6u);
  EXPECT_EQ(f.from_mpq(mpq_class(1, 2)), 4u);
  EXPECT_THROW(f.from_mpq(mpq_class(1, 7)), Error);
  EXPECT_THROW(f.inv(0), Error);
  PrimeField big((1ULL << 61) - 1);
  EXPECT_EQ(big.mul(big.inv(123456789), 123456789), 1u);
}

TEST(Poly, CanonicalTrimming) {
  PolyQ a(RationalField(), {1, 2, 0, 0});
  EXPECT_EQ(a.degree(), 1);
  EXPECT_EQ(fp(5, {5, 10}).degree(), -1);
  EXPECT_EQ(fp(5, {1, 2, 5}).degree(), 1);
}

TEST(Poly, ShiftExamples) {
  EXPECT_EQ(shift(q({0, 0, 1}), 1), q({1, 2, 1}));
  PolyQ f = q({3, -1, 4, 1});
  EXPECT_EQ(shift(f, 0), f);
  EXPECT_EQ(shift(fp(5, {0, 0, 0, 0, 0, 1}), 1), fp(5, {1, 0, 0, 0, 0, 1}));
}

TEST(Poly, ShiftIsAnAutomorphism) {
  std::mt19937_64 rng(11);
  PrimeField f(13);
  for (int t = 0; t < 50; ++t) {
    PolyP a = random_poly(f, 6, rng), b = random_poly(f, 6, rng);
    std::int64_t k = static_cast<std::int64_t>(rng() % 20) - 10;
    EXPECT_EQ(shift(a * b, k), shift(a, k) * shift(b, k));
    EXPECT_EQ(shift(shift(a, k), 3), shift(a, k + 3));
    EXPECT_EQ(shift(a, k), oracle::naive_shift(a, k));
  }
}

TEST(Poly, ContentPolyExamples) {
  EXPECT_EQ(content_poly(std::vector<PolyQ>{q({-1, 0, 1}), q({-1, 1})}), q({-1, 1}));
  EXPECT_EQ(content_poly(std::vector<PolyQ>{q({0, 3}), q({5})}), q({1}));
  EXPECT_EQ(content_poly(std::vector<PolyQ>{q({2, 2}), q({-4, 0, 4})}), q({1, 1}));
  EXPECT_THROW(content_poly(std::vector<PolyQ>{PolyQ(RationalField())}), Error);
}

TEST(Poly, DivmodReconstructs) {
  std::mt19937_64 rng(5);
  PrimeField f(101);
  for (int t = 0; t < 100; ++t) {
    PolyP a = random_poly(f, 12, rng), b = random_poly(f, 5, rng, true);
    auto [qq, r] = divmod(a, b);
    EXPECT_EQ(qq * b + r, a);
    EXPECT_LT(r.degree(), b.degree() == 0 ? 0 : b.degree());
  }
}

TEST(Poly, KroneckerProductMatchesSchoolbook) {
  std::mt19937_64 rng(17);
  for (std::uint64_t p : {2ULL, 53ULL, 65537ULL, 4294967291ULL, (1ULL << 61) - 1}) {
    PrimeField f(p);
    for (int t = 0; t < 5; ++t) {
      PolyP a = random_poly(f, 40 + static_cast<int>(rng() % 200), rng, true);
      PolyP b = random_poly(f, 30 + static_cast<int>(rng() % 200), rng, true);
      EXPECT_EQ(a * b, oracle::naive_mul(a, b)) << "p = " << p;
    }
  }
}

TEST(Poly, RationalGcdMatchesPlainEuclid) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> coef(-30, 30);
  for (int t = 0; t < 40; ++t) {
    auto rnd = [&](int d) {
      std::vector<mpq_class> c;
      for (int i = 0; i <= d; ++i) c.emplace_back(coef(rng), 1 + rng() % 7);
      return PolyQ(RationalField(), c);
    };
    PolyQ g = rnd(2), a = rnd(4) * g, b = rnd(3) * g;
    PolyQ want = oracle::naive_gcd(a, b);
    EXPECT_EQ(gcd(a, b), want);
    EXPECT_TRUE(divides(g.monic(), want) || g.is_zero());
  }
}

TEST(Modular, RationalReconstruction) {
  mpz_class m = mpz_class(modular_prime(0)) * modular_prime(1);
  mpq_class v(-355, 113);
  mpz_class num = v.get_num(), den = v.get_den();
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
  mpz_class image = ((num * inv) % m + m) % m;
  mpq_class r;
  ASSERT_TRUE(rational_reconstruct(image, m, r));
  EXPECT_EQ(r, v);
}

TEST(RatFun, NormalFormIsCanonical) {
  RationalField qf;
  RatFunQ a(q({-1, 0, 1}), q({2, 2}));  // (x^2 - 1) / (2x + 2)
  RatFunQ b(q({-3, 3}), q({6}));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.den(), q({1}));
  RatFunQ z(PolyQ(qf), q({5, 1}));
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.den(), q({1}));
}

TEST(RatFun, ArithmeticAndShift) {
  PrimeField f(7);
  RatFunP a(fp(7, {1, 1}), fp(7, {0, 1}));
  RatFunP b(fp(7, {0, 1}), fp(7, {1, 1}));
  EXPECT_EQ(a * b, RatFunP(fp(7, {1})));
  EXPECT_EQ((a + b) - b, a);
  EXPECT_EQ(shift(a, 1), RatFunP(fp(7, {2, 1}), fp(7, {1, 1})));
  EXPECT_THROW(RatFunP(f).inv(), Error);
}

TEST(Center, NormExamples) {
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL}) {
    EXPECT_EQ(norm(fp(p, {0, 1})), fp(p, {0, 1}));
    EXPECT_EQ(norm(fp(p, {1})), fp(p, {1}));
  }
  EXPECT_EQ(norm(fp(5, {-1, 1})), fp(5, {0, 1}));
  EXPECT_THROW(norm(q({0, 1})), Error);
}

TEST(Center, NormRatfunExamples) {
  PrimeField f(5);
  EXPECT_EQ(norm_ratfun(RatFunP(fp(5, {0, 1}), fp(5, {-1, 1}))), RatFunP(fp(5, {1})));
  EXPECT_EQ(norm_ratfun(RatFunP(fp(5, {3}))), RatFunP(fp(5, {3})));
  EXPECT_EQ(norm_ratfun(RatFunP(fp(5, {0, 0, 1}))), RatFunP(fp(5, {0, 0, 1})));
  EXPECT_THROW(norm_ratfun(RatFunP(f)), Error);
}

TEST(Center, NormProperties) {
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL}) {
    PrimeField f(p);
    std::mt19937_64 rng(p);
    for (int t = 0; t < 200; ++t) {
      PolyP a = random_poly(f, 4, rng, true), b = random_poly(f, 4, rng, true);
      EXPECT_EQ(norm(a * b), norm(a) * norm(b));
    }
    for (int t = 0; t < 30; ++t) {
      PolyP a = random_poly(f, 5, rng, true);
      PolyP n = norm(a);
      EXPECT_EQ(n.degree(), a.degree());
      EXPECT_EQ(oracle::substitute_center(n), oracle::shifted_product(a));
    }
  }
}

TEST(Center, ToCenterExamples) {
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL}) {
    std::vector<std::int64_t> z(p + 1, 0);
    z[p] = 1;
    z[1] = -1;
    EXPECT_EQ(to_center(fp(p, z)), fp(p, {0, 1}));
    EXPECT_EQ(to_center(fp(p, {7})), fp(p, {7}));
  }
  // (x^3 - x)^2 + 2(x^3 - x) + 1 over F_3
  PolyP z = fp(3, {0, -1, 0, 1});
  EXPECT_EQ(to_center(z * z + z.scale(2) + fp(3, {1})), fp(3, {1, 2, 1}));
  EXPECT_THROW(to_center(fp(5, {0, 1})), Error);
}

TEST(Center, ToCenterRoundTrip) {
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL}) {
    PrimeField f(p);
    std::mt19937_64 rng(p + 100);
    for (int t = 0; t < 30; ++t) {
      PolyP g = random_poly(f, 4, rng);
      PolyP fx = oracle::substitute_center(g);
      EXPECT_EQ(from_center(g), fx);
      EXPECT_EQ(to_center(fx), g);
    }
  }
}

TEST(Center, SeriesInverseExamples) {
  EXPECT_EQ(series_inverse(fp(5, {1}), 5), fp(5, {1}));
  EXPECT_EQ(series_inverse(fp(5, {1, -1}), 3), fp(5, {1, 1, 1}));
  EXPECT_EQ(series_inverse(fp(7, {2, 1}), 2), fp(7, {4, 5}));
  EXPECT_THROW(series_inverse(fp(7, {0, 1}), 2), Error);
  std::mt19937_64 rng(3);
  PrimeField f(11);
  for (int t = 0; t < 50; ++t) {
    PolyP b = random_poly(f, 6, rng);
    if (b.coeff(0) == 0) continue;
    int m = 1 + static_cast<int>(rng() % 10);
    EXPECT_EQ((series_inverse(b, m) * b).truncate(m), fp(11, {1}));
  }
}

TEST(Factor, ProductAndIrreducibility) {
  for (std::uint64_t p : {2ULL, 3ULL, 7ULL, 101ULL}) {
    PrimeField f(p);
    std::mt19937_64 rng(p * 7);
    for (int t = 0; t < 20; ++t) {
      PolyP a = random_poly(f, 8, rng, true).monic();
      PolyP sq = a * random_poly(f, 3, rng, true).monic();
      PolyP prod = PolyP::constant(f, 1);
      auto fs = factor(sq);
      for (const auto& fa : fs) {
        EXPECT_TRUE(is_irreducible(fa.poly));
        EXPECT_EQ(fa.poly, fa.poly.monic());
        prod = prod * pow(fa.poly, fa.multiplicity);
      }
      EXPECT_EQ(prod, sq);
    }
  }
  EXPECT_TRUE(is_irreducible(fp(7, {2, -2, 1})));  // x^2 - 2x + 2 has no root mod 7
  EXPECT_FALSE(is_irreducible(fp(5, {2, -2, 1})));
}
