#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "orered/orered.hpp"

using namespace orered;

namespace {

UniPoly P(std::vector<long> c) { return UniPoly(std::vector<Rational>(c.begin(), c.end())); }

}  // namespace

TEST(Rational, ParsesAndNormalizes) {
  EXPECT_EQ(rational_from_string("6/4"), make_rational(3, 2));
  EXPECT_EQ(rational_from_string("-10"), Rational(-10));
  EXPECT_THROW(make_rational(1, 0), Error);
  EXPECT_TRUE(is_integer(make_rational(8, 4)));
}

TEST(PrimeField, InverseByExhaustion) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 65521u}) {
    const std::uint32_t limit = p < 100 ? p : 200;
    for (std::uint32_t a = 1; a < limit; ++a) {
      PrimeFieldElem x(a, p);
      EXPECT_EQ((x * x.inverse()).value(), 1u);
      // Fermat
      EXPECT_EQ(x.pow(p - 1).value(), 1u);
    }
  }
  EXPECT_THROW(PrimeFieldElem(1, 4), Error);
  EXPECT_THROW(PrimeFieldElem(0, 5).inverse(), Error);
}

TEST(UniPoly, DivmodContract) {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    UniPoly a = random_unipoly(rng, 6, 20), b = random_unipoly(rng, static_cast<int>(rng() % 4), 20);
    auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
}

TEST(UniPoly, GcdDividesBothAndIsMonic) {
  const UniPoly g = gcd(P({-1, 0, 1}) * P({3, 1}), P({-1, 0, 1}) * P({5, 0, 1}));
  EXPECT_EQ(g, P({-1, 0, 1}));
  EXPECT_EQ(gcd(P({0}), P({4, 2})), P({2, 1}));
}

TEST(UniPoly, ShiftMatchesBinomialExpansion) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 50; ++it) {
    UniPoly a = random_unipoly(rng, 5, 9);
    for (long h : {-2L, 1L, 3L}) EXPECT_EQ(a.shifted(Rational(h)), oracle::poly_shift(a, h));
  }
}

TEST(RatFun, CanonicalForm) {
  const RatFun f = RatFun::normalize(P({-2, 0, 2}), P({2, 2}));  // 2(x^2-1) / 2(x+1)
  EXPECT_TRUE(f.is_polynomial());
  EXPECT_EQ(f.num(), P({-1, 1}));
  const RatFun g = RatFun::normalize(P({3}), P({0, 6}));  // 3 / 6x
  EXPECT_EQ(g.den(), P({0, 1}));
  EXPECT_EQ(g.num(), UniPoly(make_rational(1, 2)));
  EXPECT_THROW(RatFun::normalize(P({1}), UniPoly()), Error);
}

TEST(RatFun, NormalizeIsIdempotent) {
  std::mt19937_64 rng(3);
  RandomShape shape;
  for (int it = 0; it < 200; ++it) {
    const RatFun f = random_ratfun(rng, shape);
    EXPECT_EQ(RatFun::normalize(f.num(), f.den()), f);
    EXPECT_EQ(gcd(f.num(), f.den()).degree(), 0);
    EXPECT_EQ(f.den().lc(), 1);
  }
}

TEST(RatFun, FieldAxioms) {
  std::mt19937_64 rng(5);
  RandomShape shape;
  for (int it = 0; it < 100; ++it) {
    const RatFun a = random_ratfun(rng, shape), b = random_ratfun(rng, shape), c = random_ratfun(rng, shape);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * a.inverse(), RatFun(1));
    EXPECT_EQ((a - a), RatFun());
    EXPECT_EQ((a / b) * b, a);
  }
  EXPECT_THROW(RatFun(1) / RatFun(), Error);
}

TEST(RatFun, DerivativeLeibnizAndQuotientRule) {
  std::mt19937_64 rng(9);
  RandomShape shape;
  for (int it = 0; it < 100; ++it) {
    const RatFun a = random_ratfun(rng, shape), b = random_ratfun(rng, shape);
    EXPECT_EQ((a * b).derivative(), a.derivative() * b + a * b.derivative());
    EXPECT_EQ(a.derivative(), oracle::to_ratfun(oracle::frac_derivative({a.num(), a.den()})));
  }
}

TEST(RatFun, ShiftIsRingMorphism) {
  std::mt19937_64 rng(13);
  RandomShape shape;
  for (int it = 0; it < 50; ++it) {
    const RatFun a = random_ratfun(rng, shape), b = random_ratfun(rng, shape);
    const Rational h(1);
    EXPECT_EQ((a * b).shifted(h), a.shifted(h) * b.shifted(h));
    EXPECT_EQ((a + b).shifted(h), a.shifted(h) + b.shifted(h));
    EXPECT_EQ(a.shifted(h).shifted(Rational(-1)), a);
  }
}

TEST(RatFun, ArithDispatch) {
  const RatFun x = RatFun::x();
  EXPECT_EQ(ratfun_arith(RatFunOp::Inv, x), RatFun::normalize(P({1}), P({0, 1})));
  EXPECT_EQ(ratfun_arith(RatFunOp::Neg, x), -x);
  EXPECT_THROW(ratfun_arith(RatFunOp::Inv, RatFun()), Error);
}

TEST(OreContext, OnlyShippedPairsAreValid) {
  EXPECT_THROW(OreContext(Twist::Identity, Derivation::Zero), Error);
  EXPECT_THROW(OreContext(Twist::Shift, Derivation::DDx), Error);
  EXPECT_TRUE(OreContext::differential().is_simple());
  EXPECT_FALSE(OreContext::shift().is_simple());
}
