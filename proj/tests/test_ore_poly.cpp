#include <gtest/gtest.h>

#include "oracles.hpp"
#include "orered/orered.hpp"

using namespace orered;

namespace {

const OreContext kDiff = OreContext::differential();
const OreContext kShift = OreContext::shift();

OrePoly op(const char* s, const OreContext& ctx = kDiff) { return parse_ore(s, ctx); }

RandomShape poly_shape(int deg) {
  RandomShape s;
  s.op_degree = deg;
  s.polynomial = true;
  return s;
}

// Two operators agree iff they agree on enough probe functions; used when
// coefficients are rational.
void expect_same_action(const OrePoly& a, const OrePoly& b) {
  for (const auto& f : oracle::probe_functions()) EXPECT_EQ(oracle::apply(a, f), oracle::apply(b, f));
}

}  // namespace

TEST(OrePoly, CommutationRule) {
  EXPECT_EQ(print_ore(OrePoly::D(kDiff) * OrePoly::x(kDiff)), "x*D + 1");
  EXPECT_EQ(print_ore(OrePoly::D(kShift) * OrePoly::x(kShift)), "(x + 1)*D");
  EXPECT_EQ(op("(D+x)*(D-x)"), op("D^2 - x^2 - 1"));
}

TEST(OrePoly, ProductMatchesRewritingOracle) {
  for (const auto& ctx : {kDiff, kShift}) {
    Rng rng(ctx.is_differential() ? 101 : 202);
    for (int it = 0; it < 150; ++it) {
      const OrePoly a = random_ore(rng, ctx, poly_shape(4)), b = random_ore(rng, ctx, poly_shape(4));
      EXPECT_EQ(oracle::from_ore(a * b), oracle::mul(oracle::from_ore(a), oracle::from_ore(b)));
    }
  }
}

TEST(OrePoly, ProductIsCompositionOfActions) {
  for (const auto& ctx : {kDiff, kShift}) {
    Rng rng(ctx.is_differential() ? 303 : 404);
    RandomShape shape;
    shape.op_degree = 3;
    for (int it = 0; it < 40; ++it) {
      const OrePoly a = random_ore(rng, ctx, shape), b = random_ore(rng, ctx, shape);
      const OrePoly ab = a * b;
      for (const auto& f : oracle::probe_functions()) {
        const RatFun bf = oracle::apply(b, f);
        EXPECT_EQ(oracle::apply(ab, f), oracle::apply(a, {bf.num(), bf.den()}));
      }
    }
  }
}

TEST(OrePoly, RingAxioms) {
  Rng rng(5);
  RandomShape shape;
  shape.op_degree = 3;
  for (int it = 0; it < 40; ++it) {
    const OrePoly a = random_ore(rng, kDiff, shape), b = random_ore(rng, kDiff, shape),
                  c = random_ore(rng, kDiff, shape);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    if (!a.is_zero() && !b.is_zero()) {
      EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
    }
  }
}

TEST(OrePoly, ContextMismatchThrows) {
  EXPECT_THROW(OrePoly::D(kDiff) * OrePoly::D(kShift), Error);
  EXPECT_THROW(OrePoly::D(kDiff) + OrePoly::D(kShift), Error);
}

TEST(OreDivision, WorkedExample) {
  auto r = ore_divmod(op("D^2"), op("D + x"), DivSide::Right);
  EXPECT_EQ(r.q, op("D - x"));
  EXPECT_EQ(r.r, op("x^2 - 1"));
  EXPECT_THROW(ore_divmod(op("D"), OrePoly(kDiff), DivSide::Right), Error);
}

TEST(OreDivision, ContractBothSides) {
  for (const auto& ctx : {kDiff, kShift}) {
    Rng rng(ctx.is_differential() ? 17 : 18);
    RandomShape shape;
    for (int it = 0; it < 60; ++it) {
      const OrePoly a = random_ore(rng, ctx, shape), b = random_nonzero_ore(rng, ctx, shape);
      auto rr = ore_divmod(a, b, DivSide::Right);
      EXPECT_EQ(rr.q * b + rr.r, a);
      EXPECT_LT(rr.r.degree(), b.degree());
      auto rl = ore_divmod(a, b, DivSide::Left);
      EXPECT_EQ(b * rl.q + rl.r, a);
      EXPECT_LT(rl.r.degree(), b.degree());
    }
  }
}

TEST(OreEuclid, LclmWorkedExample) {
  auto l = ore_lcm(op("D"), op("x*D - 1"), LcmSide::Lclm);
  EXPECT_EQ(l.l, op("D^2"));
  EXPECT_EQ(l.s * op("D"), l.l);
  EXPECT_EQ(l.t * op("x*D - 1"), l.l);
}

TEST(OreEuclid, GcrdOfCommonFactor) {
  // (D + 1/x) is a right factor of both
  const OrePoly g = op("D + 1/x");
  auto r = ore_xgcd(op("D^2 + 3") * g, op("x*D - 5") * g, GcdSide::Gcrd);
  EXPECT_EQ(r.g, g);
}

TEST(OreEuclid, BezoutAndDegreeIdentity) {
  for (const auto& ctx : {kDiff, kShift}) {
    Rng rng(ctx.is_differential() ? 23 : 24);
    RandomShape shape;
    shape.op_degree = 3;
    for (int it = 0; it < 40; ++it) {
      const OrePoly a = random_nonzero_ore(rng, ctx, shape), b = random_nonzero_ore(rng, ctx, shape);
      auto gr = ore_xgcd(a, b, GcdSide::Gcrd);
      EXPECT_EQ(gr.u * a + gr.v * b, gr.g);
      EXPECT_EQ(gr.a_cof * gr.g, a);
      EXPECT_EQ(gr.b_cof * gr.g, b);
      EXPECT_TRUE(gr.g.is_monic());
      auto ll = ore_lcm(a, b, LcmSide::Lclm);
      EXPECT_EQ(ll.s * a, ll.l);
      EXPECT_EQ(ll.t * b, ll.l);
      EXPECT_TRUE(ll.l.is_monic());
      EXPECT_EQ(gr.g.degree() + ll.l.degree(), a.degree() + b.degree());

      auto gl = ore_xgcd(a, b, GcdSide::Gcld);
      EXPECT_EQ(a * gl.u + b * gl.v, gl.g);
      EXPECT_EQ(gl.g * gl.a_cof, a);
      EXPECT_EQ(gl.g * gl.b_cof, b);
      EXPECT_TRUE(gl.g.is_monic());
      auto lr = ore_lcm(a, b, LcmSide::Lcrm);
      EXPECT_EQ(a * lr.s, lr.l);
      EXPECT_EQ(b * lr.t, lr.l);
      EXPECT_TRUE(lr.l.is_monic());
      EXPECT_EQ(gl.g.degree() + lr.l.degree(), a.degree() + b.degree());
    }
  }
}

TEST(OreEuclid, ReflectionIsInvolutiveAntiAutomorphism) {
  EXPECT_EQ(detail::reflect(OrePoly::D(kDiff)), -OrePoly::D(kDiff));
  EXPECT_EQ(detail::reflect(OrePoly::x(kDiff)), OrePoly::x(kDiff));
  EXPECT_EQ(detail::reflect(OrePoly::D(kShift)), OrePoly::D(kShift));
  EXPECT_EQ(detail::reflect(OrePoly::x(kShift)), -OrePoly::x(kShift));
  for (const auto& ctx : {kDiff, kShift}) {
    Rng rng(ctx.is_differential() ? 25 : 26);
    RandomShape shape;
    shape.op_degree = 3;
    for (int it = 0; it < 30; ++it) {
      const OrePoly a = random_ore(rng, ctx, shape), b = random_ore(rng, ctx, shape);
      EXPECT_EQ(detail::reflect(a * b), detail::reflect(b) * detail::reflect(a));
      EXPECT_EQ(detail::reflect(detail::reflect(a)), a);
    }
  }
}

TEST(OreEuclid, Errors) {
  EXPECT_THROW(ore_xgcd(OrePoly(kDiff), OrePoly(kDiff), GcdSide::Gcrd), Error);
  EXPECT_THROW(ore_lcm(OrePoly(kDiff), op("D"), LcmSide::Lclm), Error);
  EXPECT_EQ(ore_xgcd(OrePoly(kDiff), op("x*D"), GcdSide::Gcrd).g, op("D"));
}

TEST(OrePoly, ActionAgreesAfterParsing) {
  expect_same_action(op("D*(1/x)"), op("(1/x)*D - 1/x^2"));
  expect_same_action(op("D*(1/x)", kShift), op("(1/(x+1))*D", kShift));
}
