#include <gtest/gtest.h>

#include "orered/orered.hpp"

using namespace orered;

namespace {

const OreContext kDiff = OreContext::differential();

OrePoly op(const char* s) { return parse_ore(s, kDiff); }

// Sum u_i a v_i recomputed here rather than through witness_verify.
OrePoly witness_sum(const Witness& w) {
  OrePoly s(kDiff);
  for (const auto& [u, v] : w.terms) s += u * w.target * v;
  return s;
}

}  // namespace

TEST(CommutatorWitness, SecondPowerOfD) {
  const Witness w = commutator_witness(op("D^2"));
  EXPECT_EQ(w.terms.size(), 3u);
  EXPECT_TRUE(witness_sum(w).is_one());
  // u_j = (-1)^j C(2,j) / 2 and v_j = x^(2-j)
  EXPECT_EQ(w.terms[0].first, op("1/2"));
  EXPECT_EQ(w.terms[1].first, op("-x"));
  EXPECT_EQ(w.terms[2].first, op("x^2/2"));
}

TEST(CommutatorWitness, TermCountIsDegreePlusOne) {
  Rng rng(31);
  RandomShape shape;
  shape.op_degree = 3;
  for (int it = 0; it < 30; ++it) {
    const OrePoly a = random_nonzero_ore(rng, kDiff, shape);
    const Witness w = commutator_witness(a);
    EXPECT_EQ(w.terms.size(), static_cast<std::size_t>(a.degree()) + 1);
    EXPECT_TRUE(witness_sum(w).is_one());
  }
}

TEST(CommutatorWitness, UnitAndErrors) {
  const Witness w = commutator_witness(op("x^2 + 1"));
  EXPECT_TRUE(witness_sum(w).is_one());
  EXPECT_THROW(commutator_witness(OrePoly(kDiff)), Error);
  try {
    commutator_witness(parse_ore("D", OreContext::shift()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSimpleContext);
  }
}

TEST(TwoTermWitness, SecondPowerOfDAcceptsXSquared) {
  const Witness w = two_term_witness(op("D^2"));
  ASSERT_EQ(w.terms.size(), 2u);
  EXPECT_EQ(w.terms[1].second, op("x^2"));
  EXPECT_TRUE(witness_sum(w).is_one());
  ASSERT_FALSE(w.transcript.empty());
  EXPECT_NE(w.transcript.back().find("accepted"), std::string::npos);
}

TEST(TwoTermWitness, UnitPaddedToTwoTerms) {
  const Witness w = two_term_witness(op("3"));
  EXPECT_EQ(w.terms.size(), 2u);
  EXPECT_EQ(w.nonzero_terms(), 1u);
  EXPECT_TRUE(witness_sum(w).is_one());
}

TEST(TwoTermWitness, RandomSuccessesVerify) {
  Rng rng(37);
  RandomShape shape;
  shape.op_degree = 3;
  int found = 0;
  for (int it = 0; it < 20; ++it) {
    const OrePoly a = random_nonzero_ore(rng, kDiff, shape);
    try {
      const Witness w = two_term_witness(a);
      EXPECT_LE(w.terms.size(), 2u);
      EXPECT_TRUE(witness_sum(w).is_one());
      ++found;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::SearchExhausted);
    }
  }
  EXPECT_GT(found, 0);
}

TEST(TwoTermWitness, SameSeedSameWitness) {
  SearchPolicy p;
  p.seed = 99;
  const OrePoly a = op("x*D^3 + D + 7");
  EXPECT_EQ(two_term_witness(a, p).terms, two_term_witness(a, p).terms);
}

TEST(ProductSplit, DistributesOverFactors) {
  const std::vector<OrePoly> factors = {op("D"), op("D + 1/x"), op("x*D - 2")};
  OrePoly prod = factors[0] * factors[1] * factors[2];
  const Witness w = two_term_witness(prod);
  const SplitWitness s = product_split(factors, w);
  ASSERT_EQ(s.terms.size(), 3u);
  OrePoly sum(kDiff);
  for (std::size_t i = 0; i < 3; ++i) sum += s.terms[i].first * factors[i] * s.terms[i].second;
  EXPECT_TRUE(sum.is_one());
  // padding slot
  EXPECT_TRUE(s.terms[2].first.is_zero());
}

TEST(ProductSplit, Errors) {
  const Witness w = commutator_witness(op("D^2"));
  EXPECT_THROW(product_split({op("D"), op("D")}, w), Error);  // 3 terms, 2 factors
  EXPECT_THROW(product_split({op("D"), op("x")}, w), Error);  // wrong target
  EXPECT_THROW(product_split({op("D"), OrePoly(kDiff)}, w), Error);
  try {
    product_split({op("D"), op("D")}, w);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooManyTerms);
  }
}

TEST(WitnessVerify, ReportsResidual) {
  Witness w = commutator_witness(op("D"));
  w.terms[0].first = w.terms[0].first + op("1");
  auto chk = witness_verify(w);
  EXPECT_FALSE(chk.ok);
  EXPECT_FALSE(chk.residual.is_zero());
}
