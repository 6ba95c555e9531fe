#include <gtest/gtest.h>

#include "oracles.hpp"
#include "orered/orered.hpp"

using namespace orered;
using namespace orered::finite;

namespace {

std::vector<FiniteElem> nonzero(std::size_t k, std::uint32_t p) {
  std::vector<FiniteElem> v;
  for (std::uint64_t c = 1; c < FiniteElem::ring_size(k, p); ++c) v.push_back(FiniteElem::from_code(k, p, c));
  return v;
}

FiniteElem e(std::size_t i, std::size_t j, std::size_t k = 2, std::uint32_t p = 2) {
  return FiniteElem::unit_matrix(k, p, i - 1, j - 1);
}

bool is_unit_by_det2(const FiniteElem& a) {
  const long d = static_cast<long>(a.get(0, 0) * a.get(1, 1)) - static_cast<long>(a.get(0, 1) * a.get(1, 0));
  return ((d % static_cast<long>(a.modulus())) + a.modulus()) % a.modulus() != 0;
}

}  // namespace

TEST(FpMatrix, RankNormalForm) {
  FpMatrix m(3, 4, 5);
  const long vals[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 0, 1}};
  std::vector<std::vector<long>> copy(3, std::vector<long>(4));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = static_cast<std::uint32_t>(copy[i][j] = vals[i][j]);
  auto nf = rank_normal_form(m);
  EXPECT_EQ(nf.rank, oracle::rank_mod_p(copy, 5));
  const FpMatrix E = nf.L * m * nf.R;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(E(i, j), (i == j && i < nf.rank) ? 1u : 0u);
}

TEST(FiniteElem, RingBasics) {
  for (const auto& a : nonzero(2, 3)) {
    EXPECT_EQ(FiniteElem::from_code(2, 3, a.code()), a);
    EXPECT_EQ(finite_unit(a).is_unit, is_unit_by_det2(a));
    EXPECT_EQ(a.rank(), oracle::elem_rank(a));
  }
  EXPECT_EQ(e(1, 1) * e(1, 2), e(1, 2));
  EXPECT_TRUE((e(1, 2) * e(1, 1)).is_zero());
  EXPECT_EQ(e(1, 1).to_string(), "[[1,0],[0,0]]");
}

TEST(FiniteWitness, MatrixUnitExample) {
  const FiniteWitness w = finite_witness(e(1, 1));
  ASSERT_EQ(w.terms.size(), 2u);
  EXPECT_EQ(w.terms[0].first, FiniteElem::identity(2, 2));
  EXPECT_EQ(w.terms[0].second, e(1, 1));
  EXPECT_EQ(w.terms[1].first, e(2, 1));
  EXPECT_EQ(w.terms[1].second, e(1, 2));
  EXPECT_THROW(finite_witness(FiniteElem::zero(2, 2)), Error);
}

TEST(FiniteWitness, TermCountIsCeilKOverRank) {
  auto check = [](const FiniteElem& a) {
    const std::size_t r = oracle::elem_rank(a), k = a.dim();
    const FiniteWitness w = finite_witness(a);
    EXPECT_EQ(w.terms.size(), (k + r - 1) / r) << a.to_string();
    FiniteElem s = FiniteElem::zero(k, a.modulus());
    for (const auto& [u, v] : w.terms) s = s + u * a * v;
    EXPECT_EQ(s, FiniteElem::identity(k, a.modulus()));
  };
  for (const auto& a : nonzero(2, 2)) check(a);
  for (const auto& a : nonzero(2, 3)) check(a);
  Rng rng(41);
  int n = 0;
  while (n < 200) {
    const FiniteElem a = random_finite(rng, 3, 2);
    if (a.is_zero()) continue;
    check(a);
    ++n;
  }
}

TEST(StableRange, Examples) {
  const FiniteElem one = FiniteElem::identity(2, 2);
  EXPECT_TRUE(finite_sr1(one, e(1, 2)).is_zero());
  const FiniteElem t = finite_sr1(e(1, 1), e(2, 2));
  EXPECT_TRUE(is_unit_by_det2(e(1, 1) + e(2, 2) * t));
  try {
    finite_sr1(e(1, 1), e(1, 2));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::NotUnimodularPair);
  }
}

TEST(StableRange, AllUnimodularPairsOfM2F2) {
  int pairs = 0;
  for (std::uint64_t ca = 0; ca < 16; ++ca)
    for (std::uint64_t cb = 0; cb < 16; ++cb) {
      const FiniteElem a = FiniteElem::from_code(2, 2, ca), b = FiniteElem::from_code(2, 2, cb);
      std::vector<std::vector<long>> m(2, std::vector<long>(4));
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
          m[i][j] = a.get(i, j);
          m[i][2 + j] = b.get(i, j);
        }
      if (oracle::rank_mod_p(m, 2) != 2) {
        EXPECT_THROW(finite_sr1(a, b), Error);
        continue;
      }
      ++pairs;
      EXPECT_TRUE(is_unit_by_det2(a + b * finite_sr1(a, b)));
    }
  EXPECT_GT(pairs, 0);
}

TEST(Lemma3, Examples) {
  const auto r1 = lemma3_unitize(e(1, 1));
  EXPECT_TRUE(is_unit_by_det2(r1.a + r1.x * r1.a * r1.y));
  EXPECT_EQ(r1.u, r1.a + r1.x * r1.a * r1.y);
  const auto r2 = lemma3_unitize(e(1, 2));
  EXPECT_TRUE(is_unit_by_det2(r2.a + r2.x * r2.a * r2.y));
  const FiniteElem u = e(1, 2) + e(2, 1);
  const auto r3 = lemma3_unitize(u);
  EXPECT_TRUE(r3.fast_path);
  EXPECT_TRUE(r3.x.is_zero() && r3.y.is_zero());
}

TEST(Lemma3, RankOneOfM3IsOracleFailure) {
  const FiniteElem a = FiniteElem::unit_matrix(3, 2, 0, 0);
  try {
    lemma3_unitize(a);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::NoTwoTermWitness);
  }
}

TEST(Lemma3And4, ExhaustiveM2F2AndM2F3) {
  for (std::uint32_t p : {2u, 3u})
    for (const auto& a : nonzero(2, p)) {
      const auto rec = lemma3_unitize(a);
      EXPECT_TRUE(is_unit_by_det2(a + rec.x * a * rec.y)) << a.to_string();
      const auto l4 = lemma4_reduce(a);
      const auto& R = l4.reduction;
      const FiniteElem one = one_like(a), zero = zero_like(a);
      // recompute P diag(a, a) Q entrywise
      const Block2 lhs = R.P * Block2::diag(a, a) * R.Q;
      EXPECT_EQ(lhs(0, 0), one);
      EXPECT_EQ(lhs(0, 1), zero);
      EXPECT_EQ(lhs(1, 0), zero);
      EXPECT_EQ(lhs(1, 1), R.c);
      EXPECT_TRUE((R.P * R.Pinv).is_identity());
      EXPECT_TRUE((R.Q * R.Qinv).is_identity());
      EXPECT_EQ(R.c, a - a * rec.y * finite_inverse(rec.u) * rec.x * a);
    }
}

TEST(Lemma4, UnitFastPath) {
  const FiniteElem one = FiniteElem::identity(2, 2);
  const auto r = lemma4_reduce(one);
  EXPECT_TRUE(r.record.fast_path);
  EXPECT_TRUE(finite_unit(r.reduction.c).is_unit);
  EXPECT_TRUE(finite_unit(lemma4_reduce(e(1, 2) + e(2, 1)).reduction.c).is_unit);
}

TEST(Theorem1, ExhaustiveM2F2) {
  const auto all = nonzero(2, 2);
  // eligible pairs counted by a hand-written product mod 2
  auto zero_product = [](std::uint64_t ca, std::uint64_t cb) {
    const auto A = FiniteElem::from_code(2, 2, ca), B = FiniteElem::from_code(2, 2, cb);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        if ((A.get(i, 0) * B.get(0, j) + A.get(i, 1) * B.get(1, j)) % 2) return false;
    return true;
  };
  std::size_t oracle_count = 0;
  for (std::uint64_t ca = 1; ca < 16; ++ca)
    for (std::uint64_t cb = 1; cb < 16; ++cb)
      if (!zero_product(ca, cb) || !zero_product(cb, ca)) ++oracle_count;
  std::size_t eligible = 0;
  for (const auto& a : all)
    for (const auto& b : all) {
      const bool ok = !(a * b).is_zero() || !(b * a).is_zero();
      if (!ok) {
        EXPECT_THROW(theorem1_reduce(a, b), Error);
        continue;
      }
      ++eligible;
      const auto res = theorem1_reduce(a, b);
      const auto& R = res.reduction;
      const Block2 lhs = R.P * Block2::diag(a, b) * R.Q;
      EXPECT_EQ(lhs, Block2::diag(one_like(a), R.c));
      EXPECT_TRUE((R.P * R.Pinv).is_identity());
      EXPECT_TRUE((R.Q * R.Qinv).is_identity());
    }
  EXPECT_EQ(eligible, oracle_count);
}

TEST(Theorem1, Examples) {
  const FiniteElem one = FiniteElem::identity(2, 2);
  const auto r = theorem1_reduce(one, e(1, 2));
  EXPECT_TRUE(r.reduction.verify(one, e(1, 2)));
  EXPECT_TRUE(r.fast_path);
  const auto r2 = theorem1_reduce(e(1, 1), e(1, 2));
  EXPECT_TRUE(r2.reduction.verify(e(1, 1), e(1, 2)));
  const FiniteElem u = e(1, 2) + e(2, 1);
  EXPECT_TRUE(finite_unit(theorem1_reduce(u, one + e(1, 2)).reduction.c).is_unit);
  try {
    theorem1_reduce(e(1, 1), e(2, 2));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::BothProductsZero);
  }
}

TEST(Lemma2, WitnessSumsToOneByBruteForceCheck) {
  for (std::size_t k : {2u, 3u})
    for (const auto& a : nonzero(k, 2)) {
      const auto res = lemma2_witness(a);
      const FiniteElem target = res.which == Lemma2Case::A ? a : one_like(a) - a;
      EXPECT_EQ(res.witness.target, target);
      ASSERT_LE(res.witness.terms.size(), 2u);
      FiniteElem s = zero_like(a);
      for (const auto& [u, v] : res.witness.terms) s = s + u * target * v;
      EXPECT_EQ(s, one_like(a));
      EXPECT_TRUE(res.equivalence.verify(a));
      // whichever case fires, the brute-force oracle agrees a witness exists
      EXPECT_TRUE(oracle::brute_two_term(target));
    }
}

TEST(Lemma2, IdentityForcesCaseA) {
  EXPECT_EQ(lemma2_witness(FiniteElem::identity(2, 2)).which, Lemma2Case::A);
  EXPECT_THROW(lemma2_witness(FiniteElem::zero(2, 2)), Error);
}

TEST(Lemma5, M2F2) {
  std::size_t idem = 0;
  for (std::uint64_t c = 0; c < 16; ++c) {
    const auto x = FiniteElem::from_code(2, 2, c);
    if (x * x == x) ++idem;
  }
  EXPECT_EQ(idem, 8u);
  const auto rep = lemma5_scan(2, 2);
  EXPECT_EQ(rep.idempotent_count, idem);
  EXPECT_EQ(rep.rows.size(), 7u);
  for (const auto& row : rep.rows) {
    EXPECT_EQ(row.witness_e, oracle::brute_two_term(row.e));
    EXPECT_TRUE(row.witness_e);
  }
  EXPECT_TRUE(rep.every_nonzero_has_witness());
}

TEST(Lemma5, M3F2RawTable) {
  const auto rep = lemma5_scan(3, 2);
  EXPECT_EQ(rep.rows.size() + 1, rep.idempotent_count);
  for (const auto& row : rep.rows) {
    EXPECT_EQ(row.witness_e, row.rank >= 2);
    if (!row.witness_e) {
      EXPECT_TRUE(row.witness_one_minus_e);
    }
  }
  EXPECT_THROW(lemma5_scan(3, 3), Error);
}

TEST(BruteForce, AgreesWithOracle) {
  for (const auto& a : nonzero(2, 2)) EXPECT_EQ(brute_force_two_term(a).has_value(), oracle::brute_two_term(a));
}
