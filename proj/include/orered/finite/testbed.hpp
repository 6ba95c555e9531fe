#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orered/error.hpp"
#include "orered/finite/finite_elem.hpp"
#include "orered/finite/fp_matrix.hpp"
#include "orered/witness.hpp"

namespace orered::finite {

using FiniteWitness = BasicWitness<FiniteElem>;
using FiniteSplitWitness = BasicSplitWitness<FiniteElem>;

/// 2x2 matrix over M_k(F_p), row-major.
struct Block2 {
  std::array<FiniteElem, 4> e;

  const FiniteElem& operator()(std::size_t i, std::size_t j) const { return e[2 * i + j]; }
  FiniteElem& operator()(std::size_t i, std::size_t j) { return e[2 * i + j]; }

  static Block2 make(FiniteElem a, FiniteElem b, FiniteElem c, FiniteElem d) {
    return {{std::move(a), std::move(b), std::move(c), std::move(d)}};
  }
  static Block2 diag(const FiniteElem& a, const FiniteElem& b) { return make(a, zero_like(a), zero_like(a), b); }
  static Block2 identity_like(const FiniteElem& a) { return diag(one_like(a), one_like(a)); }

  friend Block2 operator*(const Block2& x, const Block2& y) {
    Block2 r = x;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j);
    return r;
  }
  friend bool operator==(const Block2&, const Block2&) = default;

  bool is_identity() const { return *this == identity_like(e[0]); }

  /// The same matrix as a 2k x 2k matrix over F_p.
  FpMatrix to_fp() const {
    const std::size_t k = e[0].dim();
    FpMatrix m(2 * k, 2 * k, e[0].modulus());
    for (std::size_t bi = 0; bi < 2; ++bi)
      for (std::size_t bj = 0; bj < 2; ++bj)
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m(bi * k + i, bj * k + j) = (*this)(bi, bj).get(i, j);
    return m;
  }
  static Block2 from_fp(const FpMatrix& m) {
    const std::size_t k = m.rows() / 2;
    Block2 r = identity_like(FiniteElem::zero(k, m.modulus()));
    for (std::size_t bi = 0; bi < 2; ++bi)
      for (std::size_t bj = 0; bj < 2; ++bj) {
        FiniteElem x(k, m.modulus());
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) x.set(i, j, m(bi * k + i, bj * k + j));
        r(bi, bj) = x;
      }
    return r;
  }
};

inline std::optional<Block2> block_inverse(const Block2& m) {
  auto inv = inverse(m.to_fp());
  if (!inv) return std::nullopt;
  return Block2::from_fp(*inv);
}

// ---------------------------------------------------------------------------
// witnesses and stable range

/// Witness with ceil(k / rank a) terms from a rank decomposition
/// L a R = I_r (+) 0 and block-shifted copies of I_r.
inline FiniteWitness finite_witness(const FiniteElem& a) {
  if (a.is_zero()) fail(ErrorKind::ZeroTarget, "witness of zero");
  const std::size_t k = a.dim();
  const auto p = a.modulus();
  auto nf = rank_normal_form(a.to_fp());
  const std::size_t r = nf.rank;
  const FiniteElem L = FiniteElem::from_fp(nf.L), R = FiniteElem::from_fp(nf.R);

  FiniteWitness w{a, {}, r == k ? WitnessMethod::Unit : WitnessMethod::External, {}};
  const std::size_t blocks = (k + r - 1) / r;
  for (std::size_t j = 0; j < blocks; ++j) {
    const std::size_t len = std::min(r, k - j * r);
    FiniteElem left(k, p), right(k, p);
    for (std::size_t t = 0; t < len; ++t) {
      left.set(j * r + t, t, 1);
      right.set(t, j * r + t, 1);
    }
    if (j == 0) left = FiniteElem::identity(k, p);
    w.terms.emplace_back(left * L, R * right);
  }
  w.transcript.push_back("rank " + std::to_string(r) + " decomposition, " + std::to_string(blocks) + " block(s)");
  if (!witness_verify(w).ok) fail(ErrorKind::InvalidWitness, "finite witness failed to verify");
  return w;
}

/// Column spaces of a and b together span F_p^k, i.e. aR + bR = R.
inline bool is_unimodular_pair(const FiniteElem& a, const FiniteElem& b) {
  a.check(b);
  const std::size_t k = a.dim();
  FpMatrix m(k, 2 * k, a.modulus());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      m(i, j) = a.get(i, j);
      m(i, k + j) = b.get(i, j);
    }
  return rank(m) == k;
}

/// t with a + b*t a unit. t maps a basis of ker a onto vectors w with b*w
/// completing the column space of a, and kills a complement of ker a.
inline FiniteElem finite_sr1(const FiniteElem& a, const FiniteElem& b) {
  if (!is_unimodular_pair(a, b)) fail(ErrorKind::NotUnimodularPair, "aR + bR != R");
  const std::size_t k = a.dim();
  const auto p = a.modulus();
  auto nf = rank_normal_form(a.to_fp());
  const std::size_t r = nf.rank;
  if (r == k) return FiniteElem::zero(k, p);

  // greedily pick standard vectors e_j whose image under b leaves the span
  FpMatrix span = a.to_fp();
  std::size_t span_cols = k;
  std::vector<std::size_t> picks;
  for (std::size_t j = 0; j < k && picks.size() < k - r; ++j) {
    FpMatrix trial(k, span_cols + 1, p);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t c = 0; c < span_cols; ++c) trial(i, c) = span(i, c);
      trial(i, span_cols) = b.get(i, j);
    }
    if (rank(trial) > rank(span)) {
      picks.push_back(j);
      span = trial;
      ++span_cols;
    }
  }
  // t * R = N, with column r + i of N equal to e_{picks[i]}
  FpMatrix N(k, k, p);
  for (std::size_t i = 0; i < picks.size(); ++i) N(picks[i], r + i) = 1;
  auto Rinv = inverse(nf.R);
  FiniteElem t = FiniteElem::from_fp(N * *Rinv);
  if (!finite_unit(a + b * t).is_unit) fail(ErrorKind::InvalidWitness, "stable range step failed");
  return t;
}

// ---------------------------------------------------------------------------
// unitization and 2x2 reductions

struct UnitizationRecord {
  FiniteElem a, x, y, u;
  FiniteElem u1, u2, t, s, w1, w2;
  bool fast_path = false;

  bool verify() const { return a + x * a * y == u && finite_unit(u).is_unit; }
};

/// x, y with a + x a y a unit, following the stable-range argument literally:
/// t from (u2 a, u1 a), s from (u2, u1 a), x = w2^-1 u1, y = t - s a.
inline UnitizationRecord lemma3_unitize(const FiniteElem& a) {
  if (a.is_zero()) fail(ErrorKind::ZeroTarget, "unitize zero");
  const FiniteElem zero = zero_like(a);
  if (finite_unit(a).is_unit) return {a, zero, zero, a, zero, zero, zero, zero, a, one_like(a), true};

  FiniteWitness w = finite_witness(a);
  if (w.terms.size() > 2) fail(ErrorKind::NoTwoTermWitness, "element needs " + std::to_string(w.terms.size()) + " terms: " + a.to_string());
  const FiniteElem u1 = w.terms[0].first;
  const FiniteElem u2 = w.terms.size() > 1 ? w.terms[1].first : zero;

  UnitizationRecord rec{a, zero, zero, zero, u1, u2, zero, zero, zero, zero, false};
  rec.t = finite_sr1(u2 * a, u1 * a);
  rec.w1 = u1 * a * rec.t + u2 * a;
  rec.s = finite_sr1(u2, u1 * a);
  rec.w2 = u1 * a * rec.s + u2;
  rec.x = finite_inverse(rec.w2) * u1;
  rec.y = rec.t - rec.s * a;
  rec.u = finite_inverse(rec.w2) * rec.w1;
  if (!rec.verify()) fail(ErrorKind::InvalidWitness, "unitization failed for " + a.to_string());
  return rec;
}

/// P * diag(a, b) * Q = diag(1, c) with both transforms and inverses kept.
struct DiagonalReduction {
  Block2 P, Pinv, Q, Qinv;
  FiniteElem c;

  bool verify(const FiniteElem& a, const FiniteElem& b) const {
    return P * Block2::diag(a, b) * Q == Block2::diag(one_like(a), c) && (P * Pinv).is_identity() &&
           (Pinv * P).is_identity() && (Q * Qinv).is_identity() && (Qinv * Q).is_identity();
  }
};

namespace detail {

// Clears [[1, m], [n, a]] to diag(1, a - n m) by one row and one column step.
inline DiagonalReduction clear_corner(DiagonalReduction acc, const FiniteElem& m, const FiniteElem& n,
                                      const FiniteElem& corner) {
  const FiniteElem one = one_like(m), zero = zero_like(m);
  const Block2 row = Block2::make(one, zero, -n, one), row_inv = Block2::make(one, zero, n, one);
  const Block2 col = Block2::make(one, -m, zero, one), col_inv = Block2::make(one, m, zero, one);
  acc.P = row * acc.P;
  acc.Pinv = acc.Pinv * row_inv;
  acc.Q = acc.Q * col;
  acc.Qinv = col_inv * acc.Qinv;
  acc.c = corner - n * m;
  return acc;
}

}  // namespace detail

struct Lemma4Result {
  DiagonalReduction reduction;
  UnitizationRecord record;
};

/// diag(a, a) -> diag(1, b) via diag(u^-1, 1) [[1, x], [0, 1]] diag(a, a) [[1, 0], [y, 1]].
inline Lemma4Result lemma4_reduce(const FiniteElem& a) {
  UnitizationRecord rec = lemma3_unitize(a);
  const FiniteElem one = one_like(a), zero = zero_like(a);
  const FiniteElem uinv = finite_inverse(rec.u);
  DiagonalReduction acc;
  acc.P = Block2::diag(uinv, one) * Block2::make(one, rec.x, zero, one);
  acc.Pinv = Block2::make(one, -rec.x, zero, one) * Block2::diag(rec.u, one);
  acc.Q = Block2::make(one, zero, rec.y, one);
  acc.Qinv = Block2::make(one, zero, -rec.y, one);
  // current matrix is [[1, u^-1 x a], [a y, a]]
  acc = detail::clear_corner(std::move(acc), uinv * rec.x * a, a * rec.y, a);
  if (!acc.verify(a, a)) fail(ErrorKind::InvalidWitness, "lemma 4 reduction failed for " + a.to_string());
  return {std::move(acc), std::move(rec)};
}

struct Theorem1Result {
  DiagonalReduction reduction;
  bool mirrored = false;  // built for (b, a) and conjugated by the swap
  bool fast_path = false;
  FiniteElem x, y, w1, w2;
  std::optional<FiniteSplitWitness> split;
};

namespace detail {

inline Theorem1Result theorem1_forward(const FiniteElem& a, const FiniteElem& b) {
  const FiniteElem one = one_like(a), zero = zero_like(a);
  Theorem1Result res{{}, false, false, zero, zero, zero, zero, std::nullopt};
  if (finite_unit(a).is_unit) {
    res.fast_path = true;
    res.reduction = {Block2::diag(finite_inverse(a), one), Block2::diag(a, one), Block2::identity_like(a),
                     Block2::identity_like(a), b};
    return res;
  }
  FiniteWitness w = finite_witness(a * b);
  if (w.terms.size() > 2) fail(ErrorKind::NoTwoTermWitness, "product needs " + std::to_string(w.terms.size()) + " terms");
  FiniteSplitWitness split = product_split<FiniteElem>({a, b}, w);
  const FiniteElem& u1 = split.terms[0].first;
  const FiniteElem& u2 = split.terms[1].first;
  // u1 a R + u2 b R = R
  const FiniteElem t = finite_sr1(u2 * b, u1 * a);
  res.w1 = u1 * a * t + u2 * b;
  const FiniteElem s = finite_sr1(u2, u1 * a);
  res.w2 = u1 * a * s + u2;
  res.x = finite_inverse(res.w2) * u1;
  res.y = t - s * b;
  res.split = std::move(split);

  const FiniteElem scale = finite_inverse(res.w1) * res.w2;
  DiagonalReduction acc;
  acc.P = Block2::diag(scale, one) * Block2::make(res.x, one, one, zero);
  acc.Pinv = Block2::make(zero, one, one, -res.x) * Block2::diag(finite_inverse(scale), one);
  acc.Q = Block2::make(res.y, one, one, zero);
  acc.Qinv = Block2::make(zero, one, one, -res.y);
  // current matrix is [[1, w1^-1 w2 x a], [a y, a]]
  res.reduction = detail::clear_corner(std::move(acc), scale * res.x * a, a * res.y, a);
  return res;
}

}  // namespace detail

/// diag(a, b) -> diag(1, c) when ab != 0 or ba != 0.
inline Theorem1Result theorem1_reduce(const FiniteElem& a, const FiniteElem& b) {
  a.check(b);
  if (a.is_zero() || b.is_zero() || ((a * b).is_zero() && (b * a).is_zero()))
    fail(ErrorKind::BothProductsZero, "need ab != 0 or ba != 0");
  Theorem1Result res;
  auto forward_ok = [&](const FiniteElem& l, const FiniteElem& r) {
    return !(l * r).is_zero() && (finite_unit(l).is_unit || finite_witness(l * r).terms.size() <= 2);
  };
  if (forward_ok(a, b)) {
    res = detail::theorem1_forward(a, b);
  } else if (forward_ok(b, a)) {
    res = detail::theorem1_forward(b, a);
    const FiniteElem one = one_like(a), zero = zero_like(a);
    const Block2 swap = Block2::make(zero, one, one, zero);
    // swap diag(a, b) swap = diag(b, a)
    auto& r = res.reduction;
    r.P = r.P * swap;
    r.Pinv = swap * r.Pinv;
    r.Q = swap * r.Q;
    r.Qinv = r.Qinv * swap;
    res.mirrored = true;
  } else {
    fail(ErrorKind::NoTwoTermWitness, "neither ab nor ba has a two-term witness");
  }
  if (!res.reduction.verify(a, b)) fail(ErrorKind::InvalidWitness, "theorem 1 reduction failed");
  return res;
}

// ---------------------------------------------------------------------------
// the dichotomy of diag(a, a)

enum class Lemma2Case { A, OneMinusA };

/// diag(a, a) P = Q diag(z, b) with b = 0 or z a unit.
struct EquivalenceWitness {
  Block2 P, Pinv, Q, Qinv;
  FiniteElem z, b;
  Lemma2Case which = Lemma2Case::A;

  bool verify(const FiniteElem& a) const {
    const bool total_divisor = b.is_zero() || finite_unit(z).is_unit;
    return Block2::diag(a, a) * P == Q * Block2::diag(z, b) && (P * Pinv).is_identity() &&
           (Q * Qinv).is_identity() && total_divisor;
  }
};

struct Lemma2Result {
  Lemma2Case which = Lemma2Case::A;
  FiniteWitness witness;  // target a or 1 - a
  EquivalenceWitness equivalence;
};

/// The rank normal form of diag(a, a) over F_p has 2r leading ones; read as a
/// 2x2 block matrix that is diag(I, E_{2r-k}) when 2r >= k and diag(E_{2r}, 0)
/// otherwise, so exactly one of the two cases applies.
inline Lemma2Result lemma2_witness(const FiniteElem& a) {
  if (a.is_zero()) fail(ErrorKind::ZeroTarget, "lemma 2 for zero");
  const std::size_t k = a.dim();
  const Block2 A = Block2::diag(a, a);
  auto nf = rank_normal_form(A.to_fp());
  // L A R = N  =>  A R = L^-1 N
  EquivalenceWitness eq;
  eq.P = Block2::from_fp(nf.R);
  eq.Pinv = Block2::from_fp(*inverse(nf.R));
  eq.Q = Block2::from_fp(*inverse(nf.L));
  eq.Qinv = Block2::from_fp(nf.L);
  FpMatrix n(2 * k, 2 * k, a.modulus());
  for (std::size_t i = 0; i < nf.rank; ++i) n(i, i) = 1;
  const Block2 N = Block2::from_fp(n);
  eq.z = N(0, 0);
  eq.b = N(1, 1);

  Lemma2Result res;
  if (nf.rank >= k) {  // nf.rank = 2 rank(a)
    // z = 1: a p11 = q11, a p21 = q21, and row 1 of Q^-1 combines them to 1
    eq.which = Lemma2Case::A;
    res.witness = {a, {{eq.Qinv(0, 0), eq.P(0, 0)}, {eq.Qinv(0, 1), eq.P(1, 0)}}, WitnessMethod::External,
                   {"z is a unit; first column of Q"}};
  } else {
    // b = 0: a p12 = a p22 = 0, so (1 - a) fixes column 2 of P
    eq.which = Lemma2Case::OneMinusA;
    const FiniteElem one_minus = one_like(a) - a;
    res.witness = {one_minus, {{eq.Pinv(1, 0), eq.P(0, 1)}, {eq.Pinv(1, 1), eq.P(1, 1)}}, WitnessMethod::External,
                   {"b = 0; second column of P"}};
  }
  res.which = eq.which;
  res.equivalence = std::move(eq);
  if (!res.equivalence.verify(a)) fail(ErrorKind::InvalidWitness, "lemma 2 equivalence failed");
  if (!witness_verify(res.witness).ok) fail(ErrorKind::InvalidWitness, "lemma 2 witness failed");
  return res;
}

// ---------------------------------------------------------------------------
// exhaustive search

/// Exhaustive search for u1 a v1 + u2 a v2 = 1. Builds the set {u a v}
/// with one representative pair per element, then looks for s with 1 - s
/// also in the set.
inline std::optional<FiniteWitness> brute_force_two_term(const FiniteElem& a) {
  const std::size_t k = a.dim();
  const auto p = a.modulus();
  const std::uint64_t n = FiniteElem::ring_size(k, p);
  if (n > 100000) fail(ErrorKind::RingTooLarge, "ring too large for exhaustive search");
  std::vector<std::int64_t> seen_left(n, -1);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> rep(n, {UINT32_MAX, UINT32_MAX});
  for (std::uint64_t uc = 0; uc < n; ++uc) {
    const FiniteElem u = FiniteElem::from_code(k, p, uc);
    const FiniteElem ua = u * a;
    const auto uac = ua.code();
    if (seen_left[uac] >= 0) continue;
    seen_left[uac] = static_cast<std::int64_t>(uc);
    for (std::uint64_t vc = 0; vc < n; ++vc) {
      const auto s = (ua * FiniteElem::from_code(k, p, vc)).code();
      if (rep[s].first == UINT32_MAX) rep[s] = {static_cast<std::uint32_t>(uc), static_cast<std::uint32_t>(vc)};
    }
  }
  const FiniteElem one = one_like(a);
  for (std::uint64_t s = 0; s < n; ++s) {
    if (rep[s].first == UINT32_MAX) continue;
    const auto rest = (one - FiniteElem::from_code(k, p, s)).code();
    if (rep[rest].first == UINT32_MAX) continue;
    FiniteWitness w{a,
                    {{FiniteElem::from_code(k, p, rep[s].first), FiniteElem::from_code(k, p, rep[s].second)},
                     {FiniteElem::from_code(k, p, rep[rest].first), FiniteElem::from_code(k, p, rep[rest].second)}},
                    WitnessMethod::External,
                    {"exhaustive search"}};
    return w;
  }
  return std::nullopt;
}

struct IdempotentRow {
  FiniteElem e;
  std::size_t rank = 0;
  bool witness_e = false;
  bool witness_one_minus_e = false;
  Lemma2Case lemma2_case = Lemma2Case::A;
};

struct Lemma5Report {
  std::size_t k = 0;
  std::uint32_t p = 0;
  std::size_t idempotent_count = 0;
  std::vector<IdempotentRow> rows;  // nonzero idempotents only

  bool every_nonzero_has_witness() const {
    for (const auto& r : rows)
      if (!r.witness_e) return false;
    return true;
  }
  /// At least one of e, 1 - e carries a two-term witness, for every row.
  bool dichotomy_held() const {
    for (const auto& r : rows)
      if (!r.witness_e && !r.witness_one_minus_e) return false;
    return true;
  }
};

inline bool lemma5_ring_allowed(std::size_t k, std::uint32_t p) {
  return (k == 2 && (p == 2 || p == 3)) || (k == 3 && p == 2);
}

inline Lemma5Report lemma5_scan(std::size_t k, std::uint32_t p) {
  if (!lemma5_ring_allowed(k, p)) fail(ErrorKind::RingTooLarge, "lemma 5 scan supports M2(F2), M2(F3), M3(F2)");
  Lemma5Report report{k, p, 0, {}};
  const std::uint64_t n = FiniteElem::ring_size(k, p);
  const FiniteElem one = FiniteElem::identity(k, p);
  for (std::uint64_t c = 0; c < n; ++c) {
    const FiniteElem e = FiniteElem::from_code(k, p, c);
    if (!(e * e == e)) continue;
    ++report.idempotent_count;
    if (e.is_zero()) continue;
    IdempotentRow row{e, e.rank(), false, false, Lemma2Case::A};
    row.witness_e = brute_force_two_term(e).has_value();
    const FiniteElem f = one - e;
    row.witness_one_minus_e = !f.is_zero() && brute_force_two_term(f).has_value();
    row.lemma2_case = lemma2_witness(e).which;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace orered::finite
