#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orered/format.hpp"
#include "orered/matrix/hermite.hpp"
#include "orered/matrix/ore_mat.hpp"
#include "orered/matrix/trace.hpp"
#include "orered/matrix/unimodular.hpp"
#include "orered/ore_euclid.hpp"
#include "orered/ore_witness.hpp"

namespace orered {

/// A * T = D with D diagonal and every diagonal entry nonzero. T need not be
/// invertible.
struct DiagonalMultiple {
  OreMat T, D;
};

/// Column Hermite A*U = L (lower triangular), then per column j forward
/// substitution L t = e_j d_j. Whenever a left division is inexact the
/// column found so far is right-scaled through an lcrm.
inline DiagonalMultiple diagonal_multiple(const OreMat& A) {
  const OreContext ctx = A.context();
  const std::size_t m = A.rows();
  if (A.cols() != m) fail(ErrorKind::NotFull, "diagonal multiple needs a square matrix");
  HermiteResult h = hermite_form(A, HermiteSide::Column);
  if (h.pivots.size() != m) fail(ErrorKind::NotFull, "matrix has rank " + std::to_string(h.pivots.size()));
  const OreMat& L = h.H;
  OreMat Tpp(ctx, m, m);
  std::vector<OrePoly> d(m, OrePoly(ctx));
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<OrePoly> t(m, OrePoly(ctx));
    t[j] = OrePoly::one(ctx);
    OrePoly dj = L(j, j);
    for (std::size_t i = j + 1; i < m; ++i) {
      OrePoly rhs(ctx);
      for (std::size_t k = j; k < i; ++k)
        if (!L(i, k).is_zero() && !t[k].is_zero()) rhs -= L(i, k) * t[k];
      if (rhs.is_zero()) continue;
      DivResult q = ore_divmod(rhs, L(i, i), DivSide::Left);
      if (q.r.is_zero()) {
        t[i] = std::move(q.q);
        continue;
      }
      // L_ii * alpha = rhs * beta
      LcmResult l = ore_lcm(L(i, i), rhs, LcmSide::Lcrm);
      for (std::size_t k = j; k < i; ++k)
        if (!t[k].is_zero()) t[k] = t[k] * l.t;
      dj = dj * l.t;
      t[i] = std::move(l.s);
    }
    for (std::size_t i = 0; i < m; ++i) Tpp(i, j) = std::move(t[i]);
    d[j] = std::move(dj);
  }
  OreMat U = h.trace.materialize_right(ctx, m).M;
  DiagonalMultiple res{U * Tpp, OreMat::diagonal(ctx, d)};
  if (!(A * res.T == res.D)) fail(ErrorKind::InvalidWitness, "diagonal multiple failed to verify");
  return res;
}

/// Audit record of one peeling step.
struct StepRecord {
  std::size_t offset = 0;
  std::size_t size = 0;
  bool fast_path = false;
  bool unit_entry = false;  // fast path taken on a unit entry of the block; diagonal left empty
  std::size_t unit_index = 0;
  std::vector<OrePoly> diagonal;  // epsilon_i
  std::optional<Witness> witness;
  std::optional<SplitWitness> split;
  std::vector<OrePoly> u, w;  // u * A * w = 1
};

class WitnessTooLongError : public Error {
 public:
  WitnessTooLongError(const std::string& what, std::vector<StepRecord> partial)
      : Error(ErrorKind::WitnessTooLong, what), partial_(std::move(partial)) {}
  const std::vector<StepRecord>& partial() const noexcept { return partial_; }

 private:
  std::vector<StepRecord> partial_;
};

namespace detail {

/// Working matrix with the invariant P * A * Q = M, P and Q held as a trace.
struct Reducer {
  OreMat M;
  TransformTrace trace;
  std::vector<StepRecord> steps;

  void apply(ElementaryOp op) {
    op.apply(M);
    trace.push(std::move(op));
  }
  void apply_shifted(ElementaryOp op, std::size_t offset) {
    op.target += offset;
    op.source += offset;
    apply(std::move(op));
  }
};

// One peeling step on the full block M[off.., off..] of size s:
// afterwards M[off][off] = 1 and the rest of that row and column is zero.
inline void peel_one(Reducer& red, std::size_t off, std::size_t s, const SearchPolicy& policy) {
  const OreContext ctx = red.M.context();
  const OreMat A = red.M.block(off, off, s, s);
  StepRecord rec;
  rec.offset = off;
  rec.size = s;
  std::vector<OrePoly> u(s, OrePoly(ctx)), w(s, OrePoly(ctx));

  // a unit entry A(i, j) gives u = e_i, w = e_j A(i, j)^-1 directly
  std::optional<std::pair<std::size_t, std::size_t>> entry;
  for (std::size_t i = 0; i < s && !entry; ++i)
    for (std::size_t j = 0; j < s && !entry; ++j)
      if (A(i, j).is_unit()) entry.emplace(i, j);

  std::optional<DiagonalMultiple> dm;
  if (!entry) {
    dm = diagonal_multiple(A);
    for (std::size_t i = 0; i < s; ++i) rec.diagonal.push_back(dm->D(i, i));
  }
  std::optional<std::size_t> unit;
  for (std::size_t i = 0; i < rec.diagonal.size() && !unit; ++i)
    if (rec.diagonal[i].is_unit()) unit = i;
  if (entry) {
    rec.fast_path = rec.unit_entry = true;
    rec.unit_index = entry->first;
    u[entry->first] = OrePoly::one(ctx);
    w[entry->second] = OrePoly(ctx, A(entry->first, entry->second).lc().inverse());
  } else if (unit) {
    rec.fast_path = true;
    rec.unit_index = *unit;
    u[*unit] = OrePoly::one(ctx);
    const OrePoly inv(ctx, dm->D(*unit, *unit).lc().inverse());
    for (std::size_t i = 0; i < s; ++i) w[i] = dm->T(i, *unit) * inv;
  } else {
    OrePoly p = OrePoly::one(ctx);
    for (const auto& e : rec.diagonal) p = p * e;
    Witness wit = [&] {
      try {
        return two_term_witness(p, policy);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::SearchExhausted) throw;
        return commutator_witness(p);
      }
    }();
    if (wit.nonzero_terms() > s) {
      red.steps.push_back(rec);
      throw WitnessTooLongError("witness for the diagonal product needs " + std::to_string(wit.nonzero_terms()) +
                                    " terms, block size is " + std::to_string(s),
                                red.steps);
    }
    SplitWitness split = product_split(rec.diagonal, wit);
    for (std::size_t i = 0; i < s; ++i) u[i] = split.terms[i].first;
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t k = 0; k < s; ++k)
        if (!dm->T(i, k).is_zero() && !split.terms[k].second.is_zero()) w[i] += dm->T(i, k) * split.terms[k].second;
    rec.witness = std::move(wit);
    rec.split = std::move(split);
  }

  OrePoly uaw(ctx);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      if (!u[i].is_zero() && !A(i, j).is_zero() && !w[j].is_zero()) uaw += u[i] * A(i, j) * w[j];
  if (!uaw.is_one()) fail(ErrorKind::InvalidWitness, "u*A*w = " + print_ore(uaw) + ", expected 1");
  rec.u = u;
  rec.w = w;

  // U = G^-1 where u*G = e_1; W = H^-1 where H*w = e_1
  const TransformTrace to_row_basis = reduce_to_basis_vector(u, VectorKind::Row);
  const TransformTrace to_col_basis = reduce_to_basis_vector(w, VectorKind::Column);
  for (const auto& op : to_row_basis.ops()) red.apply_shifted(op.inverse_on_other_side(), off);
  for (const auto& op : to_col_basis.ops()) red.apply_shifted(op.inverse_on_other_side(), off);
  if (!red.M(off, off).is_one()) fail(ErrorKind::InvalidWitness, "completed corner is not 1");

  for (std::size_t i = 1; i < s; ++i)
    if (!red.M(off + i, off).is_zero()) red.apply(ElementaryOp::add(OpSide::Left, off + i, off, -red.M(off + i, off)));
  for (std::size_t j = 1; j < s; ++j)
    if (!red.M(off, off + j).is_zero()) red.apply(ElementaryOp::add(OpSide::Right, off + j, off, -red.M(off, off + j)));
  red.steps.push_back(std::move(rec));
}

// Row then column Hermite on the trailing s x s block, which the previous
// peel leaves with large entries.
inline void rehermite_block(Reducer& red, std::size_t off, std::size_t s) {
  for (auto side : {HermiteSide::Row, HermiteSide::Column}) {
    const HermiteResult h = hermite_form(red.M.block(off, off, s, s), side);
    for (const auto& op : h.trace.ops()) red.apply_shifted(op, off);
  }
}

inline void require_differential(const OreContext& ctx) {
  if (!ctx.is_simple()) fail(ErrorKind::NotSimpleContext, "reduction needs the differential ring");
}

}  // namespace detail

struct Theorem3Step {
  OreMat U, Uinv, W, Winv, A0;
  StepRecord record;
};

/// U * A * W = 1 (+) A0 for a full square A of size >= 2.
inline Theorem3Step theorem3_step(const OreMat& A, const SearchPolicy& policy = {}) {
  detail::require_differential(A.context());
  const std::size_t m = A.rows();
  if (A.cols() != m || m < 2) fail(ErrorKind::DimensionMismatch, "theorem3_step needs a square matrix of size >= 2");
  if (mat_rank(A) != m) fail(ErrorKind::NotFull, "matrix is not full");
  detail::Reducer red{A, {}, {}};
  detail::peel_one(red, 0, m, policy);
  auto left = red.trace.materialize_left(A.context(), m);
  auto right = red.trace.materialize_right(A.context(), m);
  return {std::move(left.M), std::move(left.Minv), std::move(right.M), std::move(right.Minv),
          red.M.block(1, 1, m - 1, m - 1), std::move(red.steps.back())};
}

struct CertificateStats {
  std::size_t left_ops = 0;
  std::size_t right_ops = 0;
  int max_degree_P = 0;
  int max_degree_Q = 0;
  int max_coefficient_degree = 0;
  std::size_t bits = 0;
};

/// Claim P * A * Q = D with explicit inverses and the audit trail.
struct ReductionCertificate {
  OreMat A, P, Pinv, Q, Qinv, D;
  std::vector<StepRecord> steps;
  CertificateStats stats;
};

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> failures;

  void require(bool cond, std::string what) {
    if (!cond) {
      ok = false;
      failures.push_back(std::move(what));
    }
  }
};

/// Number of leading nonzero diagonal entries of a Jacobson-shaped D.
inline std::size_t diagonal_rank(const OreMat& D) {
  std::size_t r = 0;
  while (r < std::min(D.rows(), D.cols()) && !D(r, r).is_zero()) ++r;
  return r;
}

inline VerifyReport certificate_verify(const ReductionCertificate& c) {
  VerifyReport rep;
  const std::size_t m = c.A.rows(), n = c.A.cols();
  const bool dims = c.P.rows() == m && c.P.cols() == m && c.Pinv.rows() == m && c.Pinv.cols() == m &&
                    c.Q.rows() == n && c.Q.cols() == n && c.Qinv.rows() == n && c.Qinv.cols() == n &&
                    c.D.rows() == m && c.D.cols() == n;
  rep.require(dims, "dimensions");
  if (!dims) return rep;
  const OreContext ctx = c.A.context();
  rep.require(c.P * c.Pinv == OreMat::identity(ctx, m), "P * Pinv != I");
  rep.require(c.Pinv * c.P == OreMat::identity(ctx, m), "Pinv * P != I");
  rep.require(c.Q * c.Qinv == OreMat::identity(ctx, n), "Q * Qinv != I");
  rep.require(c.Qinv * c.Q == OreMat::identity(ctx, n), "Qinv * Q != I");
  rep.require(c.P * c.A * c.Q == c.D, "P * A * Q != D");

  const std::size_t r = diagonal_rank(c.D);
  bool shape = true;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const OrePoly& e = c.D(i, j);
      if (i != j || i >= r) shape = shape && e.is_zero();
      else if (i + 1 < r) shape = shape && e.is_one();
      else shape = shape && e.is_monic();
    }
  rep.require(shape, "D is not diag(1, ..., 1, f) (+) 0 with f monic");
  if (shape && m == n && r == n && n > 0)
    rep.require(c.D(n - 1, n - 1).degree() == hermite_pivot_degree(c.A), "deg f differs from the Hermite pivot degree sum");
  return rep;
}

/// P * A * Q = diag(1, ..., 1, f) (+) 0 with f monic: Hermite on both sides
/// isolates a full r x r core, then peeling steps strip one unit corner each.
inline ReductionCertificate jacobson_form(const OreMat& A, const SearchPolicy& policy = {}) {
  const OreContext ctx = A.context();
  detail::require_differential(ctx);
  detail::Reducer red{A, {}, {}};
  HermiteResult rows = hermite_form(red.M, HermiteSide::Row);
  red.trace.append(rows.trace);
  HermiteResult cols = hermite_form(rows.H, HermiteSide::Column);
  red.trace.append(cols.trace);
  red.M = std::move(cols.H);
  const std::size_t r = rows.pivots.size();

  for (std::size_t off = 0; off + 1 < r; ++off) {
    if (off > 0) detail::rehermite_block(red, off, r - off);
    detail::peel_one(red, off, r - off, policy);
  }
  if (r > 0 && !red.M(r - 1, r - 1).is_monic())
    red.apply(ElementaryOp::scale(OpSide::Left, r - 1, OrePoly(ctx, red.M(r - 1, r - 1).lc().inverse())));

  auto left = red.trace.materialize_left(ctx, A.rows());
  auto right = red.trace.materialize_right(ctx, A.cols());
  ReductionCertificate cert{A,        std::move(left.M),  std::move(left.Minv), std::move(right.M),
                            std::move(right.Minv), std::move(red.M), std::move(red.steps), {}};
  cert.stats.left_ops = red.trace.count(OpSide::Left);
  cert.stats.right_ops = red.trace.count(OpSide::Right);
  cert.stats.max_degree_P = std::max(0, cert.P.max_degree());
  cert.stats.max_degree_Q = std::max(0, cert.Q.max_degree());
  cert.stats.max_coefficient_degree = std::max(cert.P.max_coefficient_degree(), cert.Q.max_coefficient_degree());
  cert.stats.bits = cert.P.bit_size() + cert.Pinv.bit_size() + cert.Q.bit_size() + cert.Qinv.bit_size();
  auto rep = certificate_verify(cert);
  if (!rep.ok) fail(ErrorKind::InvalidWitness, "certificate failed: " + rep.failures.front());
  return cert;
}

}  // namespace orered
