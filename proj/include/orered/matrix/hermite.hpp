#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "orered/matrix/ore_mat.hpp"
#include "orered/matrix/trace.hpp"
#include "orered/ore_euclid.hpp"

namespace orered {

enum class HermiteSide { Row, Column };

struct HermiteResult {
  TransformTrace trace;
  OreMat H;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
};

namespace detail {

// Index in [from, n) of a nonzero entry of least degree, preferring `from`.
template <class Get>
std::optional<std::size_t> min_degree_index(std::size_t from, std::size_t n, Get get) {
  std::optional<std::size_t> best;
  for (std::size_t i = from; i < n; ++i) {
    const OrePoly& e = get(i);
    if (e.is_zero()) continue;
    if (!best || e.degree() < get(*best).degree()) best = i;
  }
  return best;
}

inline void push_apply(TransformTrace& trace, OreMat& m, ElementaryOp op) {
  op.apply(m);
  trace.push(std::move(op));
}

}  // namespace detail

/// Row side: P*A = H upper echelon with monic pivots, by row operations and
/// right division (each pivot is the gcrd of its column segment).
/// Column side: A*Q = H lower echelon, by column operations and left division.
/// Entries above (left of) pivots are not reduced.
inline HermiteResult hermite_form(const OreMat& A, HermiteSide side) {
  const OreContext ctx = A.context();
  HermiteResult res{{}, A, {}};
  OreMat& M = res.H;
  if (side == HermiteSide::Row) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
      for (;;) {
        auto piv = detail::min_degree_index(r, M.rows(), [&](std::size_t i) -> const OrePoly& { return M(i, c); });
        if (!piv) break;
        if (*piv != r) detail::push_apply(res.trace, M, ElementaryOp::swap(OpSide::Left, r, *piv, ctx));
        bool reduced = true;
        for (std::size_t i = r + 1; i < M.rows(); ++i) {
          if (M(i, c).is_zero()) continue;
          DivResult d = ore_divmod(M(i, c), M(r, c), DivSide::Right);
          detail::push_apply(res.trace, M, ElementaryOp::add(OpSide::Left, i, r, -d.q));
          if (M(i, c).is_zero()) continue;
          reduced = false;
          // a monic remainder keeps coefficient growth down
          if (!M(i, c).is_monic())
            detail::push_apply(res.trace, M, ElementaryOp::scale(OpSide::Left, i, OrePoly(ctx, M(i, c).lc().inverse())));
        }
        if (reduced) break;
      }
      if (M(r, c).is_zero()) continue;
      if (!M(r, c).is_monic())
        detail::push_apply(res.trace, M, ElementaryOp::scale(OpSide::Left, r, OrePoly(ctx, M(r, c).lc().inverse())));
      res.pivots.emplace_back(r, c);
      ++r;
    }
  } else {
    std::size_t c = 0;
    for (std::size_t r = 0; r < M.rows() && c < M.cols(); ++r) {
      for (;;) {
        auto piv = detail::min_degree_index(c, M.cols(), [&](std::size_t j) -> const OrePoly& { return M(r, j); });
        if (!piv) break;
        if (*piv != c) detail::push_apply(res.trace, M, ElementaryOp::swap(OpSide::Right, c, *piv, ctx));
        bool reduced = true;
        for (std::size_t j = c + 1; j < M.cols(); ++j) {
          if (M(r, j).is_zero()) continue;
          DivResult d = ore_divmod(M(r, j), M(r, c), DivSide::Left);
          detail::push_apply(res.trace, M, ElementaryOp::add(OpSide::Right, j, c, -d.q));
          if (M(r, j).is_zero()) continue;
          reduced = false;
          if (!M(r, j).is_monic())
            detail::push_apply(res.trace, M, ElementaryOp::scale(OpSide::Right, j, detail::right_monic_unit(M(r, j))));
        }
        if (reduced) break;
      }
      if (M(r, c).is_zero()) continue;
      if (!M(r, c).is_monic())
        detail::push_apply(res.trace, M, ElementaryOp::scale(OpSide::Right, c, detail::right_monic_unit(M(r, c))));
      res.pivots.emplace_back(r, c);
      ++c;
    }
  }
  return res;
}

inline std::size_t mat_rank(const OreMat& A) { return hermite_form(A, HermiteSide::Row).pivots.size(); }

/// Sum of the D-degrees of the row-Hermite pivots.
inline int hermite_pivot_degree(const OreMat& A) {
  auto h = hermite_form(A, HermiteSide::Row);
  int sum = 0;
  for (auto [r, c] : h.pivots) sum += h.H(r, c).degree();
  return sum;
}

}  // namespace orered
