#pragma once

#include <cstddef>
#include <vector>

#include "orered/format.hpp"
#include "orered/matrix/hermite.hpp"

namespace orered {

enum class VectorKind { Row, Column };

/// Raised when the entries of a vector do not generate the ring; carries the
/// terminal gcd as the obstruction.
class NotUnimodularError : public Error {
 public:
  explicit NotUnimodularError(OrePoly obstruction)
      : Error(ErrorKind::NotUnimodular, "terminal gcd " + print_ore(obstruction) + " is not a unit"),
        obstruction_(std::move(obstruction)) {}
  const OrePoly& obstruction() const noexcept { return obstruction_; }

 private:
  OrePoly obstruction_;
};

/// Elementary operations taking v to the first standard basis vector: column
/// operations (left division) for a row, row operations (right division) for
/// a column.
inline TransformTrace reduce_to_basis_vector(const std::vector<OrePoly>& v, VectorKind kind) {
  if (v.empty()) fail(ErrorKind::DimensionMismatch, "empty vector");
  const OreContext ctx = v.front().context();
  const std::size_t n = v.size();
  const bool row = kind == VectorKind::Row;
  OreMat m = row ? OreMat(ctx, 1, n) : OreMat(ctx, n, 1);
  auto at = [&](std::size_t i) -> OrePoly& { return row ? m(0, i) : m(i, 0); };
  for (std::size_t i = 0; i < n; ++i) at(i) = v[i];

  const OpSide side = row ? OpSide::Right : OpSide::Left;
  TransformTrace trace;
  for (;;) {
    auto piv = detail::min_degree_index(0, n, [&](std::size_t i) -> const OrePoly& { return at(i); });
    if (!piv) throw NotUnimodularError(OrePoly(ctx));
    bool single = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == *piv || at(i).is_zero()) continue;
      single = false;
      DivResult d = ore_divmod(at(i), at(*piv), row ? DivSide::Left : DivSide::Right);
      detail::push_apply(trace, m, ElementaryOp::add(side, i, *piv, -d.q));
    }
    if (!single) continue;
    if (*piv != 0) detail::push_apply(trace, m, ElementaryOp::swap(side, 0, *piv, ctx));
    const OrePoly g = at(0);
    if (!g.is_unit()) throw NotUnimodularError(g);
    if (!g.is_one()) detail::push_apply(trace, m, ElementaryOp::scale(side, 0, OrePoly(ctx, g.lc().inverse())));
    return trace;
  }
}

struct Completion {
  OreMat M, Minv;
  TransformTrace reduction;  // takes v to e_1
};

/// Invertible M whose first row (row case) or first column (column case) is v.
inline Completion complete_unimodular(const std::vector<OrePoly>& v, VectorKind kind) {
  const OreContext ctx = v.front().context();
  TransformTrace t = reduce_to_basis_vector(v, kind);
  if (kind == VectorKind::Row) {
    // v * G = e_1  =>  M = G^-1 has first row v
    auto g = t.materialize_right(ctx, v.size());
    return {std::move(g.Minv), std::move(g.M), std::move(t)};
  }
  // H * v = e_1  =>  M = H^-1 has first column v
  auto h = t.materialize_left(ctx, v.size());
  return {std::move(h.Minv), std::move(h.M), std::move(t)};
}

}  // namespace orered
