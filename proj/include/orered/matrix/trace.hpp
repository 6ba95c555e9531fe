#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "orered/error.hpp"
#include "orered/matrix/ore_mat.hpp"

namespace orered {

enum class OpSide { Left, Right };
enum class OpKind { Swap, AddMultiple, Scale };

/// One elementary transformation.
///   Left:  Swap rows (target, source); row_target += factor * row_source;
///          row_target = factor * row_target.
///   Right: Swap cols (target, source); col_target += col_source * factor;
///          col_target = col_target * factor.
/// Scale factors are units (nonzero degree 0).
struct ElementaryOp {
  OpSide side;
  OpKind kind;
  std::size_t target;
  std::size_t source;
  OrePoly factor;

  static ElementaryOp swap(OpSide side, std::size_t i, std::size_t j, OreContext ctx) {
    return {side, OpKind::Swap, i, j, OrePoly(ctx)};
  }
  static ElementaryOp add(OpSide side, std::size_t target, std::size_t source, OrePoly q) {
    if (target == source) fail(ErrorKind::DimensionMismatch, "add-multiple needs distinct indices");
    return {side, OpKind::AddMultiple, target, source, std::move(q)};
  }
  static ElementaryOp scale(OpSide side, std::size_t i, OrePoly unit) {
    if (!unit.is_unit()) fail(ErrorKind::DivisionByZero, "scale factor must be a unit");
    return {side, OpKind::Scale, i, i, std::move(unit)};
  }

  ElementaryOp inverse() const {
    switch (kind) {
      case OpKind::Swap: return *this;
      case OpKind::AddMultiple: return {side, kind, target, source, -factor};
      case OpKind::Scale: return {side, kind, target, source, OrePoly(factor.context(), factor.lc().inverse())};
    }
    return *this;
  }

  /// The same matrix acting from the other side, inverted: for a left op E
  /// returns the right op R with M*R = M*E^-1, and vice versa.
  ElementaryOp inverse_on_other_side() const {
    const OpSide other = side == OpSide::Left ? OpSide::Right : OpSide::Left;
    switch (kind) {
      case OpKind::Swap: return {other, kind, target, source, factor};
      // E = I + q e_{target,source};  E^-1 = I - q e_{target,source}
      case OpKind::AddMultiple: return {other, kind, source, target, -factor};
      case OpKind::Scale: return {other, kind, target, source, OrePoly(factor.context(), factor.lc().inverse())};
    }
    return *this;
  }

  void apply(OreMat& m) const {
    if (side == OpSide::Left) {
      switch (kind) {
        case OpKind::Swap:
          for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(target, c), m(source, c));
          break;
        case OpKind::AddMultiple:
          for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m(source, c).is_zero()) m(target, c) += factor * m(source, c);
          break;
        case OpKind::Scale:
          for (std::size_t c = 0; c < m.cols(); ++c) m(target, c) = factor * m(target, c);
          break;
      }
    } else {
      switch (kind) {
        case OpKind::Swap:
          for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, target), m(r, source));
          break;
        case OpKind::AddMultiple:
          for (std::size_t r = 0; r < m.rows(); ++r)
            if (!m(r, source).is_zero()) m(r, target) += m(r, source) * factor;
          break;
        case OpKind::Scale:
          for (std::size_t r = 0; r < m.rows(); ++r) m(r, target) = m(r, target) * factor;
          break;
      }
    }
  }
};

/// Ordered elementary operations. Left ops accumulate into P (P*A), right ops
/// into Q (A*Q); nothing is multiplied out until materialize().
class TransformTrace {
 public:
  void push(ElementaryOp op) { ops_.push_back(std::move(op)); }
  void append(const TransformTrace& other) { ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end()); }

  const std::vector<ElementaryOp>& ops() const noexcept { return ops_; }
  std::size_t size() const noexcept { return ops_.size(); }
  bool empty() const noexcept { return ops_.empty(); }

  /// Applies the whole trace: P * m * Q.
  void apply(OreMat& m) const {
    for (const auto& op : ops_) op.apply(m);
  }
  /// Undoes the trace: P^-1 * m * Q^-1.
  void apply_inverse(OreMat& m) const {
    for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) it->inverse().apply(m);
  }

  struct Transform {
    OreMat M, Minv;
  };

  /// P = E_n ... E_1 and P^-1 = E_1^-1 ... E_n^-1 from the left ops.
  Transform materialize_left(OreContext ctx, std::size_t n) const {
    Transform t{OreMat::identity(ctx, n), OreMat::identity(ctx, n)};
    for (const auto& op : ops_) {
      if (op.side != OpSide::Left) continue;
      op.apply(t.M);
      op.inverse_on_other_side().apply(t.Minv);
    }
    return t;
  }
  /// Q = F_1 ... F_n and Q^-1 = F_n^-1 ... F_1^-1 from the right ops.
  Transform materialize_right(OreContext ctx, std::size_t n) const {
    Transform t{OreMat::identity(ctx, n), OreMat::identity(ctx, n)};
    for (const auto& op : ops_) {
      if (op.side != OpSide::Right) continue;
      op.apply(t.M);
      op.inverse_on_other_side().apply(t.Minv);
    }
    return t;
  }

  std::size_t count(OpSide side) const {
    std::size_t n = 0;
    for (const auto& op : ops_) n += op.side == side;
    return n;
  }

 private:
  std::vector<ElementaryOp> ops_;
};

}  // namespace orered
