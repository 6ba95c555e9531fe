#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "orered/error.hpp"
#include "orered/ore_poly.hpp"

namespace orered {

/// Dense r x s matrix of Ore polynomials over a single context.
class OreMat {
 public:
  OreMat(OreContext ctx, std::size_t rows, std::size_t cols)
      : ctx_(ctx), rows_(rows), cols_(cols), v_(rows * cols, OrePoly(ctx)) {}

  static OreMat identity(OreContext ctx, std::size_t n) {
    OreMat m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = OrePoly::one(ctx);
    return m;
  }
  static OreMat from_rows(OreContext ctx, const std::vector<std::vector<OrePoly>>& rows) {
    if (rows.empty() || rows.front().empty()) fail(ErrorKind::DimensionMismatch, "matrix needs at least one entry");
    OreMat m(ctx, rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) fail(ErrorKind::DimensionMismatch, "ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) {
        if (!(rows[i][j].context() == ctx)) fail(ErrorKind::ContextMismatch, "entry in a different ring");
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }
  static OreMat diagonal(OreContext ctx, const std::vector<OrePoly>& d) {
    OreMat m(ctx, d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  const OreContext& context() const noexcept { return ctx_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  OrePoly& operator()(std::size_t i, std::size_t j) { return v_[i * cols_ + j]; }
  const OrePoly& operator()(std::size_t i, std::size_t j) const { return v_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& e : v_)
      if (!e.is_zero()) return false;
    return true;
  }
  bool is_identity() const { return rows_ == cols_ && *this == identity(ctx_, rows_); }

  OreMat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    OreMat b(ctx_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  friend OreMat operator*(const OreMat& a, const OreMat& b) {
    if (a.cols_ != b.rows_) fail(ErrorKind::DimensionMismatch, "inner dimensions differ");
    if (!(a.ctx_ == b.ctx_)) fail(ErrorKind::ContextMismatch, "matrices over different rings");
    OreMat r(a.ctx_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const OrePoly& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend bool operator==(const OreMat& a, const OreMat& b) {
    return a.ctx_ == b.ctx_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.v_ == b.v_;
  }

  int max_degree() const {
    int d = kZeroDegree;
    for (const auto& e : v_) d = std::max(d, e.degree());
    return d;
  }
  int max_coefficient_degree() const {
    int d = 0;
    for (const auto& e : v_) d = std::max(d, e.coefficient_degree());
    return d;
  }
  std::size_t bit_size() const {
    std::size_t s = 0;
    for (const auto& e : v_) s += e.bit_size();
    return s;
  }

 private:
  OreContext ctx_;
  std::size_t rows_, cols_;
  std::vector<OrePoly> v_;
};

inline OreMat mat_mul(const OreMat& a, const OreMat& b) { return a * b; }

}  // namespace orered
