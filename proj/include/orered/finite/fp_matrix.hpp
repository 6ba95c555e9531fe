#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "orered/error.hpp"
#include "orered/prime_field.hpp"

namespace orered::finite {

/// Dense rectangular matrix over F_p, entries stored reduced.
class FpMatrix {
 public:
  using value_type = std::uint32_t;

  FpMatrix(std::size_t rows, std::size_t cols, value_type p) : rows_(rows), cols_(cols), p_(p), v_(rows * cols) {}

  static FpMatrix identity(std::size_t n, value_type p) {
    FpMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  value_type modulus() const noexcept { return p_; }

  value_type& operator()(std::size_t i, std::size_t j) { return v_[i * cols_ + j]; }
  value_type operator()(std::size_t i, std::size_t j) const { return v_[i * cols_ + j]; }

  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
    if (a.cols_ != b.rows_ || a.p_ != b.p_) fail(ErrorKind::DimensionMismatch, "F_p matrix product");
    FpMatrix r(a.rows_, b.cols_, a.p_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const value_type aik = a(i, k);
        if (!aik) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = (r(i, j) + aik * b(k, j)) % a.p_;
      }
    return r;
  }

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

  bool is_identity() const { return *this == identity(rows_, p_); }

  value_type inv(value_type a) const { return PrimeFieldElem(a, p_).inverse().value(); }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
  }
  void scale_row(std::size_t i, value_type s) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = (*this)(i, c) * s % p_;
  }
  // row_i += s * row_j
  void add_row(std::size_t i, std::size_t j, value_type s) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = ((*this)(i, c) + s * (*this)(j, c)) % p_;
  }
  // col_i += s * col_j
  void add_col(std::size_t i, std::size_t j, value_type s) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) = ((*this)(r, i) + s * (*this)(r, j)) % p_;
  }

 private:
  std::size_t rows_, cols_;
  value_type p_;
  std::vector<value_type> v_;
};

/// L * A * R = diag(1,...,1,0,...,0) with L, R invertible.
struct RankNormalForm {
  FpMatrix L, R;
  std::size_t rank = 0;
};

inline RankNormalForm rank_normal_form(FpMatrix a) {
  const std::size_t m = a.rows(), n = a.cols();
  const auto p = a.modulus();
  FpMatrix L = FpMatrix::identity(m, p), R = FpMatrix::identity(n, p);
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    std::size_t piv = r;
    while (piv < m && a(piv, col) == 0) ++piv;
    if (piv == m) continue;
    a.swap_rows(r, piv);
    L.swap_rows(r, piv);
    const auto s = a.inv(a(r, col));
    a.scale_row(r, s);
    L.scale_row(r, s);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a(i, col) == 0) continue;
      const auto f = p - a(i, col);
      a.add_row(i, r, f);
      L.add_row(i, r, f);
    }
    // move the pivot column into position r, then clear the rest of row r
    a.swap_cols(r, col);
    R.swap_cols(r, col);
    ++r;
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = r; j < n; ++j) {
      if (a(i, j) == 0) continue;
      const auto f = p - a(i, j);
      a.add_col(j, i, f);
      R.add_col(j, i, f);
    }
  return {std::move(L), std::move(R), r};
}

inline std::size_t rank(const FpMatrix& a) { return rank_normal_form(a).rank; }

inline std::optional<FpMatrix> inverse(const FpMatrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  auto nf = rank_normal_form(a);
  if (nf.rank != a.rows()) return std::nullopt;
  // L A R = I  =>  A^{-1} = R L
  return nf.R * nf.L;
}

}  // namespace orered::finite
