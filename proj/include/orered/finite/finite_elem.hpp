#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "orered/error.hpp"
#include "orered/finite/fp_matrix.hpp"
#include "orered/prime_field.hpp"

namespace orered::finite {

inline constexpr std::size_t kMaxDim = 3;

/// Element of M_k(F_p) for k <= 3 and p <= 5.
class FiniteElem {
 public:
  using value_type = std::uint8_t;

  FiniteElem() = default;
  FiniteElem(std::size_t k, std::uint32_t p) : k_(static_cast<std::uint8_t>(k)), p_(static_cast<std::uint8_t>(p)) {
    if (k < 1 || k > kMaxDim) fail(ErrorKind::RingTooLarge, "matrix size must be 1..3");
    if (p > 5 || !is_small_prime(p)) fail(ErrorKind::RingTooLarge, "prime must be 2, 3 or 5");
  }

  static FiniteElem zero(std::size_t k, std::uint32_t p) { return FiniteElem(k, p); }
  static FiniteElem identity(std::size_t k, std::uint32_t p) {
    FiniteElem e(k, p);
    for (std::size_t i = 0; i < k; ++i) e.set(i, i, 1);
    return e;
  }
  /// Matrix unit e_{ij} (0-based).
  static FiniteElem unit_matrix(std::size_t k, std::uint32_t p, std::size_t i, std::size_t j) {
    FiniteElem e(k, p);
    e.set(i, j, 1);
    return e;
  }
  static FiniteElem from_rows(std::size_t k, std::uint32_t p, std::initializer_list<long> entries) {
    FiniteElem e(k, p);
    std::size_t idx = 0;
    for (long v : entries) {
      e.set(idx / k, idx % k, static_cast<std::uint32_t>(((v % static_cast<long>(p)) + p) % p));
      ++idx;
    }
    return e;
  }

  /// Number of ring elements, p^(k^2).
  static std::uint64_t ring_size(std::size_t k, std::uint32_t p) {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < k * k; ++i) n *= p;
    return n;
  }
  /// Enumeration order: entry (i, j) is digit i*k + j of the base-p code.
  static FiniteElem from_code(std::size_t k, std::uint32_t p, std::uint64_t code) {
    FiniteElem e(k, p);
    for (std::size_t i = 0; i < k * k; ++i) {
      e.v_[i] = static_cast<value_type>(code % p);
      code /= p;
    }
    return e;
  }
  std::uint64_t code() const {
    std::uint64_t c = 0;
    for (std::size_t i = k_ * k_; i-- > 0;) c = c * p_ + v_[i];
    return c;
  }

  std::size_t dim() const noexcept { return k_; }
  std::uint32_t modulus() const noexcept { return p_; }

  value_type get(std::size_t i, std::size_t j) const { return v_[i * k_ + j]; }
  void set(std::size_t i, std::size_t j, std::uint32_t value) { v_[i * k_ + j] = static_cast<value_type>(value % p_); }
  PrimeFieldElem at(std::size_t i, std::size_t j) const { return PrimeFieldElem(get(i, j), p_); }

  bool is_zero() const {
    for (std::size_t i = 0; i < k_ * k_; ++i)
      if (v_[i]) return false;
    return true;
  }

  friend FiniteElem operator+(const FiniteElem& a, const FiniteElem& b) {
    a.check(b);
    FiniteElem r(a.k_, a.p_);
    for (std::size_t i = 0; i < a.k_ * a.k_; ++i) r.v_[i] = static_cast<value_type>((a.v_[i] + b.v_[i]) % a.p_);
    return r;
  }
  friend FiniteElem operator-(const FiniteElem& a, const FiniteElem& b) {
    a.check(b);
    FiniteElem r(a.k_, a.p_);
    for (std::size_t i = 0; i < a.k_ * a.k_; ++i)
      r.v_[i] = static_cast<value_type>((a.v_[i] + a.p_ - b.v_[i]) % a.p_);
    return r;
  }
  FiniteElem operator-() const { return zero(k_, p_) - *this; }
  friend FiniteElem operator*(const FiniteElem& a, const FiniteElem& b) {
    a.check(b);
    FiniteElem r(a.k_, a.p_);
    const std::size_t k = a.k_;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        unsigned s = 0;
        for (std::size_t t = 0; t < k; ++t) s += unsigned(a.v_[i * k + t]) * b.v_[t * k + j];
        r.v_[i * k + j] = static_cast<value_type>(s % a.p_);
      }
    return r;
  }
  FiniteElem& operator+=(const FiniteElem& o) { return *this = *this + o; }
  FiniteElem& operator-=(const FiniteElem& o) { return *this = *this - o; }
  FiniteElem& operator*=(const FiniteElem& o) { return *this = *this * o; }

  friend bool operator==(const FiniteElem& a, const FiniteElem& b) {
    return a.k_ == b.k_ && a.p_ == b.p_ && a.v_ == b.v_;
  }

  FpMatrix to_fp() const {
    FpMatrix m(k_, k_, p_);
    for (std::size_t i = 0; i < k_; ++i)
      for (std::size_t j = 0; j < k_; ++j) m(i, j) = get(i, j);
    return m;
  }
  static FiniteElem from_fp(const FpMatrix& m) {
    FiniteElem e(m.rows(), m.modulus());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) e.set(i, j, m(i, j));
    return e;
  }

  std::size_t rank() const { return finite::rank(to_fp()); }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < k_; ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < k_; ++j) s += (j ? "," : "") + std::to_string(get(i, j));
      s += "]";
    }
    return s + "]";
  }

  void check(const FiniteElem& o) const {
    if (k_ != o.k_ || p_ != o.p_) fail(ErrorKind::ContextMismatch, "elements of different matrix rings");
  }

 private:
  std::uint8_t k_ = 2;
  std::uint8_t p_ = 2;
  std::array<value_type, kMaxDim * kMaxDim> v_{};
};

inline FiniteElem one_like(const FiniteElem& a) { return FiniteElem::identity(a.dim(), a.modulus()); }
inline FiniteElem zero_like(const FiniteElem& a) { return FiniteElem::zero(a.dim(), a.modulus()); }
inline bool is_zero(const FiniteElem& a) { return a.is_zero(); }

struct UnitCheck {
  bool is_unit = false;
  std::optional<FiniteElem> inverse;
};

inline UnitCheck finite_unit(const FiniteElem& a) {
  auto inv = finite::inverse(a.to_fp());
  if (!inv) return {};
  FiniteElem r = FiniteElem::from_fp(*inv);
  if (!(a * r == one_like(a)) || !(r * a == one_like(a))) fail(ErrorKind::InvalidWitness, "inverse check failed");
  return {true, r};
}

inline FiniteElem finite_inverse(const FiniteElem& a) {
  auto u = finite_unit(a);
  if (!u.is_unit) fail(ErrorKind::DivisionByZero, "element is not a unit: " + a.to_string());
  return *u.inverse;
}

}  // namespace orered::finite
