#pragma once

#include <cstdint>
#include <ostream>

#include "orered/error.hpp"

namespace orered {

constexpr bool is_small_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Element of F_p for a prime p < 2^16.
class PrimeFieldElem {
 public:
  using value_type = std::uint32_t;

  PrimeFieldElem(value_type value, value_type modulus) : modulus_(modulus) {
    if (modulus >= (1u << 16) || !is_small_prime(modulus))
      fail(ErrorKind::InvalidContext, "modulus must be a prime below 2^16");
    value_ = value % modulus;
  }

  value_type value() const noexcept { return value_; }
  value_type modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  friend PrimeFieldElem operator+(PrimeFieldElem a, PrimeFieldElem b) {
    check(a, b);
    return {(a.value_ + b.value_) % a.modulus_, a.modulus_, Raw{}};
  }
  friend PrimeFieldElem operator-(PrimeFieldElem a, PrimeFieldElem b) {
    check(a, b);
    return {(a.value_ + a.modulus_ - b.value_) % a.modulus_, a.modulus_, Raw{}};
  }
  friend PrimeFieldElem operator*(PrimeFieldElem a, PrimeFieldElem b) {
    check(a, b);
    return {(a.value_ * b.value_) % a.modulus_, a.modulus_, Raw{}};
  }
  PrimeFieldElem operator-() const { return {(modulus_ - value_) % modulus_, modulus_, Raw{}}; }

  PrimeFieldElem pow(std::uint64_t e) const {
    PrimeFieldElem result{1 % modulus_, modulus_, Raw{}};
    PrimeFieldElem base = *this;
    while (e) {
      if (e & 1) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  PrimeFieldElem inverse() const {
    if (value_ == 0) fail(ErrorKind::DivisionByZero, "inverse of 0 in F_p");
    return pow(modulus_ - 2);
  }

  friend PrimeFieldElem operator/(PrimeFieldElem a, PrimeFieldElem b) { return a * b.inverse(); }

  friend bool operator==(PrimeFieldElem a, PrimeFieldElem b) {
    return a.value_ == b.value_ && a.modulus_ == b.modulus_;
  }

  friend std::ostream& operator<<(std::ostream& os, PrimeFieldElem a) { return os << a.value_; }

 private:
  struct Raw {};
  PrimeFieldElem(value_type v, value_type m, Raw) : value_(v), modulus_(m) {}

  static void check(PrimeFieldElem a, PrimeFieldElem b) {
    if (a.modulus_ != b.modulus_) fail(ErrorKind::ContextMismatch, "F_p moduli differ");
  }

  value_type value_ = 0;
  value_type modulus_ = 2;
};

}  // namespace orered
