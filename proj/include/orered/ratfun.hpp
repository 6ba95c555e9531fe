#pragma once

#include <utility>

#include "orered/error.hpp"
#include "orered/unipoly.hpp"

namespace orered {

/// Element of Q(x) kept in canonical form: gcd(num, den) = 1, den monic, and
/// zero is 0/1. Structural equality is therefore field equality.
class RatFun {
 public:
  RatFun() : den_(Rational(1)) {}
  explicit RatFun(Rational c) : num_(std::move(c)), den_(Rational(1)) {}
  explicit RatFun(long c) : RatFun(Rational(c)) {}
  explicit RatFun(UniPoly p) : num_(std::move(p)), den_(Rational(1)) {}

  static RatFun x() { return RatFun(UniPoly::x()); }

  static RatFun normalize(UniPoly num, UniPoly den) {
    if (den.is_zero()) fail(ErrorKind::ZeroDenominator, "rational function with zero denominator");
    RatFun r;
    if (num.is_zero()) return r;
    if (!den.is_constant() && !num.is_constant()) {
      UniPoly g = gcd(num, den);
      if (!g.is_constant()) {
        num = divexact(num, g);
        den = divexact(den, g);
      }
    }
    if (den.lc() != 1) {
      Rational s = 1 / den.lc();
      num = num.scaled(s);
      den = den.scaled(s);
    }
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }

  /// num/den when gcd(num, den) = 1 is already known.
  static RatFun coprime(UniPoly num, UniPoly den) { return raw(std::move(num), std::move(den)); }

  const UniPoly& num() const noexcept { return num_; }
  const UniPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }

  RatFun operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
      if (a.den_.is_one()) return RatFun(a.num_ + b.num_);
      return normalize(a.num_ + b.num_, a.den_);
    }
    if (a.den_.is_one()) return raw(a.num_ * b.den_ + b.num_, b.den_);
    if (b.den_.is_one()) return raw(a.num_ + b.num_ * a.den_, a.den_);
    // with coprime denominators the sum is already reduced; otherwise only
    // the common part g can share a factor with the new numerator
    UniPoly g = gcd(a.den_, b.den_);
    if (g.is_one()) return raw(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    UniPoly ad = divexact(a.den_, g);
    UniPoly bd = divexact(b.den_, g);
    UniPoly top = a.num_ * bd + b.num_ * ad;
    if (top.is_zero()) return {};
    UniPoly h = gcd(top, g);
    if (!h.is_one()) {
      top = divexact(top, h);
      g = divexact(g, h);
    }
    return raw(std::move(top), ad * bd * g);
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) return RatFun(a.num_ * b.num_);
    if (a.num_.is_constant() && a.den_.is_one()) return raw(b.num_.scaled(a.num_.lc()), b.den_);
    if (b.num_.is_constant() && b.den_.is_one()) return raw(a.num_.scaled(b.num_.lc()), a.den_);
    // cross-cancel so the product of the reduced parts is already reduced
    UniPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    cancel(an, bd);
    cancel(bn, ad);
    return raw(an * bn, ad * bd);
  }

  RatFun inverse() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero rational function");
    return raw(den_, num_);
  }

  friend RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero rational function");
    return a * b.inverse();
  }

  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }

  /// d/dx by the quotient rule.
  RatFun derivative() const {
    if (num_.is_zero()) return {};
    if (den_.is_one()) return RatFun(num_.derivative());
    // with g = gcd(d, d'): (n/d)' = (n' d/g - n d'/g) / (d d/g), already
    // reduced in characteristic 0
    const UniPoly dd = den_.derivative();
    const UniPoly g = gcd(den_, dd);
    const UniPoly dg = divexact(den_, g), ddg = divexact(dd, g);
    return raw(num_.derivative() * dg - num_ * ddg, den_ * dg);
  }

  /// f(x + h); gcd and monicity survive the substitution.
  RatFun shifted(const Rational& h) const {
    RatFun r;
    r.num_ = num_.shifted(h);
    r.den_ = den_.shifted(h);
    return r;
  }

  /// f(-x).
  RatFun reflected() const { return raw(num_.reflected(), den_.reflected()); }

  int max_degree() const { return std::max(num_.degree(), den_.degree()); }
  std::size_t bit_size() const { return num_.bit_size() + den_.bit_size(); }

  friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  // num/den with gcd(num, den) = 1 already known; only makes den monic.
  static RatFun raw(UniPoly num, UniPoly den) {
    if (den.is_zero()) fail(ErrorKind::ZeroDenominator, "rational function with zero denominator");
    RatFun r;
    if (num.is_zero()) return r;
    if (den.lc() != 1) {
      Rational s = 1 / den.lc();
      num = num.scaled(s);
      den = den.scaled(s);
    }
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }

  static void cancel(UniPoly& n, UniPoly& d) {
    if (n.is_constant() || d.is_constant()) return;
    UniPoly g = gcd(n, d);
    if (g.is_constant()) return;
    n = divexact(n, g);
    d = divexact(d, g);
  }

  UniPoly num_;
  UniPoly den_;
};

inline RatFun ratfun_normalize(UniPoly num, UniPoly den) { return RatFun::normalize(std::move(num), std::move(den)); }
inline RatFun ratfun_derivative(const RatFun& a) { return a.derivative(); }

enum class RatFunOp { Add, Mul, Div, Neg, Inv };

inline RatFun ratfun_arith(RatFunOp op, const RatFun& a, const RatFun& b = RatFun()) {
  switch (op) {
    case RatFunOp::Add: return a + b;
    case RatFunOp::Mul: return a * b;
    case RatFunOp::Div: return a / b;
    case RatFunOp::Neg: return -a;
    case RatFunOp::Inv: return a.inverse();
  }
  return {};
}

}  // namespace orered
