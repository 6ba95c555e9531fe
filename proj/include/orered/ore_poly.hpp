#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "orered/error.hpp"
#include "orered/ore_context.hpp"
#include "orered/ratfun.hpp"

namespace orered {

/// Skew polynomial sum_i c_i D^i with coefficients on the left.
class OrePoly {
 public:
  explicit OrePoly(OreContext ctx = OreContext::differential()) : ctx_(ctx) {}
  OrePoly(OreContext ctx, std::vector<RatFun> coeffs) : ctx_(ctx), c_(std::move(coeffs)) { trim(); }
  OrePoly(OreContext ctx, RatFun c) : ctx_(ctx) {
    if (!c.is_zero()) c_.push_back(std::move(c));
  }

  static OrePoly zero(OreContext ctx) { return OrePoly(ctx); }
  static OrePoly one(OreContext ctx) { return OrePoly(ctx, RatFun(1)); }
  static OrePoly x(OreContext ctx) { return OrePoly(ctx, RatFun::x()); }
  static OrePoly D(OreContext ctx) { return monomial(ctx, RatFun(1), 1); }
  static OrePoly monomial(OreContext ctx, RatFun c, std::size_t k) {
    if (c.is_zero()) return OrePoly(ctx);
    std::vector<RatFun> v(k + 1);
    v[k] = std::move(c);
    return OrePoly(ctx, std::move(v));
  }

  const OreContext& context() const noexcept { return ctx_; }
  int degree() const noexcept { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  /// Units of the ring are exactly the nonzero degree-0 elements.
  bool is_unit() const noexcept { return c_.size() == 1; }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  const RatFun& lc() const { return c_.back(); }
  const std::vector<RatFun>& coeffs() const noexcept { return c_; }
  RatFun coeff(std::size_t i) const { return i < c_.size() ? c_[i] : RatFun(); }

  OrePoly operator-() const {
    OrePoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  OrePoly& operator+=(const OrePoly& o) {
    check(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  OrePoly& operator-=(const OrePoly& o) { return *this += -o; }
  friend OrePoly operator+(OrePoly a, const OrePoly& b) { return a += b; }
  friend OrePoly operator-(OrePoly a, const OrePoly& b) { return a -= b; }

  /// c * this, with c acting on the left (coefficientwise).
  OrePoly left_scaled(const RatFun& c) const {
    if (c.is_zero()) return OrePoly(ctx_);
    OrePoly r = *this;
    for (auto& v : r.c_)
      if (!v.is_zero()) v = c * v;
    return r;
  }

  /// D * this, via D*c = sigma(c) D + delta(c).
  OrePoly times_D_left() const {
    std::vector<RatFun> r(c_.size() + 1);
    for (std::size_t j = 0; j < c_.size(); ++j) {
      if (c_[j].is_zero()) continue;
      r[j + 1] += ctx_.twist(c_[j]);
      RatFun d = ctx_.derive(c_[j]);
      if (!d.is_zero()) r[j] += d;
    }
    return OrePoly(ctx_, std::move(r));
  }

  /// this * D^k (a pure index shift under the left-coefficient convention).
  OrePoly times_D_power_right(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<RatFun> r(c_.size() + k);
    std::copy(c_.begin(), c_.end(), r.begin() + static_cast<std::ptrdiff_t>(k));
    return OrePoly(ctx_, std::move(r));
  }

  friend OrePoly operator*(const OrePoly& a, const OrePoly& b) {
    a.check(b);
    if (a.is_zero() || b.is_zero()) return OrePoly(a.ctx_);
    if (b.degree() == 0 && a.ctx_.is_differential() && a.degree() == 0) return OrePoly(a.ctx_, a.c_[0] * b.c_[0]);
    if (b.degree() == 0 && b.c_[0].is_constant()) {
      // constants commute with D in both rings
      OrePoly r = a;
      for (auto& c : r.c_) c *= b.c_[0];
      return r;
    }
    OrePoly result(a.ctx_);
    OrePoly cur = b;  // D^i * b
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!a.c_[i].is_zero()) result += cur.left_scaled(a.c_[i]);
      if (i + 1 < a.c_.size()) cur = cur.times_D_left();
    }
    return result;
  }
  OrePoly& operator*=(const OrePoly& o) { return *this = *this * o; }

  /// Largest coefficient degree (numerator or denominator); size diagnostics.
  int coefficient_degree() const {
    int d = 0;
    for (const auto& c : c_) d = std::max(d, c.max_degree());
    return d;
  }
  std::size_t bit_size() const {
    std::size_t s = 0;
    for (const auto& c : c_) s += c.bit_size();
    return s;
  }

  friend bool operator==(const OrePoly& a, const OrePoly& b) { return a.ctx_ == b.ctx_ && a.c_ == b.c_; }

  void check(const OrePoly& o) const {
    if (!(ctx_ == o.ctx_)) fail(ErrorKind::ContextMismatch, "operands live in different Ore rings");
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  OreContext ctx_;
  std::vector<RatFun> c_;
};

inline OrePoly ore_mul(const OrePoly& a, const OrePoly& b) { return a * b; }

inline OrePoly one_like(const OrePoly& a) { return OrePoly::one(a.context()); }
inline OrePoly zero_like(const OrePoly& a) { return OrePoly::zero(a.context()); }
inline bool is_zero(const OrePoly& a) { return a.is_zero(); }

enum class DivSide { Right, Left };

struct DivResult {
  OrePoly q;
  OrePoly r;
};

/// side = Right: a = q*b + r. side = Left: a = b*q + r. deg r < deg b.
inline DivResult ore_divmod(const OrePoly& a, const OrePoly& b, DivSide side) {
  a.check(b);
  if (b.is_zero()) fail(ErrorKind::DivisionByZeroOperator, "division by the zero operator");
  const OreContext& ctx = a.context();
  if (a.degree() < b.degree()) return {OrePoly(ctx), a};
  const int db = b.degree();
  const std::size_t span = static_cast<std::size_t>(a.degree() - db);
  std::vector<RatFun> q(span + 1);
  OrePoly r = a;

  if (side == DivSide::Right) {
    // D^k * b for every k we may need
    std::vector<OrePoly> powers{b};
    for (std::size_t k = 1; k <= span; ++k) powers.push_back(powers.back().times_D_left());
    while (!r.is_zero() && r.degree() >= db) {
      const auto k = static_cast<std::size_t>(r.degree() - db);
      RatFun c = r.lc() / ctx.twist(b.lc(), static_cast<int>(k));
      r -= powers[k].left_scaled(c);
      q[k] = std::move(c);
    }
  } else {
    const RatFun inv_lc = b.lc().inverse();
    while (!r.is_zero() && r.degree() >= db) {
      const auto k = static_cast<std::size_t>(r.degree() - db);
      // lc(b * c D^k) = lc(b) * sigma^db(c)
      RatFun c = ctx.twist(inv_lc * r.lc(), -db);
      r -= (b * OrePoly(ctx, c)).times_D_power_right(k);
      q[k] = std::move(c);
    }
  }
  return {OrePoly(ctx, std::move(q)), std::move(r)};
}

}  // namespace orered
