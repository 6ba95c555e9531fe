#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "orered/error.hpp"
#include "orered/rational.hpp"

namespace orered {

/// Degree of the zero polynomial (and the zero operator). Compares below
/// every real degree.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

/// Dense univariate polynomial over Q, lowest degree first.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(Rational c) {
    if (c != 0) c_.push_back(std::move(c));
  }
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly monomial(Rational c, std::size_t k) {
    if (c == 0) return {};
    std::vector<Rational> v(k + 1);
    v[k] = std::move(c);
    return UniPoly(std::move(v));
  }
  static UniPoly x() { return monomial(Rational(1), 1); }

  int degree() const noexcept { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  std::size_t size() const noexcept { return c_.size(); }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }

  const Rational& lc() const { return c_.back(); }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  std::size_t term_count() const {
    return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const Rational& r) { return r != 0; }));
  }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.c_.size() == 1) return b.scaled(a.c_[0]);
    if (b.c_.size() == 1) return a.scaled(b.c_[0]);
    // convolve over Z with denominators cleared, canonicalize once per entry
    Integer la, lb;
    const std::vector<Integer> ai = cleared(a, la), bi = cleared(b, lb);
    std::vector<Integer> acc(ai.size() + bi.size() - 1);
    for (std::size_t i = 0; i < ai.size(); ++i) {
      if (ai[i] == 0) continue;
      for (std::size_t j = 0; j < bi.size(); ++j)
        mpz_addmul(acc[i + j].get_mpz_t(), ai[i].get_mpz_t(), bi[j].get_mpz_t());
    }
    const Integer den = la * lb;
    std::vector<Rational> r(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k) {
      if (acc[k] == 0) continue;
      mpz_set(mpq_numref(r[k].get_mpq_t()), acc[k].get_mpz_t());
      mpz_set(mpq_denref(r[k].get_mpq_t()), den.get_mpz_t());
      r[k].canonicalize();
    }
    return UniPoly(std::move(r));
  }

  UniPoly scaled(const Rational& s) const {
    if (s == 0) return {};
    UniPoly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
  }

  UniPoly monic() const {
    if (is_zero() || lc() == 1) return *this;
    return scaled(1 / lc());
  }

  /// Euclidean division over Q: a = q*b + r with deg r < deg b.
  friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    if (a.degree() < b.degree()) return {UniPoly{}, a};
    std::vector<Rational> r = a.c_;
    const std::size_t db = b.c_.size() - 1;
    std::vector<Rational> q(r.size() - db);
    const Rational inv_lc = 1 / b.lc();
    Rational t;
    for (std::size_t k = q.size(); k-- > 0;) {
      const Rational& top = r[k + db];
      if (top == 0) continue;
      q[k] = top * inv_lc;
      for (std::size_t j = 0; j <= db; ++j) {
        mpq_mul(t.get_mpq_t(), q[k].get_mpq_t(), b.c_[j].get_mpq_t());
        r[k + j] -= t;
      }
    }
    r.resize(db);
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
  }

  /// a / b when b is known to divide a; the division runs over Z.
  friend UniPoly divexact(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    if (a.is_zero()) return {};
    if (b.c_.size() == 1) return a.scaled(1 / b.c_[0]);
    if (a.c_.size() < b.c_.size()) fail(ErrorKind::InvalidWitness, "inexact polynomial division");
    // a = A/la, b = cb*B with B primitive, so A/B lies in Z[x]
    Integer la, lb;
    std::vector<Integer> A = cleared(a, la), B = cleared(b, lb);
    Integer cb_num = 0;
    for (const auto& c : B) mpz_gcd(cb_num.get_mpz_t(), cb_num.get_mpz_t(), c.get_mpz_t());
    for (auto& c : B) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cb_num.get_mpz_t());
    const std::size_t db = B.size() - 1;
    std::vector<Integer> q(A.size() - db);
    Integer t;
    for (std::size_t k = q.size(); k-- > 0;) {
      Integer& top = A[k + db];
      if (top == 0) continue;
      if (!mpz_divisible_p(top.get_mpz_t(), B.back().get_mpz_t()))
        fail(ErrorKind::InvalidWitness, "inexact polynomial division");
      mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), B.back().get_mpz_t());
      for (std::size_t j = 0; j <= db; ++j) {
        mpz_mul(t.get_mpz_t(), q[k].get_mpz_t(), B[j].get_mpz_t());
        A[k + j] -= t;
      }
    }
    for (std::size_t j = 0; j < db; ++j)
      if (A[j] != 0) fail(ErrorKind::InvalidWitness, "inexact polynomial division");
    // a / b = Q / (la * cb) with cb = cb_num / lb
    Rational scale(lb, la * cb_num);
    scale.canonicalize();
    std::vector<Rational> r(q.size());
    for (std::size_t k = 0; k < q.size(); ++k) {
      if (q[k] == 0) continue;
      r[k] = Rational(q[k]) * scale;
    }
    return UniPoly(std::move(r));
  }

  /// Monic gcd; gcd(0, 0) = 0. Runs a primitive remainder sequence over Z,
  /// since Euclid over Q spends its time reducing fractions.
  friend UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return UniPoly(Rational(1));
    std::vector<Integer> p = primitive(a), q = primitive(b);
    if (p.size() < q.size()) std::swap(p, q);
    if (auto h = heuristic_gcd(p, q)) p = std::move(*h), q.clear();
    while (q.size() > 1) {
      pseudo_rem(p, q);
      std::swap(p, q);
      if (q.empty()) break;
      make_primitive(q);
    }
    if (!q.empty()) return UniPoly(Rational(1));
    std::vector<Rational> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = Rational(p[i], p.back());
    for (auto& c : out) c.canonicalize();
    return UniPoly(std::move(out));
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return UniPoly(std::move(r));
  }

  /// p(x + h) by Horner's scheme.
  UniPoly shifted(const Rational& h) const {
    if (h == 0 || c_.size() <= 1) return *this;
    std::vector<Rational> r(c_.size());
    for (std::size_t i = c_.size(); i-- > 0;) {
      // r := r*(x + h) + c_i
      for (std::size_t j = c_.size() - 1; j > 0; --j) r[j] = r[j - 1] + r[j] * h;
      r[0] = r[0] * h + c_[i];
    }
    return UniPoly(std::move(r));
  }

  /// p(-x).
  UniPoly reflected() const {
    UniPoly r = *this;
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
  }

  Rational eval(const Rational& at) const {
    Rational acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
    return acc;
  }

  std::size_t bit_size() const {
    std::size_t s = 0;
    for (const auto& c : c_) s += orered::bit_size(c);
    return s;
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  static void make_primitive(std::vector<Integer>& v) {
    Integer g = 0;
    for (const auto& c : v) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) break;
    }
    if (v.back() < 0) g = -g;
    if (g != 1)
      for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }

  // l * p as integers, l the lcm of the denominators.
  static std::vector<Integer> cleared(const UniPoly& p, Integer& l) {
    l = 1;
    for (const auto& c : p.c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> v(p.c_.size());
    Integer t;
    for (std::size_t i = 0; i < v.size(); ++i) {
      mpz_divexact(t.get_mpz_t(), l.get_mpz_t(), p.c_[i].get_den_mpz_t());
      mpz_mul(v[i].get_mpz_t(), t.get_mpz_t(), p.c_[i].get_num_mpz_t());
    }
    return v;
  }

  // Integer multiple of p with content 1 and positive leading coefficient.
  static std::vector<Integer> primitive(const UniPoly& p) {
    Integer l;
    std::vector<Integer> v = cleared(p, l);
    make_primitive(v);
    return v;
  }

  static Integer eval_int(const std::vector<Integer>& v, const Integer& at) {
    Integer acc = 0;
    for (std::size_t i = v.size(); i-- > 0;) acc = acc * at + v[i];
    return acc;
  }

  // Exact division over Z; false if q does not divide p.
  static bool int_divides(std::vector<Integer> p, const std::vector<Integer>& q) {
    const std::size_t dq = q.size() - 1;
    Integer c, t;
    while (p.size() > dq) {
      if (!mpz_divisible_p(p.back().get_mpz_t(), q.back().get_mpz_t())) return false;
      mpz_divexact(c.get_mpz_t(), p.back().get_mpz_t(), q.back().get_mpz_t());
      const std::size_t shift = p.size() - 1 - dq;
      for (std::size_t j = 0; j <= dq; ++j) {
        mpz_mul(t.get_mpz_t(), c.get_mpz_t(), q[j].get_mpz_t());
        p[shift + j] -= t;
      }
      while (!p.empty() && p.back() == 0) p.pop_back();
    }
    return p.empty();
  }

  // Gcd of primitive p, q by evaluation at a large integer and digit
  // reconstruction; the candidate is accepted only if it divides both.
  static std::optional<std::vector<Integer>> heuristic_gcd(const std::vector<Integer>& p,
                                                          const std::vector<Integer>& q) {
    auto norm = [](const std::vector<Integer>& v) {
      Integer m = 0;
      for (const auto& c : v)
        if (abs(c) > m) m = abs(c);
      return m;
    };
    Integer xi = 2 * std::min(norm(p), norm(q)) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
      if (mpz_sizeinbase(xi.get_mpz_t(), 2) * p.size() > 4000000) break;
      Integer gamma;
      mpz_gcd(gamma.get_mpz_t(), eval_int(p, xi).get_mpz_t(), eval_int(q, xi).get_mpz_t());
      std::vector<Integer> h;
      const Integer half = xi / 2;
      Integer digit;
      while (gamma != 0) {
        mpz_fdiv_r(digit.get_mpz_t(), gamma.get_mpz_t(), xi.get_mpz_t());
        if (digit > half) digit -= xi;
        h.push_back(digit);
        gamma -= digit;
        mpz_divexact(gamma.get_mpz_t(), gamma.get_mpz_t(), xi.get_mpz_t());
      }
      if (!h.empty()) {
        make_primitive(h);
        if (int_divides(p, h) && int_divides(q, h)) return h;
      }
      xi = xi * 73794 / 27011;
    }
    return std::nullopt;
  }

  // p := prem(p, q), trimmed; q nonzero with deg q <= deg p.
  static void pseudo_rem(std::vector<Integer>& p, const std::vector<Integer>& q) {
    const std::size_t dq = q.size() - 1;
    Integer t, g, lq, top;
    while (!p.empty() && p.size() > dq) {
      const std::size_t shift = p.size() - 1 - dq;
      mpz_gcd(g.get_mpz_t(), p.back().get_mpz_t(), q.back().get_mpz_t());
      mpz_divexact(lq.get_mpz_t(), q.back().get_mpz_t(), g.get_mpz_t());
      mpz_divexact(top.get_mpz_t(), p.back().get_mpz_t(), g.get_mpz_t());
      if (lq != 1)
        for (auto& c : p) c *= lq;
      for (std::size_t j = 0; j <= dq; ++j) {
        mpz_mul(t.get_mpz_t(), top.get_mpz_t(), q[j].get_mpz_t());
        p[shift + j] -= t;
      }
      while (!p.empty() && p.back() == 0) p.pop_back();
    }
  }

  std::vector<Rational> c_;
};

}  // namespace orered
