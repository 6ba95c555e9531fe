#pragma once

#include <utility>

#include "orered/error.hpp"
#include "orered/ore_poly.hpp"

namespace orered {

enum class GcdSide { Gcrd, Gcld };
enum class LcmSide { Lclm, Lcrm };

/// gcrd: g = u*a + v*b, a = a_cof*g, b = b_cof*g.
/// gcld: g = a*u + b*v, a = g*a_cof, b = g*b_cof.
struct XgcdResult {
  OrePoly g, u, v, a_cof, b_cof;
};

/// lclm: l = s*a = t*b.  lcrm: l = a*s = b*t.
struct LcmResult {
  OrePoly l, s, t;
};

namespace detail {

// Raw extended right Euclid. On exit r0 = s0*a + t0*b is the last nonzero
// remainder and s1*a + t1*b = 0.
struct EuclidState {
  OrePoly r0, r1, s0, s1, t0, t1;
  int steps = 0;
};

// Unit c with (p * c) monic: lc(p*c) = lc(p) * sigma^deg(p)(c).
inline OrePoly right_monic_unit(const OrePoly& p) {
  return OrePoly(p.context(), p.context().twist(p.lc().inverse(), -p.degree()));
}

inline EuclidState run_euclid(const OrePoly& a, const OrePoly& b) {
  const OreContext& ctx = a.context();
  EuclidState st{a, b, OrePoly::one(ctx), OrePoly(ctx), OrePoly(ctx), OrePoly::one(ctx)};
  while (!st.r1.is_zero()) {
    DivResult d = ore_divmod(st.r0, st.r1, DivSide::Right);
    OrePoly s2 = st.s0 - d.q * st.s1;
    OrePoly t2 = st.t0 - d.q * st.t1;
    // monic remainders keep the coefficient sizes down
    if (!d.r.is_zero()) {
      const RatFun inv = d.r.lc().inverse();
      d.r = d.r.left_scaled(inv);
      s2 = s2.left_scaled(inv);
      t2 = t2.left_scaled(inv);
    }
    st.r0 = std::move(st.r1);
    st.r1 = std::move(d.r);
    st.s0 = std::move(st.s1);
    st.s1 = std::move(s2);
    st.t0 = std::move(st.t1);
    st.t1 = std::move(t2);
    ++st.steps;
  }
  return st;
}

inline UniPoly poly_lcm(const UniPoly& a, const UniPoly& b) {
  if (a == b || b.is_one()) return a;
  if (a.is_one()) return b;
  return divexact(a, gcd(a, b)) * b;
}

// Formal adjoint x -> x, D -> -D. Coefficient m of the image is
// sum_{j >= m} (-1)^j C(j, m) c_j^(j-m). With c = p/q and r = rad(q) the
// derivative c^(k) is kept as num_k / (q r^k), so no gcd is taken until the
// sum is formed.
inline OrePoly adjoint(const OrePoly& p) {
  const OreContext& ctx = p.context();
  if (p.is_zero()) return p;
  const std::size_t n = p.coeffs().size() - 1;
  std::vector<std::vector<UniPoly>> dnum(n + 1), dden(n + 1);
  std::vector<UniPoly> rad(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    const RatFun& c = p.coeffs()[j];
    if (c.is_zero()) continue;
    const UniPoly& q = c.den();
    dnum[j].push_back(c.num());
    dden[j].push_back(q);
    if (q.is_constant()) {
      rad[j] = q;
      for (std::size_t k = 1; k <= j; ++k) {
        dnum[j].push_back(dnum[j][k - 1].derivative());
        dden[j].push_back(q);
      }
      continue;
    }
    const UniPoly dq = q.derivative();
    const UniPoly g = gcd(q, dq);
    const UniPoly& r = rad[j] = divexact(q, g);
    const UniPoly a = divexact(dq, g), dr = r.derivative();  // a = q' r / q
    for (std::size_t k = 1; k <= j; ++k) {
      const UniPoly& prev = dnum[j][k - 1];
      dnum[j].push_back(prev.derivative() * r - prev * (a + dr.scaled(Rational(static_cast<long>(k - 1)))));
      dden[j].push_back(dden[j][k - 1] * r);
    }
  }
  // coefficients with equal denominators share q r^k, so their lcm is the
  // largest power and the cofactors are powers of r
  std::vector<std::size_t> group(n + 1);
  std::vector<std::vector<UniPoly>> rpow(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    group[j] = j;
    if (dnum[j].empty()) continue;
    for (std::size_t i = 0; i < j; ++i)
      if (!dnum[i].empty() && group[i] == i && p.coeffs()[i].den() == p.coeffs()[j].den()) {
        group[j] = i;
        break;
      }
    if (group[j] != j) continue;
    rpow[j].push_back(UniPoly(Rational(1)));
    for (std::size_t k = 1; k <= n; ++k) rpow[j].push_back(rpow[j][k - 1] * rad[j]);
  }
  std::vector<RatFun> out(n + 1);
  for (std::size_t m = 0; m <= n; ++m) {
    std::vector<std::size_t> top(n + 1, n + 1);  // per group, the j with the largest k
    for (std::size_t j = m; j <= n; ++j)
      if (!dnum[j].empty()) top[group[j]] = j;
    UniPoly den(Rational(1)), radical(Rational(1));
    std::size_t groups = 0;
    for (std::size_t g = 0; g <= n; ++g)
      if (top[g] <= n) {
        ++groups;
        den = poly_lcm(den, dden[top[g]][top[g] - m]);
        radical = poly_lcm(radical, rad[g]);
      }
    UniPoly num;
    Integer binom = 1;  // C(j, m)
    for (std::size_t j = m; j <= n; ++j) {
      if (j > m) binom = binom * static_cast<unsigned long>(j) / static_cast<unsigned long>(j - m);
      if (dnum[j].empty() || dnum[j][j - m].is_zero()) continue;
      UniPoly term = dnum[j][j - m].scaled(Rational(j % 2 ? Integer(-binom) : binom));
      const std::size_t g = group[j];
      if (groups == 1) {
        if (top[g] != j) term = term * rpow[g][top[g] - j];
      } else if (!(dden[j][j - m] == den)) {
        term = term * divexact(den, dden[j][j - m]);
      }
      num += term;
    }
    if (num.is_zero()) continue;
    out[m] = radical.is_constant() || gcd(num, radical).is_one() ? RatFun::coprime(std::move(num), std::move(den))
                                                                 : RatFun::normalize(std::move(num), std::move(den));
  }
  return OrePoly(ctx, std::move(out));
}

// Involutive anti-automorphism: the adjoint in the differential ring,
// x -> -x, D -> D in the shift ring. It exchanges left and right gcds and lcms.
inline OrePoly reflect(const OrePoly& p) {
  const OreContext& ctx = p.context();
  if (ctx.is_differential()) return adjoint(p);
  // sum c_j D^j -> sum D^j c_j(-x) = sum c_j(-x - j) D^j
  std::vector<RatFun> out;
  for (std::size_t j = 0; j < p.coeffs().size(); ++j)
    out.push_back(ctx.twist(p.coeffs()[j].reflected(), static_cast<int>(j)));
  return OrePoly(ctx, std::move(out));
}

}  // namespace detail

inline XgcdResult ore_xgcd(const OrePoly& a, const OrePoly& b, GcdSide side) {
  a.check(b);
  if (a.is_zero() && b.is_zero()) fail(ErrorKind::BothZero, "gcd of two zero operators");
  const OreContext& ctx = a.context();
  if (side == GcdSide::Gcrd) {
    auto st = detail::run_euclid(a, b);
    const RatFun inv = st.r0.lc().inverse();
    XgcdResult res{st.r0.left_scaled(inv), st.s0.left_scaled(inv), st.t0.left_scaled(inv), OrePoly(ctx), OrePoly(ctx)};
    res.a_cof = ore_divmod(a, res.g, DivSide::Right).q;
    res.b_cof = ore_divmod(b, res.g, DivSide::Right).q;
    return res;
  }
  // gcld(a, b) is the image of gcrd of the images
  const XgcdResult r = ore_xgcd(detail::reflect(a), detail::reflect(b), GcdSide::Gcrd);
  // a left multiple of g would change the right ideal gB, so normalize on the right
  const OrePoly g = detail::reflect(r.g);
  const OrePoly unit = detail::right_monic_unit(g);
  const OrePoly unit_inv(ctx, unit.lc().inverse());
  return {g * unit, detail::reflect(r.u) * unit, detail::reflect(r.v) * unit, unit_inv * detail::reflect(r.a_cof),
          unit_inv * detail::reflect(r.b_cof)};
}

inline LcmResult ore_lcm(const OrePoly& a, const OrePoly& b, LcmSide side) {
  a.check(b);
  if (a.is_zero() || b.is_zero()) fail(ErrorKind::ZeroArgument, "lcm needs nonzero operands");
  if (side == LcmSide::Lclm) {
    auto st = detail::run_euclid(a, b);
    OrePoly l = st.s1 * a;
    const RatFun inv = l.lc().inverse();
    return {l.left_scaled(inv), st.s1.left_scaled(inv), (-st.t1).left_scaled(inv)};
  }
  const LcmResult r = ore_lcm(detail::reflect(a), detail::reflect(b), LcmSide::Lclm);
  const OrePoly l = detail::reflect(r.l);
  const OrePoly unit = detail::right_monic_unit(l);
  return {l * unit, detail::reflect(r.s) * unit, detail::reflect(r.t) * unit};
}

}  // namespace orered
