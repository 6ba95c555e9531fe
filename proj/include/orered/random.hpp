#pragma once

#include <cstdint>
#include <random>

#include "orered/finite/finite_elem.hpp"
#include "orered/matrix/ore_mat.hpp"
#include "orered/ore_poly.hpp"

namespace orered {

/// Shape bounds for random operators.
struct RandomShape {
  int op_degree = 4;     // degree in D
  int coeff_degree = 2;  // numerator and denominator degree in x
  long height = 9;       // |integer coefficients|
  double zero_coeff = 0.2;  // chance a D-coefficient below the top is zero
  bool polynomial = false;  // coefficients in Q[x] only
};

using Rng = std::mt19937_64;

inline long random_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline UniPoly random_unipoly(Rng& rng, int degree, long height) {
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = random_int(rng, -height, height);
  if (c.back() == 0) c.back() = random_int(rng, 1, height);
  return UniPoly(std::move(c));
}

/// Nonzero rational function with num, den degrees at most shape.coeff_degree.
inline RatFun random_ratfun(Rng& rng, const RandomShape& shape) {
  UniPoly num = random_unipoly(rng, static_cast<int>(random_int(rng, 0, shape.coeff_degree)), shape.height);
  if (shape.polynomial || random_int(rng, 0, 1) == 0) return RatFun(std::move(num));
  UniPoly den = random_unipoly(rng, static_cast<int>(random_int(rng, 0, shape.coeff_degree)), shape.height);
  return RatFun::normalize(std::move(num), std::move(den));
}

/// Operator of D-degree exactly d, d drawn from [0, shape.op_degree].
inline OrePoly random_ore(Rng& rng, const OreContext& ctx, const RandomShape& shape) {
  const int d = static_cast<int>(random_int(rng, 0, shape.op_degree));
  std::vector<RatFun> c(static_cast<std::size_t>(d) + 1);
  std::bernoulli_distribution skip(shape.zero_coeff);
  for (int i = 0; i <= d; ++i)
    if (i == d || !skip(rng)) c[static_cast<std::size_t>(i)] = random_ratfun(rng, shape);
  return OrePoly(ctx, std::move(c));
}

inline OrePoly random_nonzero_ore(Rng& rng, const OreContext& ctx, const RandomShape& shape) {
  for (;;) {
    OrePoly a = random_ore(rng, ctx, shape);
    if (!a.is_zero()) return a;
  }
}

/// Entries may be zero with probability zero_entry.
inline OreMat random_mat(Rng& rng, const OreContext& ctx, std::size_t rows, std::size_t cols, const RandomShape& shape,
                         double zero_entry = 0.2) {
  OreMat m(ctx, rows, cols);
  std::bernoulli_distribution zero(zero_entry);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (!zero(rng)) m(i, j) = random_ore(rng, ctx, shape);
  return m;
}

inline finite::FiniteElem random_finite(Rng& rng, std::size_t k, std::uint32_t p) {
  const auto n = finite::FiniteElem::ring_size(k, p);
  return finite::FiniteElem::from_code(k, p, std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng));
}

}  // namespace orered
