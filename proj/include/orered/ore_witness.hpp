#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "orered/error.hpp"
#include "orered/format.hpp"
#include "orered/ore_euclid.hpp"
#include "orered/ore_poly.hpp"
#include "orered/witness.hpp"

namespace orered {

using Witness = BasicWitness<OrePoly>;
using SplitWitness = BasicSplitWitness<OrePoly>;

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Candidate order for the second multiplier v2 in a two-term witness: a fixed
/// list of small polynomials in x, then seeded random ones.
struct SearchPolicy {
  std::uint64_t seed = kDefaultSeed;
  std::size_t random_tries = 24;
  int random_degree = 3;
  long random_height = 5;
};

namespace detail {

inline void require_simple(const OrePoly& a, const char* what) {
  if (a.is_zero()) fail(ErrorKind::ZeroTarget, std::string(what) + " of the zero element");
  if (!a.context().is_simple()) fail(ErrorKind::NotSimpleContext, std::string(what) + " needs the differential ring");
}

inline Witness unit_witness(const OrePoly& a) {
  const OreContext& ctx = a.context();
  Witness w{a, {{OrePoly(ctx, a.lc().inverse()), OrePoly::one(ctx)}}, WitnessMethod::Unit, {"unit target"}};
  return w;
}

inline std::vector<UniPoly> fixed_candidates() {
  auto p = [](std::vector<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return UniPoly(std::move(v));
  };
  return {p({0, 1}), p({0, 0, 1}), p({0, 0, 0, 1}), p({1, 1}),       p({1, 0, 1}),
          p({0, 1, 0, 1}), p({2, 1}), p({1, 1, 1}), p({0, 0, 0, 0, 1}), p({3, 0, 1})};
}

}  // namespace detail

/// sum_j (-1)^j C(d,j) x^j a x^(d-j) is the d-fold bracket [..[a,x]..,x],
/// which equals d! * lc(a); dividing by that constant gives d + 1 terms.
inline Witness commutator_witness(const OrePoly& a) {
  detail::require_simple(a, "commutator witness");
  const OreContext& ctx = a.context();
  const auto d = static_cast<std::size_t>(a.degree());
  if (d == 0) {
    Witness w = detail::unit_witness(a);
    w.method = WitnessMethod::Commutator;
    return w;
  }
  Rational factorial = 1;
  for (std::size_t i = 2; i <= d; ++i) factorial *= static_cast<long>(i);
  const RatFun kappa_inv = (a.lc() * RatFun(factorial)).inverse();

  Witness w{a, {}, WitnessMethod::Commutator, {}};
  Integer binom = 1;
  for (std::size_t j = 0; j <= d; ++j) {
    Rational c(binom);
    if (j % 2 == 1) c = -c;
    RatFun u = kappa_inv * RatFun(UniPoly::monomial(c, j));
    w.terms.emplace_back(OrePoly(ctx, u), OrePoly(ctx, RatFun(UniPoly::monomial(Rational(1), d - j))));
    binom = binom * static_cast<unsigned long>(d - j) / static_cast<unsigned long>(j + 1);
  }
  w.transcript.push_back("iterated bracket with x, depth " + std::to_string(d));
  return w;
}

/// Looks for v2 with gcrd(a, a*v2) = 1; the Bezout cofactors of that gcrd give
/// u1*a*1 + u2*a*v2 = 1.
inline Witness two_term_witness(const OrePoly& a, const SearchPolicy& policy = {}) {
  detail::require_simple(a, "two-term witness");
  const OreContext& ctx = a.context();
  if (a.degree() == 0) {
    Witness w = detail::unit_witness(a);
    w.terms.emplace_back(OrePoly(ctx), OrePoly(ctx));
    return w;
  }
  std::vector<std::string> transcript;
  auto attempt = [&](const UniPoly& cand) -> std::optional<Witness> {
    OrePoly v2(ctx, RatFun(cand));
    XgcdResult g = ore_xgcd(a, a * v2, GcdSide::Gcrd);
    std::string line = "v2 = " + print_unipoly(cand) + ": gcrd degree " + std::to_string(g.g.degree());
    if (g.g.degree() != 0) {
      transcript.push_back(line + ", rejected");
      return std::nullopt;
    }
    transcript.push_back(line + ", accepted");
    Witness w{a, {{g.u, OrePoly::one(ctx)}, {g.v, v2}}, WitnessMethod::TwoTerm, transcript};
    if (!witness_verify(w).ok) fail(ErrorKind::InvalidWitness, "two-term witness failed to verify");
    return w;
  };

  for (const auto& cand : detail::fixed_candidates())
    if (auto w = attempt(cand)) return *w;

  std::mt19937_64 rng(policy.seed);
  std::uniform_int_distribution<long> coeff(-policy.random_height, policy.random_height);
  std::uniform_int_distribution<int> deg(1, std::max(1, policy.random_degree));
  for (std::size_t i = 0; i < policy.random_tries; ++i) {
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : c) v = coeff(rng);
    if (c.back() == 0) c.back() = 1;
    UniPoly cand(std::move(c));
    if (cand.is_constant()) continue;
    if (auto w = attempt(cand)) return *w;
  }
  fail(ErrorKind::SearchExhausted, "no two-term witness found for " + print_ore(a));
}

}  // namespace orered
