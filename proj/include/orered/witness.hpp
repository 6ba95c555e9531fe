#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "orered/error.hpp"

namespace orered {

enum class WitnessMethod { Unit, Commutator, TwoTerm, Split, External };

inline std::string method_name(WitnessMethod m) {
  switch (m) {
    case WitnessMethod::Unit: return "unit";
    case WitnessMethod::Commutator: return "commutator";
    case WitnessMethod::TwoTerm: return "two-term";
    case WitnessMethod::Split: return "split";
    case WitnessMethod::External: return "external";
  }
  return "external";
}

// Element types plug in through one_like / zero_like / is_zero found by ADL.

/// Terms (u_i, v_i) with sum_i u_i * target * v_i = 1. Zero pairs are padding.
template <class Elem>
struct BasicWitness {
  Elem target;
  std::vector<std::pair<Elem, Elem>> terms;
  WitnessMethod method = WitnessMethod::External;
  std::vector<std::string> transcript;

  std::size_t term_count() const { return terms.size(); }
  std::size_t nonzero_terms() const {
    std::size_t n = 0;
    for (const auto& [u, v] : terms)
      if (!is_zero(u) && !is_zero(v)) ++n;
    return n;
  }
};

/// sum_i u_i * factors[i] * v_i = 1, the product of the factors being nonzero.
template <class Elem>
struct BasicSplitWitness {
  std::vector<Elem> factors;
  std::vector<std::pair<Elem, Elem>> terms;
  std::vector<std::string> transcript;
};

template <class Elem>
struct WitnessCheck {
  bool ok = false;
  Elem residual;  // sum - 1
};

template <class Elem>
WitnessCheck<Elem> witness_verify(const BasicWitness<Elem>& w) {
  Elem sum = zero_like(w.target);
  for (const auto& [u, v] : w.terms) {
    if (is_zero(u) || is_zero(v)) continue;
    sum += u * w.target * v;
  }
  Elem residual = sum - one_like(w.target);
  const bool ok = is_zero(residual);
  return {ok, std::move(residual)};
}

template <class Elem>
WitnessCheck<Elem> witness_verify(const BasicSplitWitness<Elem>& w) {
  if (w.factors.empty() || w.terms.size() != w.factors.size())
    fail(ErrorKind::InvalidWitness, "split witness needs one term per factor");
  Elem sum = zero_like(w.factors.front());
  for (std::size_t i = 0; i < w.terms.size(); ++i) {
    const auto& [u, v] = w.terms[i];
    if (is_zero(u) || is_zero(v)) continue;
    sum += u * w.factors[i] * v;
  }
  Elem residual = sum - one_like(w.factors.front());
  const bool ok = is_zero(residual);
  return {ok, std::move(residual)};
}

/// Distributes a witness of a_1 * ... * a_n over the factors:
/// u_i := x_i * a_1...a_{i-1}, v_i := a_{i+1}...a_n * y_i, so each term
/// u_i a_i v_i reproduces x_i (a_1...a_n) y_i.
template <class Elem>
BasicSplitWitness<Elem> product_split(const std::vector<Elem>& factors, const BasicWitness<Elem>& w) {
  if (factors.empty()) fail(ErrorKind::InvalidWitness, "no factors");
  const std::size_t n = factors.size();
  std::vector<Elem> prefix{one_like(factors.front())};  // prefix[i] = a_1...a_i
  for (const auto& f : factors) prefix.push_back(prefix.back() * f);
  if (is_zero(prefix.back())) fail(ErrorKind::ZeroProduct, "factor product is zero");
  if (!(w.target == prefix.back())) fail(ErrorKind::InvalidWitness, "witness target is not the factor product");
  if (!witness_verify(w).ok) fail(ErrorKind::InvalidWitness, "witness does not verify against the product");

  std::vector<std::pair<Elem, Elem>> live;
  for (const auto& t : w.terms)
    if (!is_zero(t.first) && !is_zero(t.second)) live.push_back(t);
  if (live.size() > n)
    fail(ErrorKind::TooManyTerms, std::to_string(live.size()) + " terms for " + std::to_string(n) + " factors");

  std::vector<Elem> suffix(n + 1, one_like(factors.front()));  // suffix[i] = a_{i+1}...a_n (0-based: factors[i..])
  for (std::size_t i = n; i-- > 0;) suffix[i] = factors[i] * suffix[i + 1];

  BasicSplitWitness<Elem> out;
  out.factors = factors;
  out.transcript = w.transcript;
  out.transcript.push_back("split " + method_name(w.method) + " witness with " + std::to_string(live.size()) +
                           " term(s) over " + std::to_string(n) + " factor(s)");
  for (std::size_t i = 0; i < n; ++i) {
    if (i < live.size()) {
      out.terms.emplace_back(live[i].first * prefix[i], suffix[i + 1] * live[i].second);
    } else {
      out.terms.emplace_back(zero_like(factors.front()), zero_like(factors.front()));
    }
  }
  if (!witness_verify(out).ok) fail(ErrorKind::InvalidWitness, "split witness failed to verify");
  return out;
}

}  // namespace orered
