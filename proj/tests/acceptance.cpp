// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "orered/orered.hpp"

using namespace orered;
using finite::FiniteElem;

namespace {

// wall-clock limits in seconds
constexpr double kTheorem1Limit = 10;
constexpr double kLemma34Limit = 60;
constexpr double kLemma5Limit = 300;
constexpr double kArithmeticLimit = 60;
constexpr double kJacobsonLimit = 600;

constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool ok = true;
  std::string detail;
  double limit = 0;  // 0: untimed
};

int failures = 0;

void run(const char* name, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.limit > 0 && secs > o.limit) {
    o.ok = false;
    o.detail += " over time limit";
  }
  if (!o.ok) ++failures;
  std::printf("%s %s: %s [%.2fs]\n", o.ok ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
  std::fflush(stdout);
}

std::vector<FiniteElem> nonzero(std::size_t k, std::uint32_t p) {
  std::vector<FiniteElem> out;
  for (std::uint64_t c = 1; c < FiniteElem::ring_size(k, p); ++c) out.push_back(FiniteElem::from_code(k, p, c));
  return out;
}

// product of two 2x2 matrices mod p, entries read digit by digit
bool product_is_zero(const FiniteElem& a, const FiniteElem& b) {
  const std::size_t k = a.dim();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      unsigned s = 0;
      for (std::size_t l = 0; l < k; ++l) s += unsigned(a.get(i, l)) * b.get(l, j);
      if (s % a.modulus()) return false;
    }
  return true;
}

Outcome theorem1() {
  const auto all = nonzero(2, 2);
  std::size_t expected = 0;
  for (const auto& a : all)
    for (const auto& b : all)
      if (!product_is_zero(a, b) || !product_is_zero(b, a)) ++expected;
  std::size_t seen = 0, passed = 0;
  for (const auto& a : all)
    for (const auto& b : all) {
      if (product_is_zero(a, b) && product_is_zero(b, a)) continue;
      ++seen;
      const auto res = finite::theorem1_reduce(a, b);
      const auto& R = res.reduction;
      if (R.P * finite::Block2::diag(a, b) * R.Q == finite::Block2::diag(finite::one_like(a), R.c) &&
          (R.P * R.Pinv).is_identity() && (R.Q * R.Qinv).is_identity())
        ++passed;
    }
  return {seen == expected && passed == seen,
          std::to_string(passed) + "/" + std::to_string(expected) + " eligible pairs", kTheorem1Limit};
}

Outcome lemma34() {
  std::size_t total = 0, passed = 0;
  std::string per_ring;
  for (std::uint32_t p : {2u, 3u}) {
    const auto all = nonzero(2, p);
    for (const auto& a : all) {
      ++total;
      const auto rec = finite::lemma3_unitize(a);
      const auto red = finite::lemma4_reduce(a);
      const bool unit = oracle::elem_rank(rec.a + rec.x * a * rec.y) == 2;
      if (rec.verify() && unit && red.reduction.verify(a, a)) ++passed;
    }
    per_ring += " M2F" + std::to_string(p) + "=" + std::to_string(all.size());
  }
  return {total == 95 && passed == total, std::to_string(passed) + "/" + std::to_string(total) + per_ring,
          kLemma34Limit};
}

Outcome lemma5() {
  const auto small = finite::lemma5_scan(2, 2);
  bool ok = small.every_nonzero_has_witness();
  for (const auto& row : small.rows) ok = ok && oracle::brute_two_term(row.e);
  const auto big = finite::lemma5_scan(3, 2);
  std::size_t both = 0, only_e = 0, only_f = 0, neither = 0;
  for (const auto& r : big.rows) {
    if (r.witness_e && r.witness_one_minus_e) ++both;
    else if (r.witness_e) ++only_e;
    else if (r.witness_one_minus_e) ++only_f;
    else ++neither;
  }
  std::ostringstream d;
  d << "M2F2 " << small.rows.size() << " nonzero idempotents all witnessed=" << (ok ? "yes" : "no") << "; M3F2 "
    << big.rows.size() << " nonzero idempotents: both=" << both << " e-only=" << only_e << " (1-e)-only=" << only_f
    << " neither=" << neither;
  return {ok, d.str(), kLemma5Limit};
}

Outcome arithmetic() {
  const OreContext ctx = OreContext::differential();
  Rng rng(kSeed);
  RandomShape shape;
  shape.op_degree = 4;
  std::size_t passed = 0;
  const std::size_t n = 500;
  for (std::size_t i = 0; i < n; ++i) {
    const OrePoly a = random_nonzero_ore(rng, ctx, shape), b = random_nonzero_ore(rng, ctx, shape);
    bool ok = true;
    const auto rr = ore_divmod(a, b, DivSide::Right);
    ok = ok && rr.q * b + rr.r == a && rr.r.degree() < b.degree();
    const auto rl = ore_divmod(a, b, DivSide::Left);
    ok = ok && b * rl.q + rl.r == a && rl.r.degree() < b.degree();
    const auto g = ore_xgcd(a, b, GcdSide::Gcrd);
    const auto l = ore_lcm(a, b, LcmSide::Lclm);
    ok = ok && g.a_cof * g.g == a && g.b_cof * g.g == b && l.s * a == l.l && l.t * b == l.l;
    ok = ok && g.g.degree() + l.l.degree() == a.degree() + b.degree();
    const auto gl = ore_xgcd(a, b, GcdSide::Gcld);
    const auto lr = ore_lcm(a, b, LcmSide::Lcrm);
    ok = ok && gl.g.degree() + lr.l.degree() == a.degree() + b.degree();
    if (ok) ++passed;
  }
  return {passed == n, std::to_string(passed) + "/" + std::to_string(n) + " pairs", kArithmeticLimit};
}

Outcome witnesses() {
  const OreContext ctx = OreContext::differential();
  Rng rng(kSeed + 1);
  RandomShape shape;
  shape.op_degree = 3;
  const std::size_t n = 100;
  std::size_t commutator_ok = 0, found = 0, found_ok = 0;
  auto sum = [&](const Witness& w) {
    OrePoly s(ctx);
    for (const auto& [u, v] : w.terms) s += u * w.target * v;
    return s;
  };
  for (std::size_t i = 0; i < n; ++i) {
    const OrePoly a = random_nonzero_ore(rng, ctx, shape);
    const Witness w = commutator_witness(a);
    if (w.terms.size() == static_cast<std::size_t>(a.degree()) + 1 && sum(w).is_one()) ++commutator_ok;
    try {
      const Witness t = two_term_witness(a);
      ++found;
      if (t.terms.size() <= 2 && sum(t).is_one()) ++found_ok;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SearchExhausted) throw;
    }
  }
  std::ostringstream d;
  d << "commutator " << commutator_ok << "/" << n << "; two-term found " << found << "/" << n << " ("
    << (100.0 * found / n) << "%), verified " << found_ok << "/" << found;
  return {commutator_ok == n && found_ok == found, d.str()};
}

OreMat random_full(Rng& rng, std::size_t n) {
  const OreContext ctx = OreContext::differential();
  RandomShape shape;
  shape.op_degree = 2;
  shape.coeff_degree = 1;
  shape.polynomial = true;
  for (;;) {
    OreMat A = random_mat(rng, ctx, n, n, shape);
    if (mat_rank(A) == n) return A;
  }
}

bool jacobson_ok(const OreMat& A) {
  const std::size_t n = A.rows();
  const auto c = jacobson_form(A);
  if (!certificate_verify(c).ok) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const OrePoly& e = c.D(i, j);
      if (i != j && !e.is_zero()) return false;
      if (i == j && i + 1 < n && !e.is_one()) return false;
    }
  const OrePoly& f = c.D(n - 1, n - 1);
  return f.is_monic() && f.degree() == hermite_pivot_degree(A);
}

Outcome jacobson() {
  Rng rng(kSeed + 2);
  std::size_t p2 = 0, p3 = 0;
  for (int i = 0; i < 50; ++i) p2 += jacobson_ok(random_full(rng, 2));
  for (int i = 0; i < 20; ++i) p3 += jacobson_ok(random_full(rng, 3));
  return {p2 == 50 && p3 == 20, "2x2 " + std::to_string(p2) + "/50, 3x3 " + std::to_string(p3) + "/20",
          kJacobsonLimit};
}

Outcome named() {
  const OreContext ctx = OreContext::differential();
  const OrePoly d = OrePoly::D(ctx);
  std::string detail;
  bool ok = true;
  for (std::size_t n : {2u, 3u}) {
    const OreMat A = OreMat::diagonal(ctx, std::vector<OrePoly>(n, d));
    const auto c = jacobson_form(A);
    const int deg = c.D(n - 1, n - 1).degree();
    const bool this_ok = jacobson_ok(A) && deg == static_cast<int>(n) && hermite_pivot_degree(A) == deg;
    ok = ok && this_ok;
    detail += "diag(D x" + std::to_string(n) + ") deg f=" + std::to_string(deg) + " ";
  }
  return {ok, detail};
}

Outcome cli() {
  const OreContext ctx = OreContext::differential();
  Rng rng(kSeed + 3);
  RandomShape shape;
  std::size_t round = 0;
  for (int i = 0; i < 500; ++i) {
    const OrePoly a = random_ore(rng, ctx, shape);
    if (parse_ore(print_ore(a), ctx) == a) ++round;
  }
  const auto path = (std::filesystem::temp_directory_path() / "orered_acceptance_malformed.json").string();
  std::ofstream(path) << R"({"ring":{"type":"differential"},"rows":[["D","0"],["1"]]})";
  std::ostringstream sink;
  const int malformed = run_cli({"jacobson", path}, sink, sink);
  const int shift = run_cli({"--ring", "shift", "witness", "D"}, sink, sink);
  std::ostringstream d;
  d << "round trip " << round << "/500; malformed file exit " << malformed << "; shift witness exit " << shift;
  return {round == 500 && malformed == 2 && shift == 3, d.str()};
}

}  // namespace

int main() {
  run("theorem1-exhaustive-m2f2", theorem1);
  run("lemma3-4-exhaustive-m2f2-m2f3", lemma34);
  run("lemma5-diagnostic", lemma5);
  run("ore-arithmetic-500", arithmetic);
  run("witnesses-100", witnesses);
  run("jacobson-random", jacobson);
  run("jacobson-named", named);
  run("cli-roundtrip-exit-codes", cli);
  std::printf("%s: %d failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
