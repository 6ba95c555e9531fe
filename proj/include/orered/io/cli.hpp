#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orered/finite/testbed.hpp"
#include "orered/io/formats.hpp"
#include "orered/ore_euclid.hpp"
#include "orered/ore_witness.hpp"
#include "orered/random.hpp"

namespace orered {

enum ExitCode : int { kExitOk = 0, kExitVerify = 1, kExitInput = 2, kExitContext = 3, kExitSearch = 4 };

inline int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotSimpleContext:
    case ErrorKind::UnsupportedContext: return kExitContext;
    case ErrorKind::SearchExhausted:
    case ErrorKind::WitnessTooLong: return kExitSearch;
    case ErrorKind::InvalidWitness: return kExitVerify;
    default: return kExitInput;
  }
}

/// ORE_SEED if set and numeric, else the built-in default.
inline std::uint64_t seed_from_env() {
  const char* s = std::getenv("ORE_SEED");
  if (!s || !*s) return kDefaultSeed;
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(s, &used, 0);
    if (s[used] != '\0') throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(ErrorKind::FormatError, std::string("ORE_SEED is not an unsigned integer: ") + s);
  }
}

// ---------------------------------------------------------------------------
// finite testbed reports

struct TestbedRing {
  std::size_t k;
  std::uint32_t p;
};

inline TestbedRing testbed_ring(const std::string& name) {
  if (name == "m2f2") return {2, 2};
  if (name == "m2f3") return {2, 3};
  if (name == "m3f2") return {3, 2};
  fail(ErrorKind::FormatError, "unknown testbed ring " + name);
}

namespace detail {

// Outcome of one testbed case: pass, verification failure, or the ring not
// supplying the witness the construction needs.
enum class CaseOutcome { Pass, Fail, Oracle };

struct Tally {
  std::size_t cases = 0, passed = 0, failed = 0, oracle = 0;
  json failures = json::array();
  json oracle_failures = json::array();

  void add(CaseOutcome o, const std::string& label, const std::string& why = {}) {
    ++cases;
    if (o == CaseOutcome::Pass) {
      ++passed;
    } else if (o == CaseOutcome::Fail) {
      ++failed;
      if (failures.size() < 20) failures.push_back({{"case", label}, {"reason", why}});
    } else {
      ++oracle;
      if (oracle_failures.size() < 20) oracle_failures.push_back({{"case", label}, {"reason", why}});
    }
  }
};

template <class F>
CaseOutcome run_case(F&& f, std::string& why) {
  try {
    return f() ? CaseOutcome::Pass : (why = "verification failed", CaseOutcome::Fail);
  } catch (const Error& e) {
    why = e.what();
    return e.kind() == ErrorKind::NoTwoTermWitness ? CaseOutcome::Oracle : CaseOutcome::Fail;
  }
}

inline std::vector<finite::FiniteElem> nonzero_elements(TestbedRing r, bool exhaustive, std::size_t sample, Rng& rng) {
  std::vector<finite::FiniteElem> out;
  const auto n = finite::FiniteElem::ring_size(r.k, r.p);
  if (exhaustive) {
    for (std::uint64_t c = 1; c < n; ++c) out.push_back(finite::FiniteElem::from_code(r.k, r.p, c));
    return out;
  }
  while (out.size() < sample) {
    auto e = random_finite(rng, r.k, r.p);
    if (!e.is_zero()) out.push_back(e);
  }
  return out;
}

}  // namespace detail

/// Runs one testbed check. Sampled runs draw `sample` elements (or pairs).
inline json testbed_report(TestbedRing r, const std::string& check, bool exhaustive, std::uint64_t seed,
                           std::size_t sample = 64) {
  using finite::FiniteElem;
  using finite::Lemma2Case;
  using detail::CaseOutcome;
  Rng rng(seed);
  detail::Tally tally;
  json extra = json::object();
  const auto t0 = std::chrono::steady_clock::now();

  auto each_element = [&](const std::function<bool(const FiniteElem&)>& f) {
    for (const auto& a : detail::nonzero_elements(r, exhaustive, sample, rng)) {
      std::string why;
      tally.add(detail::run_case([&] { return f(a); }, why), a.to_string(), why);
    }
  };

  if (check == "lemma2") {
    std::size_t case_a = 0, case_b = 0;
    each_element([&](const FiniteElem& a) {
      auto res = lemma2_witness(a);
      (res.which == Lemma2Case::A ? case_a : case_b) += 1;
      const FiniteElem target = res.which == Lemma2Case::A ? a : one_like(a) - a;
      return res.equivalence.verify(a) && res.witness.target == target && witness_verify(res.witness).ok &&
             res.witness.terms.size() <= 2;
    });
    extra = {{"case_a", case_a}, {"case_one_minus_a", case_b}};
  } else if (check == "lemma3") {
    each_element([](const FiniteElem& a) { return lemma3_unitize(a).verify(); });
  } else if (check == "lemma4") {
    each_element([](const FiniteElem& a) {
      auto res = lemma4_reduce(a);
      return res.record.verify() && res.reduction.verify(a, a) &&
             res.reduction.c == a - a * res.record.y * finite_inverse(res.record.u) * res.record.x * a;
    });
  } else if (check == "theorem1") {
    std::vector<std::pair<FiniteElem, FiniteElem>> pairs;
    std::size_t eligible = 0;
    if (exhaustive) {
      const auto all = detail::nonzero_elements(r, true, 0, rng);
      for (const auto& a : all)
        for (const auto& b : all)
          if (!(a * b).is_zero() || !(b * a).is_zero()) pairs.emplace_back(a, b);
      eligible = pairs.size();
    } else {
      while (pairs.size() < sample) {
        auto a = random_finite(rng, r.k, r.p), b = random_finite(rng, r.k, r.p);
        if (a.is_zero() || b.is_zero() || ((a * b).is_zero() && (b * a).is_zero())) continue;
        pairs.emplace_back(a, b);
      }
      eligible = pairs.size();
    }
    std::size_t mirrored = 0;
    for (const auto& [a, b] : pairs) {
      std::string why;
      auto outcome = detail::run_case(
          [&] {
            auto res = theorem1_reduce(a, b);
            mirrored += res.mirrored;
            return res.reduction.verify(a, b);
          },
          why);
      tally.add(outcome, a.to_string() + " " + b.to_string(), why);
    }
    extra = {{"eligible_pairs", eligible}, {"mirrored", mirrored}};
  } else if (check == "lemma5") {
    if (!finite::lemma5_ring_allowed(r.k, r.p)) fail(ErrorKind::RingTooLarge, "lemma 5 scan not available for this ring");
    const finite::Lemma5Report rep = finite::lemma5_scan(r.k, r.p);
    json rows = json::array();
    for (const auto& row : rep.rows) {
      rows.push_back({{"e", row.e.to_string()},
                      {"rank", row.rank},
                      {"two_term_e", row.witness_e},
                      {"two_term_one_minus_e", row.witness_one_minus_e},
                      {"lemma2_case", row.lemma2_case == Lemma2Case::A ? "a" : "one-minus-a"}});
      // the all-rows criterion is asserted on 2x2 rings only; 3x3 is a raw table
      const bool ok = r.k != 2 || row.witness_e;
      tally.add(ok ? CaseOutcome::Pass : CaseOutcome::Fail, row.e.to_string(), ok ? "" : "no two-term witness");
    }
    extra = {{"idempotents", rep.idempotent_count},
             {"every_nonzero_has_witness", rep.every_nonzero_has_witness()},
             {"dichotomy_held", rep.dichotomy_held()},
             {"asserted", r.k == 2},
             {"table", std::move(rows)}};
  } else {
    fail(ErrorKind::FormatError, "unknown testbed check " + check);
  }

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  json out = {{"ring", {{"k", r.k}, {"p", r.p}}},
              {"check", check},
              {"exhaustive", exhaustive || check == "lemma5"},
              {"seed", seed},
              {"cases", tally.cases},
              {"passed", tally.passed},
              {"failed", tally.failed},
              {"oracle_failures", tally.oracle},
              {"ok", tally.failed == 0},
              {"seconds", secs}};
  if (!tally.failures.empty()) out["failures"] = tally.failures;
  if (!tally.oracle_failures.empty()) out["oracle_failure_examples"] = tally.oracle_failures;
  for (auto& [key, v] : extra.items()) out[key] = v;
  return out;
}

// ---------------------------------------------------------------------------
// command line

namespace detail {

inline void print_witness(std::ostream& out, const Witness& w, const Symbols& sym) {
  out << "method = " << method_name(w.method) << "\n";
  out << "terms = " << w.nonzero_terms() << "\n";
  for (std::size_t i = 0; i < w.terms.size(); ++i) {
    out << "u" << i + 1 << " = " << print_ore(w.terms[i].first, sym) << "\n";
    out << "v" << i + 1 << " = " << print_ore(w.terms[i].second, sym) << "\n";
  }
  for (const auto& line : w.transcript) out << "# " << line << "\n";
}

struct SelftestCase {
  const char* name;
  std::function<bool()> run;
};

inline int selftest(std::ostream& out) {
  const OreContext ctx = OreContext::differential();
  auto P = [&](const char* s) { return parse_ore(s, ctx); };
  const std::vector<SelftestCase> cases = {
      {"commutation", [&] { return print_ore(P("D*x")) == "x*D + 1"; }},
      {"product", [&] { return P("(D+x)*(D-x)") == P("D^2 - x^2 - 1"); }},
      {"right division",
       [&] {
         auto r = ore_divmod(P("D^2"), P("D + x"), DivSide::Right);
         return r.q * P("D + x") + r.r == P("D^2") && r.r.degree() < 1;
       }},
      {"lclm", [&] { return ore_lcm(P("D"), P("x*D - 1"), LcmSide::Lclm).l == P("D^2"); }},
      {"commutator witness", [&] { return witness_verify(commutator_witness(P("D^2"))).ok; }},
      {"two-term witness", [&] { return witness_verify(two_term_witness(P("D^2"))).ok; }},
      {"jacobson diag(D, D)",
       [&] {
         auto c = jacobson_form(OreMat::diagonal(ctx, {P("D"), P("D")}));
         return certificate_verify(c).ok && c.D(1, 1).degree() == 2;
       }},
      {"testbed theorem1 m2f2",
       [&] { return testbed_report({2, 2}, "theorem1", true, kDefaultSeed)["ok"].get<bool>(); }},
  };
  bool all = true;
  for (const auto& c : cases) {
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception&) {
      ok = false;
    }
    all = all && ok;
    out << (ok ? "PASS " : "FAIL ") << c.name << "\n";
  }
  return all ? kExitOk : kExitVerify;
}

}  // namespace detail

/// Entry point shared by the binary and the tests. args excludes argv[0].
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ore polynomial arithmetic, simplicity witnesses and certified matrix reduction", "orered"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string ring_name = "differential";
  app.add_option("--ring", ring_name, "operator ring for expression arguments")
      ->check(CLI::IsMember({"differential", "shift"}));

  std::vector<std::string> operands;
  std::string side, method = "two-term", file, cert_out, tb_ring, tb_check;
  std::optional<std::uint64_t> seed_opt;
  bool exhaustive = false;

  auto* mul = app.add_subcommand("mul", "product A*B");
  mul->add_option("operands", operands, "A B")->expected(2)->required();

  auto* divmod = app.add_subcommand("divmod", "A = q*B + r (right) or A = B*q + r (left)");
  divmod->add_option("--side", side)->check(CLI::IsMember({"right", "left"}))->required();
  divmod->add_option("operands", operands, "A B")->expected(2)->required();

  auto* gcd = app.add_subcommand("gcd", "greatest common right or left divisor with cofactors");
  gcd->add_option("--side", side)->check(CLI::IsMember({"gcrd", "gcld"}))->required();
  gcd->add_option("operands", operands, "A B")->expected(2)->required();

  auto* lcm = app.add_subcommand("lcm", "least common left or right multiple");
  lcm->add_option("--side", side)->check(CLI::IsMember({"lclm", "lcrm"}))->required();
  lcm->add_option("operands", operands, "A B")->expected(2)->required();

  auto* wit = app.add_subcommand("witness", "terms u_i, v_i with sum u_i*A*v_i = 1");
  wit->add_option("--method", method)->check(CLI::IsMember({"two-term", "commutator"}));
  wit->add_option("--seed", seed_opt);
  wit->add_option("A", operands)->expected(1)->required();

  auto* herm = app.add_subcommand("hermite", "one-sided echelon form of a matrix file");
  herm->add_option("--side", side)->check(CLI::IsMember({"row", "column"}))->required();
  herm->add_option("FILE", file)->required();

  auto* jac = app.add_subcommand("jacobson", "certified P*A*Q = diag(1, ..., 1, f) (+) 0");
  jac->add_option("FILE", file)->required();
  jac->add_option("--certificate", cert_out, "write the certificate here instead of stdout");
  jac->add_option("--seed", seed_opt);

  auto* ver = app.add_subcommand("verify", "recheck a certificate file");
  ver->add_option("CERTFILE", file)->required();

  auto* tb = app.add_subcommand("testbed", "constructive checks over M_k(F_p)");
  tb->add_option("--ring", tb_ring)->check(CLI::IsMember({"m2f2", "m2f3", "m3f2"}))->required();
  tb->add_option("--check", tb_check)
      ->check(CLI::IsMember({"lemma2", "lemma3", "lemma4", "lemma5", "theorem1"}))
      ->required();
  tb->add_flag("--exhaustive", exhaustive);
  tb->add_option("--seed", seed_opt);

  auto* self = app.add_subcommand("selftest", "quick end-to-end checks");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    Ring ring;
    ring.ctx = ring_name == "shift" ? OreContext::shift() : OreContext::differential();
    const Symbols& sym = ring.sym;
    auto op = [&](std::size_t i) { return parse_ore(operands.at(i), ring.ctx, sym); };
    SearchPolicy policy;
    policy.seed = seed_opt ? *seed_opt : seed_from_env();

    if (mul->parsed()) {
      out << print_ore(op(0) * op(1), sym) << "\n";
    } else if (divmod->parsed()) {
      auto r = ore_divmod(op(0), op(1), side == "right" ? DivSide::Right : DivSide::Left);
      out << "q = " << print_ore(r.q, sym) << "\nr = " << print_ore(r.r, sym) << "\n";
    } else if (gcd->parsed()) {
      auto r = ore_xgcd(op(0), op(1), side == "gcrd" ? GcdSide::Gcrd : GcdSide::Gcld);
      out << "g = " << print_ore(r.g, sym) << "\nu = " << print_ore(r.u, sym) << "\nv = " << print_ore(r.v, sym)
          << "\n";
    } else if (lcm->parsed()) {
      auto r = ore_lcm(op(0), op(1), side == "lclm" ? LcmSide::Lclm : LcmSide::Lcrm);
      out << "l = " << print_ore(r.l, sym) << "\ns = " << print_ore(r.s, sym) << "\nt = " << print_ore(r.t, sym)
          << "\n";
    } else if (wit->parsed()) {
      const OrePoly a = op(0);
      const Witness w = method == "commutator" ? commutator_witness(a) : two_term_witness(a, policy);
      detail::print_witness(out, w, sym);
      if (!witness_verify(w).ok) {
        err << "witness does not verify\n";
        return kExitVerify;
      }
    } else if (herm->parsed()) {
      const MatrixFile mf = load_matrix_file(file);
      const bool row = side == "row";
      HermiteResult h = hermite_form(mf.A, row ? HermiteSide::Row : HermiteSide::Column);
      const auto t = row ? h.trace.materialize_left(mf.ring.ctx, mf.A.rows())
                         : h.trace.materialize_right(mf.ring.ctx, mf.A.cols());
      const bool ok = (row ? t.M * mf.A : mf.A * t.M) == h.H;
      json pivots = json::array();
      for (const auto& [i, j] : h.pivots) pivots.push_back({i, j});
      out << json{{"ring", ring_to_json(mf.ring)},
                  {"side", side},
                  {"H", matrix_to_json(h.H, mf.ring.sym)},
                  {row ? "P" : "Q", matrix_to_json(t.M, mf.ring.sym)},
                  {row ? "Pinv" : "Qinv", matrix_to_json(t.Minv, mf.ring.sym)},
                  {"pivots", std::move(pivots)},
                  {"rank", h.pivots.size()},
                  {"verified", ok}}
                 .dump(2)
          << "\n";
      if (!ok) return kExitVerify;
    } else if (jac->parsed()) {
      const MatrixFile mf = load_matrix_file(file);
      ReductionCertificate c = [&] {
        try {
          return jacobson_form(mf.A, policy);
        } catch (const WitnessTooLongError& e) {
          json partial = json::array();
          for (const auto& s : e.partial()) partial.push_back(step_to_json(s, mf.ring.sym));
          err << "partial transcript: " << partial.dump(2) << "\n";
          throw;
        }
      }();
      const VerifyReport rep = certificate_verify_full(c);
      const json doc = certificate_to_json(c, mf.ring, rep);
      if (cert_out.empty()) {
        out << doc.dump(2) << "\n";
      } else {
        std::ofstream f(cert_out);
        if (!(f << doc.dump(2) << "\n")) fail(ErrorKind::FormatError, "cannot write " + cert_out);
        const std::size_t r = diagonal_rank(c.D);
        out << "rank = " << r << "\n";
        if (r > 0) out << "f = " << print_ore(c.D(r - 1, r - 1), mf.ring.sym) << "\n";
        out << "verified = " << (rep.ok ? "true" : "false") << "\n";
      }
      if (!rep.ok) return kExitVerify;
    } else if (ver->parsed()) {
      const LoadedCertificate lc = certificate_from_json(parse_json_text(read_file(file)));
      const VerifyReport rep = certificate_verify_full(lc.cert);
      if (rep.ok) {
        out << "verified\n";
        return kExitOk;
      }
      for (const auto& f : rep.failures) out << "FAILED: " << f << "\n";
      return kExitVerify;
    } else if (tb->parsed()) {
      const json rep = testbed_report(testbed_ring(tb_ring), tb_check, exhaustive, policy.seed);
      out << rep.dump(2) << "\n";
      if (!rep["ok"].get<bool>()) return kExitVerify;
    } else if (self->parsed()) {
      return detail::selftest(out);
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

}  // namespace orered
