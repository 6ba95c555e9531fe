#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "orered/format.hpp"
#include "orered/io/parse.hpp"
#include "orered/matrix/jacobson.hpp"

namespace orered {

using json = nlohmann::json;

inline constexpr const char* kCertificateFormat = "orered-certificate/1";

struct Ring {
  OreContext ctx = OreContext::differential();
  Symbols sym;
};

struct MatrixFile {
  Ring ring;
  OreMat A;
};

namespace detail {

[[noreturn]] inline void format_error(const std::string& what) { fail(ErrorKind::FormatError, what); }

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) format_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::string string_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) format_error(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

inline bool valid_symbol(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

}  // namespace detail

inline json ring_to_json(const Ring& r) {
  return {{"type", r.ctx.name()}, {"var", r.sym.var}, {"op", r.sym.op}};
}

inline Ring ring_from_json(const json& j) {
  Ring r;
  const std::string type = detail::string_field(j, "type");
  if (type == "differential") r.ctx = OreContext::differential();
  else if (type == "shift") r.ctx = OreContext::shift();
  else detail::format_error("unknown ring type '" + type + "'");
  if (j.contains("var")) r.sym.var = detail::string_field(j, "var");
  if (j.contains("op")) r.sym.op = detail::string_field(j, "op");
  if (!detail::valid_symbol(r.sym.var) || !detail::valid_symbol(r.sym.op) || r.sym.var == r.sym.op)
    detail::format_error("ring symbols must be two distinct identifiers");
  return r;
}

inline json matrix_to_json(const OreMat& A, const Symbols& sym) {
  json rows = json::array();
  for (std::size_t i = 0; i < A.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < A.cols(); ++j) row.push_back(print_ore(A(i, j), sym));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Shape is checked in full before any entry is parsed.
inline OreMat matrix_from_json(const json& rows, const Ring& ring) {
  if (!rows.is_array() || rows.empty()) detail::format_error("rows must be a nonempty array");
  std::size_t width = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.empty()) detail::format_error("row " + std::to_string(i) + " must be a nonempty array");
    if (i == 0) width = row.size();
    if (row.size() != width)
      detail::format_error("ragged rows: row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                           " entries, expected " + std::to_string(width));
    for (const json& e : row)
      if (!e.is_string()) detail::format_error("matrix entries must be expression strings");
  }
  OreMat A(ring.ctx, rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < width; ++j) A(i, j) = parse_ore(rows[i][j].get<std::string>(), ring.ctx, ring.sym);
  return A;
}

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    detail::format_error(std::string("malformed JSON: ") + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) detail::format_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline MatrixFile matrix_file_from_json(const json& j) {
  Ring ring = ring_from_json(detail::field(j, "ring"));
  OreMat A = matrix_from_json(detail::field(j, "rows"), ring);
  return {ring, std::move(A)};
}

inline MatrixFile load_matrix_file(const std::string& path) {
  return matrix_file_from_json(parse_json_text(read_file(path)));
}

inline json matrix_file_to_json(const MatrixFile& f) {
  return {{"ring", ring_to_json(f.ring)}, {"rows", matrix_to_json(f.A, f.ring.sym)}};
}

// ---------------------------------------------------------------------------
// witnesses and certificates

namespace detail {

inline json poly_list(const std::vector<OrePoly>& v, const Symbols& sym) {
  json a = json::array();
  for (const auto& p : v) a.push_back(print_ore(p, sym));
  return a;
}

inline json term_list(const std::vector<std::pair<OrePoly, OrePoly>>& terms, const Symbols& sym) {
  json a = json::array();
  for (const auto& [u, v] : terms) a.push_back({print_ore(u, sym), print_ore(v, sym)});
  return a;
}

inline std::vector<OrePoly> poly_list_from(const json& a, const Ring& ring) {
  if (!a.is_array()) format_error("expected an array of expressions");
  std::vector<OrePoly> out;
  for (const json& e : a) {
    if (!e.is_string()) format_error("expected an expression string");
    out.push_back(parse_ore(e.get<std::string>(), ring.ctx, ring.sym));
  }
  return out;
}

inline std::vector<std::pair<OrePoly, OrePoly>> term_list_from(const json& a, const Ring& ring) {
  if (!a.is_array()) format_error("expected an array of terms");
  std::vector<std::pair<OrePoly, OrePoly>> out;
  for (const json& t : a) {
    auto uv = poly_list_from(t, ring);
    if (uv.size() != 2) format_error("a term is a pair [u, v]");
    out.emplace_back(std::move(uv[0]), std::move(uv[1]));
  }
  return out;
}

inline std::vector<std::string> strings_from(const json& a) {
  if (!a.is_array()) format_error("expected an array of strings");
  std::vector<std::string> out;
  for (const json& s : a) {
    if (!s.is_string()) format_error("expected a string");
    out.push_back(s.get<std::string>());
  }
  return out;
}

inline WitnessMethod method_from_name(const std::string& s) {
  for (auto m : {WitnessMethod::Unit, WitnessMethod::Commutator, WitnessMethod::TwoTerm, WitnessMethod::Split,
                 WitnessMethod::External})
    if (method_name(m) == s) return m;
  format_error("unknown witness method '" + s + "'");
}

}  // namespace detail

inline json witness_to_json(const Witness& w, const Symbols& sym) {
  return {{"target", print_ore(w.target, sym)},
          {"method", method_name(w.method)},
          {"terms", detail::term_list(w.terms, sym)},
          {"transcript", w.transcript}};
}

inline Witness witness_from_json(const json& j, const Ring& ring) {
  Witness w{parse_ore(detail::string_field(j, "target"), ring.ctx, ring.sym),
            detail::term_list_from(detail::field(j, "terms"), ring),
            detail::method_from_name(detail::string_field(j, "method")),
            {}};
  if (j.contains("transcript")) w.transcript = detail::strings_from(j.at("transcript"));
  return w;
}

inline json split_to_json(const SplitWitness& w, const Symbols& sym) {
  return {{"factors", detail::poly_list(w.factors, sym)},
          {"terms", detail::term_list(w.terms, sym)},
          {"transcript", w.transcript}};
}

inline SplitWitness split_from_json(const json& j, const Ring& ring) {
  SplitWitness w{detail::poly_list_from(detail::field(j, "factors"), ring),
                 detail::term_list_from(detail::field(j, "terms"), ring),
                 {}};
  if (j.contains("transcript")) w.transcript = detail::strings_from(j.at("transcript"));
  return w;
}

inline json step_to_json(const StepRecord& s, const Symbols& sym) {
  json j = {{"offset", s.offset},
            {"size", s.size},
            {"fast_path", s.fast_path},
            {"diagonal", detail::poly_list(s.diagonal, sym)},
            {"u", detail::poly_list(s.u, sym)},
            {"w", detail::poly_list(s.w, sym)}};
  if (s.fast_path) j["unit_index"] = s.unit_index;
  if (s.unit_entry) j["unit_entry"] = true;
  if (s.witness) j["witness"] = witness_to_json(*s.witness, sym);
  if (s.split) j["split"] = split_to_json(*s.split, sym);
  return j;
}

inline StepRecord step_from_json(const json& j, const Ring& ring) {
  StepRecord s;
  try {
    s.offset = detail::field(j, "offset").get<std::size_t>();
    s.size = detail::field(j, "size").get<std::size_t>();
    s.fast_path = detail::field(j, "fast_path").get<bool>();
    if (j.contains("unit_index")) s.unit_index = j.at("unit_index").get<std::size_t>();
    if (j.contains("unit_entry")) s.unit_entry = j.at("unit_entry").get<bool>();
  } catch (const json::type_error& e) {
    detail::format_error(std::string("bad step field: ") + e.what());
  }
  s.diagonal = detail::poly_list_from(detail::field(j, "diagonal"), ring);
  s.u = detail::poly_list_from(detail::field(j, "u"), ring);
  s.w = detail::poly_list_from(detail::field(j, "w"), ring);
  if (j.contains("witness")) s.witness = witness_from_json(j.at("witness"), ring);
  if (j.contains("split")) s.split = split_from_json(j.at("split"), ring);
  return s;
}

inline json certificate_to_json(const ReductionCertificate& c, const Ring& ring, const VerifyReport& report) {
  const Symbols& sym = ring.sym;
  json steps = json::array();
  for (const auto& s : c.steps) steps.push_back(step_to_json(s, sym));
  return {{"format", kCertificateFormat},
          {"ring", ring_to_json(ring)},
          {"A", matrix_to_json(c.A, sym)},
          {"P", matrix_to_json(c.P, sym)},
          {"Pinv", matrix_to_json(c.Pinv, sym)},
          {"Q", matrix_to_json(c.Q, sym)},
          {"Qinv", matrix_to_json(c.Qinv, sym)},
          {"D", matrix_to_json(c.D, sym)},
          {"steps", std::move(steps)},
          {"stats",
           {{"left_ops", c.stats.left_ops},
            {"right_ops", c.stats.right_ops},
            {"max_degree_P", c.stats.max_degree_P},
            {"max_degree_Q", c.stats.max_degree_Q},
            {"max_coefficient_degree", c.stats.max_coefficient_degree},
            {"bits", c.stats.bits}}},
          {"verdict", {{"ok", report.ok}, {"failures", report.failures}}}};
}

struct LoadedCertificate {
  Ring ring;
  ReductionCertificate cert;
};

inline LoadedCertificate certificate_from_json(const json& j) {
  if (detail::string_field(j, "format") != kCertificateFormat) detail::format_error("not an orered certificate");
  Ring ring = ring_from_json(detail::field(j, "ring"));
  auto mat = [&](const char* key) { return matrix_from_json(detail::field(j, key), ring); };
  ReductionCertificate c{mat("A"), mat("P"), mat("Pinv"), mat("Q"), mat("Qinv"), mat("D"), {}, {}};
  if (j.contains("steps")) {
    const json& steps = j.at("steps");
    if (!steps.is_array()) detail::format_error("steps must be an array");
    for (const json& s : steps) c.steps.push_back(step_from_json(s, ring));
  }
  return {ring, std::move(c)};
}

/// certificate_verify plus the witness transcripts of every peeling step.
inline VerifyReport certificate_verify_full(const ReductionCertificate& c) {
  VerifyReport rep = certificate_verify(c);
  for (std::size_t k = 0; k < c.steps.size(); ++k) {
    const StepRecord& s = c.steps[k];
    const std::string tag = "step " + std::to_string(k) + ": ";
    if (s.witness) rep.require(witness_verify(*s.witness).ok, tag + "witness does not sum to 1");
    if (s.split) rep.require(witness_verify(*s.split).ok, tag + "split witness does not sum to 1");
    if (s.u.size() == s.size && s.w.size() == s.size && s.diagonal.size() == s.size && !s.fast_path && s.split &&
        s.split->terms.size() == s.size) {
      // u * diag(eps) * v = 1 where the split terms carry v
      OrePoly sum = zero_like(c.A(0, 0));
      for (std::size_t i = 0; i < s.size; ++i) sum += s.u[i] * s.diagonal[i] * s.split->terms[i].second;
      rep.require(sum.is_one(), tag + "u * diag * v != 1");
    }
  }
  return rep;
}

}  // namespace orered
