#pragma once

#include <string>
#include <vector>

#include "orered/ore_poly.hpp"

namespace orered {

/// Symbol names used when printing or parsing operators.
struct Symbols {
  std::string var = "x";
  std::string op = "D";
};

namespace detail {

struct SignedPiece {
  bool negative = false;
  std::string text;  // printed magnitude
};

inline std::string constant_text(const Rational& magnitude) {
  if (is_integer(magnitude)) return magnitude.get_str();
  return "(" + magnitude.get_str() + ")";
}

inline std::string power_text(const std::string& sym, std::size_t k) {
  return k == 1 ? sym : sym + "^" + std::to_string(k);
}

// Monomials of p in decreasing degree, signs split off.
inline std::vector<SignedPiece> monomials(const UniPoly& p, const Symbols& sym) {
  std::vector<SignedPiece> out;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    Rational mag = abs(c[k]);
    SignedPiece piece{c[k] < 0, {}};
    if (k == 0) piece.text = constant_text(mag);
    else if (mag == 1) piece.text = power_text(sym.var, k);
    else piece.text = constant_text(mag) + "*" + power_text(sym.var, k);
    out.push_back(std::move(piece));
  }
  return out;
}

inline std::string join(const std::vector<SignedPiece>& pieces) {
  if (pieces.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i == 0) s += pieces[i].negative ? "-" : "";
    else s += pieces[i].negative ? " - " : " + ";
    s += pieces[i].text;
  }
  return s;
}

inline std::string atom(const UniPoly& p, const Symbols& sym) {
  auto m = monomials(p, sym);
  std::string s = join(m);
  return m.size() > 1 ? "(" + s + ")" : s;
}

// A nonpolynomial rational function as one signed piece.
inline SignedPiece fraction_piece(const RatFun& f, const Symbols& sym) {
  auto m = monomials(f.num(), sym);
  SignedPiece piece;
  std::string num;
  if (m.size() == 1) {
    piece.negative = m[0].negative;
    num = m[0].text;
  } else {
    num = "(" + join(m) + ")";
  }
  piece.text = num + "/" + atom(f.den(), sym);
  return piece;
}

}  // namespace detail

inline std::string print_unipoly(const UniPoly& p, const Symbols& sym = {}) {
  return detail::join(detail::monomials(p, sym));
}

inline std::string print_ratfun(const RatFun& f, const Symbols& sym = {}) {
  if (f.is_polynomial()) return print_unipoly(f.num(), sym);
  auto piece = detail::fraction_piece(f, sym);
  return detail::join({piece});
}

/// Canonical text of an operator: terms by decreasing D-power, composite
/// coefficients parenthesized. parse_ore(print_ore(a)) == a.
inline std::string print_ore(const OrePoly& a, const Symbols& sym = {}) {
  using detail::SignedPiece;
  std::vector<SignedPiece> pieces;
  const auto& c = a.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    const RatFun& f = c[i];
    if (f.is_zero()) continue;
    if (i == 0) {
      if (f.is_polynomial()) {
        for (auto& m : detail::monomials(f.num(), sym)) pieces.push_back(std::move(m));
      } else {
        pieces.push_back(detail::fraction_piece(f, sym));
      }
      continue;
    }
    const std::string dpow = detail::power_text(sym.op, i);
    if (f.is_polynomial()) {
      auto m = detail::monomials(f.num(), sym);
      if (m.size() == 1) {
        SignedPiece piece{m[0].negative, m[0].text == "1" ? dpow : m[0].text + "*" + dpow};
        pieces.push_back(std::move(piece));
      } else {
        pieces.push_back({false, "(" + detail::join(m) + ")*" + dpow});
      }
    } else {
      auto piece = detail::fraction_piece(f, sym);
      piece.text = "(" + piece.text + ")*" + dpow;
      pieces.push_back(std::move(piece));
    }
  }
  return detail::join(pieces);
}

}  // namespace orered
