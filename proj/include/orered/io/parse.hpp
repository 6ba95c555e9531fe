#pragma once

#include <cctype>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orered/error.hpp"
#include "orered/format.hpp"
#include "orered/ore_poly.hpp"

namespace orered {

class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t pos, std::vector<std::string> expected, const std::string& what)
      : Error(kind, what), pos_(pos), expected_(std::move(expected)) {}
  std::size_t position() const { return pos_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t pos_;
  std::vector<std::string> expected_;
};

/// Parse tree. Operands of Mul keep their written order.
struct OreExpr {
  enum class Kind { Number, Var, Op, Neg, Add, Sub, Mul, Div, Pow, Group };
  Kind kind = Kind::Number;
  Integer number;         // Number
  unsigned long exponent = 0;  // Pow
  std::size_t pos = 0;
  std::vector<std::unique_ptr<OreExpr>> kids;

  bool has_op() const {
    if (kind == Kind::Op) return true;
    for (const auto& k : kids)
      if (k->has_op()) return true;
    return false;
  }
};

namespace detail {

class Parser {
 public:
  Parser(std::string_view text, const Symbols& sym) : s_(text), sym_(sym) {}

  std::unique_ptr<OreExpr> run() {
    auto e = expr();
    skip();
    if (i_ != s_.size()) error({"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"});
    return e;
  }

 private:
  using Kind = OreExpr::Kind;

  std::string_view s_;
  const Symbols& sym_;
  std::size_t i_ = 0;

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }

  [[noreturn]] void error(std::vector<std::string> expected) {
    std::string msg = "at position " + std::to_string(i_) + ": expected ";
    for (std::size_t k = 0; k < expected.size(); ++k) msg += (k ? ", " : "") + expected[k];
    if (i_ < s_.size()) msg += ", found '" + std::string(1, s_[i_]) + "'";
    throw ParseError(ErrorKind::SyntaxError, i_, std::move(expected), msg);
  }

  static std::unique_ptr<OreExpr> node(Kind k, std::size_t pos) {
    auto e = std::make_unique<OreExpr>();
    e->kind = k;
    e->pos = pos;
    return e;
  }
  static std::unique_ptr<OreExpr> binary(Kind k, std::size_t pos, std::unique_ptr<OreExpr> a,
                                         std::unique_ptr<OreExpr> b) {
    auto e = node(k, pos);
    e->kids.push_back(std::move(a));
    e->kids.push_back(std::move(b));
    return e;
  }

  std::unique_ptr<OreExpr> expr() {
    auto lhs = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      const std::size_t pos = i_++;
      lhs = binary(c == '+' ? Kind::Add : Kind::Sub, pos, std::move(lhs), term());
    }
    return lhs;
  }

  std::unique_ptr<OreExpr> term() {
    auto lhs = factor();
    for (char c = peek(); c == '*' || c == '/'; c = peek()) {
      const std::size_t pos = i_++;
      auto rhs = factor();
      if (c == '/' && (lhs->has_op() || rhs->has_op()))
        throw ParseError(ErrorKind::DivByOperator, pos, {},
                         "at position " + std::to_string(pos) + ": division is only defined for " + sym_.op +
                             "-free operands");
      lhs = binary(c == '*' ? Kind::Mul : Kind::Div, pos, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  // factor := '-' factor | base ('^' uint)?
  std::unique_ptr<OreExpr> factor() {
    if (peek() == '-') {
      auto e = node(Kind::Neg, i_++);
      e->kids.push_back(factor());
      return e;
    }
    auto b = base();
    if (peek() != '^') return b;
    const std::size_t pos = i_++;
    skip();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ == start) error({"nonnegative integer exponent"});
    auto e = node(Kind::Pow, pos);
    try {
      e->exponent = std::stoul(std::string(s_.substr(start, i_ - start)));
    } catch (const std::out_of_range&) {
      i_ = start;
      error({"exponent below 2^32"});
    }
    e->kids.push_back(std::move(b));
    return e;
  }

  std::unique_ptr<OreExpr> base() {
    const char c = peek();
    const std::size_t pos = i_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      auto e = node(Kind::Number, pos);
      e->number = Integer(std::string(s_.substr(pos, i_ - pos)));
      return e;
    }
    if (c == '(') {
      ++i_;
      auto e = node(Kind::Group, pos);
      e->kids.push_back(expr());
      if (peek() != ')') error({"')'", "'+'", "'-'", "'*'", "'/'"});
      ++i_;
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      const std::string_view id = s_.substr(pos, i_ - pos);
      if (id == sym_.var) return node(Kind::Var, pos);
      if (id == sym_.op) return node(Kind::Op, pos);
      i_ = pos;
    }
    error({"number", "'" + sym_.var + "'", "'" + sym_.op + "'", "'('", "'-'"});
  }
};

inline RatFun eval_coefficient(const OreExpr& e);

inline OrePoly eval(const OreExpr& e, const OreContext& ctx) {
  using Kind = OreExpr::Kind;
  switch (e.kind) {
    case Kind::Number: return OrePoly(ctx, RatFun(UniPoly(Rational(e.number))));
    case Kind::Var: return OrePoly::x(ctx);
    case Kind::Op: return OrePoly::D(ctx);
    case Kind::Neg: return -eval(*e.kids[0], ctx);
    case Kind::Group: return eval(*e.kids[0], ctx);
    case Kind::Add: {
      OrePoly a = eval(*e.kids[0], ctx);
      a += eval(*e.kids[1], ctx);
      return a;
    }
    case Kind::Sub: {
      OrePoly a = eval(*e.kids[0], ctx);
      a -= eval(*e.kids[1], ctx);
      return a;
    }
    case Kind::Mul: return eval(*e.kids[0], ctx) * eval(*e.kids[1], ctx);
    case Kind::Div: return OrePoly(ctx, eval_coefficient(e));
    case Kind::Pow: {
      if (!e.kids[0]->has_op()) return OrePoly(ctx, eval_coefficient(e));
      const OrePoly b = eval(*e.kids[0], ctx);
      OrePoly r = OrePoly::one(ctx);
      for (unsigned long k = 0; k < e.exponent; ++k) r = r * b;
      return r;
    }
  }
  return OrePoly(ctx);
}

// D-free subtrees evaluate in the coefficient field.
inline RatFun eval_coefficient(const OreExpr& e) {
  using Kind = OreExpr::Kind;
  switch (e.kind) {
    case Kind::Number: return RatFun(UniPoly(Rational(e.number)));
    case Kind::Var: return RatFun(UniPoly::x());
    case Kind::Neg: return -eval_coefficient(*e.kids[0]);
    case Kind::Group: return eval_coefficient(*e.kids[0]);
    case Kind::Add: return eval_coefficient(*e.kids[0]) + eval_coefficient(*e.kids[1]);
    case Kind::Sub: return eval_coefficient(*e.kids[0]) - eval_coefficient(*e.kids[1]);
    case Kind::Mul: return eval_coefficient(*e.kids[0]) * eval_coefficient(*e.kids[1]);
    case Kind::Div: {
      const RatFun d = eval_coefficient(*e.kids[1]);
      if (d.is_zero())
        throw ParseError(ErrorKind::DivisionByZero, e.pos, {},
                         "at position " + std::to_string(e.pos) + ": division by zero");
      return eval_coefficient(*e.kids[0]) / d;
    }
    case Kind::Pow: {
      const RatFun b = eval_coefficient(*e.kids[0]);
      RatFun r(UniPoly(Rational(1)));
      for (unsigned long k = 0; k < e.exponent; ++k) r = r * b;
      return r;
    }
    case Kind::Op: break;
  }
  fail(ErrorKind::DivByOperator, "operator symbol in a coefficient");
}

}  // namespace detail

inline std::unique_ptr<OreExpr> parse_expr(std::string_view text, const Symbols& sym = {}) {
  return detail::Parser(text, sym).run();
}

inline OrePoly parse_ore(std::string_view text, const OreContext& ctx, const Symbols& sym = {}) {
  return detail::eval(*parse_expr(text, sym), ctx);
}

}  // namespace orered
