#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "orered/error.hpp"

namespace orered {

// GMP keeps mpq_class canonical (reduced, positive denominator, 0 == 0/1) as
// long as every value is built through its arithmetic or canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) fail(ErrorKind::ZeroDenominator, "rational literal");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorKind::ZeroDenominator, "rational literal");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) fail(ErrorKind::SyntaxError, "bad rational '" + s + "'");
  if (r.get_den() == 0) fail(ErrorKind::ZeroDenominator, s);
  r.canonicalize();
  return r;
}

/// Bit length of numerator plus denominator; used for size statistics only.
inline std::size_t bit_size(const Rational& r) {
  return mpz_sizeinbase(r.get_num_mpz_t(), 2) + mpz_sizeinbase(r.get_den_mpz_t(), 2);
}

}  // namespace orered
