#pragma once

#include <gmpxx.h>

#include <string>

#include "dsg/errors.hpp"

namespace dsg {

using Int = mpz_class;
using Rational = mpq_class;  // kept canonical: reduced, denominator > 0

inline Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw ParseError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline int sgn(const Rational& q) { return sgn(q.get_num()); }

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational pow_rational(const Rational& base, unsigned long e) {
  return Rational(pow_int(base.get_num(), e), pow_int(base.get_den(), e));
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// Largest r with r^4 <= a; a >= 0.
inline Int floor_fourth_root(const Int& a) {
  Int r;
  mpz_root(r.get_mpz_t(), a.get_mpz_t(), 4);
  return r;
}

// Smallest r with r^4 >= a; a >= 0.
inline Int ceil_fourth_root(const Int& a) {
  Int r = floor_fourth_root(a);
  if (pow_int(r, 4) != a) r += 1;
  return r;
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Accepts "p" or "p/q"; q must be positive as written.
inline Rational parse_rational(const std::string& s) {
  auto bad = [&] { return ParseError("malformed rational '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den <= 0) throw bad();
    Rational q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw bad();
  }
}

// Canonical "p/q" form, denominator always written.
inline std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational parse_lambda(const std::string& s) {
  Rational l = parse_rational(s);
  if (l < 0 || l >= 1) throw LambdaOutOfRange(s);
  return l;
}

}  // namespace dsg
