#include "dsg/polynomial.hpp"

#include <cmath>
#include <sstream>

#include "dsg/errors.hpp"

namespace dsg::poly {

namespace {
const Int kZero = 0;
}

Polynomial::Polynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
  normalize();
}

void Polynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::from_ints(std::initializer_list<long> coeffs) {
  std::vector<Int> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::monomial(const Int& c, std::size_t power) {
  if (c == 0) return Polynomial();
  std::vector<Int> v(power + 1, kZero);
  v[power] = c;
  return Polynomial(std::move(v));
}

const Int& Polynomial::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : kZero;
}

const Int& Polynomial::leading_coeff() const {
  if (c_.empty()) return kZero;
  return c_.back();
}

Int Polynomial::max_abs_coeff() const {
  Int m = 0;
  for (const Int& a : c_) {
    Int v = abs(a);
    if (v > m) m = v;
  }
  return m;
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * x + Rational(c_[i]);
  }
  return acc;
}

Int Polynomial::eval_int(const Int& x) const {
  Int acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * x + c_[i];
  }
  return acc;
}

int Polynomial::sign_at(const Int& p, const Int& q) const {
  // q^deg * P(p/q) via scaled Horner; q > 0 keeps the sign.
  if (c_.empty()) return 0;
  Int acc = c_.back();
  Int qpow = 1;
  for (std::size_t i = c_.size() - 1; i-- > 0;) {
    qpow *= q;
    acc = acc * p + c_[i] * qpow;
  }
  return sgn(acc);
}

double Polynomial::eval_double(double re) const {
  double acc = 0.0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * re + c_[i].get_d();
  }
  return acc;
}

double Polynomial::abs_at_complex(double re, double im) const {
  double ar = 0.0, ai = 0.0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    double nr = ar * re - ai * im + c_[i].get_d();
    double ni = ar * im + ai * re;
    ar = nr;
    ai = ni;
  }
  return std::hypot(ar, ai);
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<Int> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Int(i) * c_[i];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::inflate(std::size_t d) const {
  if (c_.empty() || d == 1) return *this;
  if (d == 0) throw PreconditionViolated("inflate: d must be positive");
  std::vector<Int> v((c_.size() - 1) * d + 1, kZero);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * d] = c_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::shift_up(std::size_t k) const {
  if (c_.empty() || k == 0) return *this;
  std::vector<Int> v(c_.size() + k, kZero);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i + k] = c_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::divide_by_x_minus_one(Int& rem) const {
  // Synthetic division: b_{i-1} = a_i + b_i, remainder = P(1).
  if (c_.empty()) {
    rem = 0;
    return Polynomial();
  }
  std::vector<Int> q(c_.size() > 1 ? c_.size() - 1 : 0, kZero);
  Int carry = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    carry += c_[i];
    if (i > 0) q[i - 1] = carry;
  }
  rem = carry;
  return Polynomial(std::move(q));
}

Int Polynomial::content() const {
  Int g = 0;
  for (const Int& a : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Polynomial Polynomial::primitive_part() const {
  Int g = content();
  if (g == 0 || g == 1) return *this;
  std::vector<Int> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    mpz_divexact(v[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
  std::vector<Int> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
  return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Int> v(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Int> v(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Int> v(a.c_.size() + b.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      v[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Polynomial(std::move(v));
}

Polynomial operator*(const Int& s, const Polynomial& a) {
  if (s == 0) return Polynomial();
  std::vector<Int> v(a.c_.size());
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = s * a.c_[i];
  return Polynomial(std::move(v));
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw InternalError("exact_divide: division by zero polynomial");
  if (a.is_zero()) return Polynomial();
  long da = a.degree(), db = b.degree();
  if (da < db) throw InternalError("exact_divide: not divisible (degree)");
  std::vector<Int> rem(a.coeffs());
  std::vector<Int> q(static_cast<std::size_t>(da - db) + 1, Int(0));
  const Int& lead = b.leading_coeff();
  for (long i = da; i >= db; --i) {
    Int& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    Int f;
    Int r;
    mpz_tdiv_qr(f.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    if (r != 0) throw InternalError("exact_divide: not divisible (coefficient)");
    q[static_cast<std::size_t>(i - db)] = f;
    for (long j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i - db + j)] -= f * b.coeff(static_cast<std::size_t>(j));
    }
  }
  for (const Int& r : rem) {
    if (r != 0) throw InternalError("exact_divide: nonzero remainder");
  }
  return Polynomial(std::move(q));
}

std::string Polynomial::to_text() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out << ',';
    out << c_[i].get_str();
  }
  return out.str();
}

Polynomial Polynomial::parse(const std::string& text) {
  std::vector<Int> c;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    auto first = item.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty coefficient in '" + text + "'");
    auto last = item.find_last_not_of(" \t\r\n");
    try {
      c.emplace_back(item.substr(first, last - first + 1));
    } catch (const std::invalid_argument&) {
      throw ParseError("malformed coefficient '" + item + "'");
    }
  }
  if (c.empty()) throw ParseError("empty polynomial text");
  return Polynomial(std::move(c));
}

Rational RatPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * x + c[i];
  }
  return acc;
}

}  // namespace dsg::poly
