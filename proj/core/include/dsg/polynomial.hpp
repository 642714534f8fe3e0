#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "dsg/rational.hpp"

namespace dsg::poly {

// Dense integer-coefficient polynomial; index = power.
// Invariant: no trailing zero coefficient; the zero polynomial stores nothing.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Int> coeffs);
  static Polynomial from_ints(std::initializer_list<long> coeffs);
  static Polynomial monomial(const Int& c, std::size_t power);

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Int& coeff(std::size_t i) const;
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& leading_coeff() const;
  Int max_abs_coeff() const;

  Rational eval(const Rational& x) const;
  Int eval_int(const Int& x) const;
  // Sign of the value at p/q without building the rational; q > 0 required.
  int sign_at(const Int& p, const Int& q) const;
  int sign_at(const Rational& x) const { return sign_at(x.get_num(), x.get_den()); }
  double eval_double(double re) const;
  // |P(re + i*im)| in doubles; visualization only.
  double abs_at_complex(double re, double im) const;

  Polynomial derivative() const;
  // Substitutes x -> x^d.
  Polynomial inflate(std::size_t d) const;
  // Multiplies by x^k.
  Polynomial shift_up(std::size_t k) const;
  // Quotient of division by (x - 1); remainder (= value at 1) written to rem.
  Polynomial divide_by_x_minus_one(Int& rem) const;

  // gcd of |coefficients|; 0 for the zero polynomial.
  Int content() const;
  // Divided by content; keeps sign; zero stays zero.
  Polynomial primitive_part() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Int& s, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  // Text format: comma-separated coefficients from degree 0 upward.
  std::string to_text() const;
  static Polynomial parse(const std::string& text);

 private:
  void normalize();
  std::vector<Int> c_;
};

// Exact quotient; throws InternalError if b does not divide a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

// Polynomial with rational coefficients; only evaluations are consumed.
struct RatPoly {
  std::vector<Rational> c;  // index = power
  long degree() const { return static_cast<long>(c.size()) - 1; }
  Rational eval(const Rational& x) const;
};

}  // namespace dsg::poly
