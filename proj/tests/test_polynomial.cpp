#include <random>
#include <vector>

#include "doctest.h"
#include "dsg/errors.hpp"
#include "dsg/polynomial.hpp"

using dsg::Int;
using dsg::Rational;
using dsg::poly::Polynomial;
using dsg::poly::RatPoly;

namespace {

Polynomial random_poly(std::mt19937_64& rng, int max_deg, long w) {
  std::uniform_int_distribution<int> deg_dist(0, max_deg);
  std::uniform_int_distribution<long> coeff_dist(-w, w);
  int deg = deg_dist(rng);
  std::vector<Int> c;
  for (int i = 0; i <= deg; ++i) c.emplace_back(coeff_dist(rng));
  return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("construction strips trailing zeros") {
  Polynomial p({Int(1), Int(2), Int(0), Int(0)});
  CHECK(p.degree() == 1);
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 2);
  CHECK(p.coeff(7) == 0);
  CHECK(Polynomial({Int(0), Int(0)}).is_zero());
  CHECK(Polynomial().degree() == -1);
  CHECK(Polynomial().leading_coeff() == 0);
}

TEST_CASE("monomial and from_ints") {
  Polynomial m = Polynomial::monomial(Int(-3), 4);
  CHECK(m.degree() == 4);
  CHECK(m.coeff(4) == -3);
  CHECK(m.coeff(2) == 0);
  CHECK(Polynomial::monomial(Int(0), 9).is_zero());
  Polynomial p = Polynomial::from_ints({1, 0, -2});
  CHECK(p.degree() == 2);
  CHECK(p.coeff(2) == -2);
}

TEST_CASE("ring identities on random polynomials") {
  std::mt19937_64 rng(101);
  for (int round = 0; round < 200; ++round) {
    Polynomial a = random_poly(rng, 6, 9);
    Polynomial b = random_poly(rng, 6, 9);
    Polynomial c = random_poly(rng, 6, 9);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK(a - a == Polynomial());
    CHECK(-(-a) == a);
    CHECK((a - b) + b == a);
  }
}

TEST_CASE("evaluation agrees across the three forms") {
  std::mt19937_64 rng(102);
  for (int round = 0; round < 200; ++round) {
    Polynomial p = random_poly(rng, 7, 20);
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 12);
    Rational x(num(rng), den(rng));
    x.canonicalize();
    Rational v = p.eval(x);
    CHECK(dsg::sgn(v) == p.sign_at(x));
    Int xi(num(rng));
    CHECK(p.eval(Rational(xi)) == Rational(p.eval_int(xi)));
  }
}

TEST_CASE("eval_double tracks exact evaluation") {
  Polynomial p = Polynomial::from_ints({-3, 0, 2, 5});
  double got = p.eval_double(1.5);
  double want = -3 + 2 * 1.5 * 1.5 + 5 * 1.5 * 1.5 * 1.5;
  CHECK(got == doctest::Approx(want));
  // |p(i)| on the imaginary axis: |-3 - 2 + (5i)^3 ... | computed directly.
  double abs_i = p.abs_at_complex(0.0, 1.0);
  // p(i) = -3 + 2 i^2 + 5 i^3 = -5 - 5i.
  CHECK(abs_i == doctest::Approx(std::sqrt(50.0)));
}

TEST_CASE("derivative satisfies the product rule") {
  std::mt19937_64 rng(103);
  for (int round = 0; round < 100; ++round) {
    Polynomial f = random_poly(rng, 5, 7);
    Polynomial g = random_poly(rng, 5, 7);
    CHECK((f * g).derivative() == f.derivative() * g + f * g.derivative());
  }
  CHECK(Polynomial::from_ints({5}).derivative().is_zero());
}

TEST_CASE("inflate substitutes x^d") {
  Polynomial p = Polynomial::from_ints({1, 2, 3});
  Polynomial q = p.inflate(3);
  CHECK(q.degree() == 6);
  CHECK(q.coeff(0) == 1);
  CHECK(q.coeff(3) == 2);
  CHECK(q.coeff(6) == 3);
  CHECK(q.coeff(2) == 0);
  Rational x(5, 3);
  CHECK(q.eval(x) == p.eval(x * x * x));
  CHECK_THROWS_AS(p.inflate(0), dsg::PreconditionViolated);
}

TEST_CASE("shift_up multiplies by a power of x") {
  Polynomial p = Polynomial::from_ints({4, -1});
  Polynomial q = p.shift_up(2);
  CHECK(q.degree() == 3);
  CHECK(q.coeff(2) == 4);
  CHECK(q.coeff(3) == -1);
  CHECK(q.coeff(0) == 0);
  CHECK(p.shift_up(0) == p);
}

TEST_CASE("synthetic division by x-1 inverts multiplication") {
  std::mt19937_64 rng(104);
  Polynomial xm1 = Polynomial::from_ints({-1, 1});
  for (int round = 0; round < 100; ++round) {
    Polynomial p = random_poly(rng, 8, 15);
    Int rem;
    Polynomial q = p.divide_by_x_minus_one(rem);
    CHECK(q * xm1 + Polynomial::monomial(rem, 0) == p);
    CHECK(rem == p.eval_int(Int(1)));
  }
}

TEST_CASE("content and primitive part") {
  Polynomial p = Polynomial::from_ints({6, -9, 12});
  CHECK(p.content() == 3);
  Polynomial pp = p.primitive_part();
  CHECK(pp == Polynomial::from_ints({2, -3, 4}));
  // The sign of the leading coefficient is kept.
  Polynomial m = Polynomial::from_ints({-6, -9});
  CHECK(m.primitive_part() == Polynomial::from_ints({-2, -3}));
  CHECK(Polynomial().content() == 0);
  CHECK(Polynomial().primitive_part().is_zero());
}

TEST_CASE("exact division") {
  std::mt19937_64 rng(105);
  for (int round = 0; round < 100; ++round) {
    Polynomial a = random_poly(rng, 5, 9);
    Polynomial b = random_poly(rng, 4, 9);
    if (b.is_zero()) continue;
    CHECK(dsg::poly::exact_divide(a * b, b) == a);
  }
  Polynomial p = Polynomial::from_ints({1, 1});
  CHECK_THROWS_AS(dsg::poly::exact_divide(p, Polynomial()), dsg::InternalError);
  CHECK_THROWS_AS(
      dsg::poly::exact_divide(Polynomial::from_ints({1, 0, 1}), p),
      dsg::InternalError);
}

TEST_CASE("text roundtrip") {
  std::mt19937_64 rng(106);
  for (int round = 0; round < 50; ++round) {
    Polynomial p = random_poly(rng, 9, 1000);
    CHECK(Polynomial::parse(p.to_text()) == p);
  }
  CHECK(Polynomial::parse("0").is_zero());
  CHECK(Polynomial::parse("0,0,0").is_zero());
  CHECK(Polynomial::parse(" 1 , -2 , 3 ") == Polynomial::from_ints({1, -2, 3}));
  CHECK_THROWS_AS(Polynomial::parse(""), dsg::ParseError);
  CHECK_THROWS_AS(Polynomial::parse("1,,2"), dsg::ParseError);
  CHECK_THROWS_AS(Polynomial::parse("1,x,2"), dsg::ParseError);
  CHECK_THROWS_AS(Polynomial::parse("1.5"), dsg::ParseError);
}

TEST_CASE("max_abs_coeff") {
  CHECK(Polynomial::from_ints({3, -7, 2}).max_abs_coeff() == 7);
  CHECK(Polynomial().max_abs_coeff() == 0);
}

TEST_CASE("rational-coefficient evaluation") {
  RatPoly g;
  g.c = {Rational(1, 2), Rational(0), Rational(-3, 4)};
  CHECK(g.degree() == 2);
  CHECK(g.eval(Rational(2)) == Rational(1, 2) - 3);
  CHECK(g.eval(Rational(0)) == Rational(1, 2));
}

TEST_CASE("sign_at handles large scaled arguments") {
  // p = x^3 - 2: sign flips at the cube root of 2.
  Polynomial p = Polynomial::from_ints({-2, 0, 0, 1});
  CHECK(p.sign_at(Int(5), Int(4)) == -1);    // 125/64 < 2
  CHECK(p.sign_at(Int(5), Int(5)) == -1);    // 1 < 2
  CHECK(p.sign_at(Int(63), Int(50)) == 1);   // (63/50)^3 = 2.000376...
  CHECK(Polynomial::from_ints({0}).sign_at(Int(1), Int(1)) == 0);
}
