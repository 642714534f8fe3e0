#pragma once

#include <vector>

#include "dsg/polynomial.hpp"
#include "dsg/rational.hpp"

namespace dsg::poly {

// Open interval with a sign change of the certified (square-free) polynomial;
// contains exactly one real root.
struct RootInterval {
  Rational lo, hi;
  int sign_lo = 0, sign_hi = 0;
};

// Signed-remainder chain with positive-multiplier pseudo-remainders and
// primitive reduction; first element is the input, second its derivative.
std::vector<Polynomial> sturm_chain(const Polynomial& p);

// Sign variations of the chain at x, zeros skipped.
int sign_variations(const std::vector<Polynomial>& chain, const Rational& x);

// Largest k with (x-1)^k dividing p.
int root_order_at_one(const Polynomial& p);

// j-th derivative at 1 via falling factorials: sum of j!*C(i,j)*a_i;
// asserts divisibility by j!.
Int derivative_at_one(const Polynomial& p, unsigned long j);
// Additionally asserts |P^j(1)| <= W (N+1)^(j+1) given the coefficient
// bound W >= max |a_i|.
Int derivative_at_one(const Polynomial& p, unsigned long j, const Int& w);

// p divided by gcd(p, p'): same distinct roots, all simple.
Polynomial square_free_part(const Polynomial& p);

// Primitive gcd over the integers, leading coefficient positive; a constant
// polynomial 1 when the inputs are coprime.
Polynomial primitive_gcd(const Polynomial& a, const Polynomial& b);

// Strict bound B with every real root of p inside (-B, B).
Int cauchy_root_bound(const Polynomial& p);

// Distinct real roots of p in the open interval (lo, hi), as disjoint
// isolating intervals of the square-free part, sorted ascending.
std::vector<RootInterval> isolate_real_roots(const Polynomial& p,
                                             const Rational& lo,
                                             const Rational& hi);
// Same over (-B, B) covering every real root.
std::vector<RootInterval> isolate_real_roots(const Polynomial& p);

// Number of distinct real roots of square-free r in (lo, hi); endpoints must
// not be roots.
int count_roots_open(const Polynomial& r, const std::vector<Polynomial>& chain,
                     const Rational& lo, const Rational& hi);

// One bisection step; the sign-change certificate is kept even when the
// midpoint is an exact root.
RootInterval refine_once(const Polynomial& square_free, const RootInterval& iv);

// Shrinks a certified interval below the requested width; sign change kept.
RootInterval refine_root_interval(const Polynomial& square_free, RootInterval iv,
                                  const Rational& width);

// Refines iv until the point lies strictly outside the closed [lo, hi]; the
// contained root must differ from the point.
RootInterval refine_away_from(const Polynomial& square_free, RootInterval iv,
                              const Rational& point);

}  // namespace dsg::poly
