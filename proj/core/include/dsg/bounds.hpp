#pragma once

#include <vector>

#include "dsg/polynomial.hpp"
#include "dsg/rational.hpp"
#include "dsg/roots.hpp"

namespace dsg::poly {

// floor((c_num/c_den) * (W * N^2)^(1/4)): the largest t with
// (c_den*t)^4 <= c_num^4 * W * N^2. Exact integer arithmetic throughout.
Int floor_scaled_fourth_root(unsigned long c_num, unsigned long c_den,
                             const Int& w, const Int& n);
// ceil counterpart: the smallest t with (c_den*t)^4 >= c_num^4 * W * N^2.
Int ceil_scaled_fourth_root(unsigned long c_num, unsigned long c_den,
                            const Int& w, const Int& n);

// floor((16/7) W^(1/4) sqrt(N)) + 4; max root order at 1 over degree-N
// polynomials with |coefficients| <= W.
Int order_bound(const Int& n, const Int& w);

// floor((16/7) W^(1/4) sqrt(N))! / (2 W (N+1)^(ceil((16/7) W^(1/4) sqrt(N)) + 6)).
// The exponent is rounded up, which only decreases the bound.
Rational root_gap_lower_bound(const Int& n, const Int& w);

// T_0 = 1, T_1 = x, T_{t+1} = 2x T_t - T_{t-1}.
Polynomial chebyshev(unsigned long t);

// g = T_0/2 + sum_{t=1..mu} T_t; degree mu, g(1) = mu + 1/2.
RatPoly build_g(unsigned long mu);

struct FPropertyCheck {
  bool holds = false;
  Rational f_at_zero;    // (mu + 1/2)^4
  Rational weighted_sum; // W * sum_{i=1..N} F(i)
  unsigned long mu = 0;
};
// F(x) = g(1 - 2x/N)^4 with mu = floor((4/7) W^(1/4) sqrt(N)) + 1; checks
// F(0) > W * sum_{i=1..N} |F(i)| by exact evaluation at the integers 0..N.
FPropertyCheck verify_F_property(unsigned long n, unsigned long w);

// True iff sum_i a_i * i^j = 0 for every j < k, over the polynomial with
// trailing x-powers stripped.
bool moment_vanishing_check(const Polynomial& p, unsigned long k);

// x^(M - 2^L + 1) * prod_{i=0..L-1} (x^(2^i) - 1) with L = floor(log2 M):
// degree M, coefficients in {-1,0,1}, root order at 1 exactly L. M >= 2.
Polynomial constructive_seed(unsigned long m);

// H(x) = (x^d - 1) F(x^d) (1 + x + ... + x^(d-1)) + F(x);
// degree d*(deg F + 2) - 1, root order at 1 preserved.
Polynomial lasso_amplify(const Polynomial& f, unsigned long d);

struct SignFlipCertificate {
  bool certified = false;
  Rational beta;        // 1 - 2/d^(k+2)
  int k = 0;            // root order of F at 1
  Int f_at_one;         // f(1) with F = (x-1)^k f
  Int f_deriv_at_one;   // f'(1)
  Int h_degree;         // d*(deg F + 2) - 1
  Rational lhs;         // -2 f'(1)/d^(k+2) - f(1) + 16 (N+1)^(k+3)/((k+2)! d^(2k+4))
};

// Certifies that H = lasso_amplify(F, d) has a real root in (beta, 1) without
// constructing H: checks k >= 9, f(1) >= 1, d^2 >= (deg F + 2)^3,
// (N+1)^3 <= d^5, then evaluates the exact inequality lhs < 0.
SignFlipCertificate certify_sign_flip(const Polynomial& f, const Int& d);
// Same arithmetic with the k >= 9 and d-size gates skipped; for cross-checks
// at parameters where H itself is small enough to isolate.
SignFlipCertificate sign_flip_terms(const Polynomial& f, const Int& d);

// First pair of distinct {0,1}-coefficient polynomials of degree <= N with
// equal derivative signatures (Q(1), ..., Q^(k-1)(1)), scanned in ascending
// bit-mask order; returns their difference: {-1,0,1} coefficients, root order
// >= k at 1. Requires (N+1)^(k(k+1)/2) < 2^(N+1) and N <= 26.
Polynomial pigeonhole_search(unsigned long n, unsigned long k);

struct MinGapResult {
  Rational gap_lo, gap_hi;  // certified interval around min |1 - root|
  Polynomial witness;       // lexicographically first achiever
  unsigned long long searched = 0;
};

// Exhaustive scan of coefficient vectors in [-W,W]^(N+1): isolates every real
// root != 1 and returns the smallest distance to 1 as a certified interval.
// Asserts gap_lo > root_gap_lower_bound(N, W).
MinGapResult enumerate_min_gap(unsigned long n, unsigned long w,
                               unsigned long long guard = 10000000ULL);

}  // namespace dsg::poly
