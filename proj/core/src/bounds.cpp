#include "dsg/bounds.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dsg/errors.hpp"

namespace dsg::poly {

Int floor_scaled_fourth_root(unsigned long c_num, unsigned long c_den,
                             const Int& w, const Int& n) {
  if (c_num < 1 || c_den < 1 || w < 1 || n < 1) {
    throw PreconditionViolated("scaled fourth root requires positive arguments");
  }
  Int a = pow_int(Int(c_num), 4);
  a *= w;
  a *= n;
  a *= n;
  // floor((c/d) A^(1/4)) = floor(floor((c^4 A)^(1/4)) / d).
  return floor_div(floor_fourth_root(a), Int(c_den));
}

Int ceil_scaled_fourth_root(unsigned long c_num, unsigned long c_den,
                            const Int& w, const Int& n) {
  if (c_num < 1 || c_den < 1 || w < 1 || n < 1) {
    throw PreconditionViolated("scaled fourth root requires positive arguments");
  }
  Int a = pow_int(Int(c_num), 4);
  a *= w;
  a *= n;
  a *= n;
  return ceil_div(ceil_fourth_root(a), Int(c_den));
}

Int order_bound(const Int& n, const Int& w) {
  return floor_scaled_fourth_root(16, 7, w, n) + 4;
}

Rational root_gap_lower_bound(const Int& n, const Int& w) {
  Int kf = floor_scaled_fourth_root(16, 7, w, n);
  Int kc = ceil_scaled_fourth_root(16, 7, w, n);
  if (!kf.fits_ulong_p() || !kc.fits_ulong_p() || kf > 1000000) {
    throw SearchSpaceTooLarge("root_gap_lower_bound: factorial argument too large");
  }
  Int den = 2 * w * pow_int(Int(n + 1), kc.get_ui() + 6);
  return make_rational(factorial(kf.get_ui()), den);
}

Polynomial chebyshev(unsigned long t) {
  Polynomial prev = Polynomial::from_ints({1});
  if (t == 0) return prev;
  Polynomial cur = Polynomial::from_ints({0, 1});
  for (unsigned long i = 1; i < t; ++i) {
    Polynomial next = Int(2) * cur.shift_up(1) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace {

// 2g = T_0 + 2 * sum_{t=1..mu} T_t, computed along the recurrence.
Polynomial doubled_g(unsigned long mu) {
  Polynomial prev = Polynomial::from_ints({1});
  Polynomial cur = Polynomial::from_ints({0, 1});
  Polynomial twice = prev;
  for (unsigned long t = 1; t <= mu; ++t) {
    twice = twice + Int(2) * cur;
    Polynomial next = Int(2) * cur.shift_up(1) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  if (twice.degree() != static_cast<long>(mu) ||
      twice.eval_int(Int(1)) != Int(2 * mu + 1)) {
    throw InternalError("doubled Chebyshev sum failed its endpoint identity");
  }
  return twice;
}

}  // namespace

RatPoly build_g(unsigned long mu) {
  if (mu < 1) throw PreconditionViolated("build_g requires mu >= 1");
  Polynomial twice = doubled_g(mu);
  RatPoly g;
  g.c.reserve(twice.coeffs().size());
  for (const Int& c : twice.coeffs()) g.c.push_back(make_rational(c, Int(2)));
  return g;
}

FPropertyCheck verify_F_property(unsigned long n, unsigned long w) {
  if (n < 1 || w < 1) {
    throw PreconditionViolated("verify_F_property requires N >= 1 and W >= 1");
  }
  Int mu_i = floor_scaled_fourth_root(4, 7, Int(w), Int(n)) + 1;
  FPropertyCheck out;
  out.mu = mu_i.get_ui();
  RatPoly g = build_g(out.mu);
  out.f_at_zero = pow_rational(g.eval(Rational(1)), 4);
  if (out.f_at_zero != pow_rational(make_rational(Int(2 * out.mu + 1), Int(2)), 4)) {
    throw InternalError("F(0) != (mu + 1/2)^4");
  }
  Rational sum(0);
  for (unsigned long i = 1; i <= n; ++i) {
    Rational x = make_rational(Int(n) - Int(2) * Int(i), Int(n));
    sum += pow_rational(g.eval(x), 4);
  }
  out.weighted_sum = Rational(w) * sum;
  out.holds = out.f_at_zero > out.weighted_sum;
  return out;
}

bool moment_vanishing_check(const Polynomial& p, unsigned long k) {
  if (p.is_zero()) throw ZeroPolynomial("moment_vanishing_check");
  for (unsigned long j = 0; j < k; ++j) {
    Int m = 0;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
      if (p.coeff(i) == 0) continue;
      m += p.coeff(i) * ((j == 0) ? Int(1) : pow_int(Int(i), j));
    }
    if (m != 0) return false;
  }
  return true;
}

Polynomial constructive_seed(unsigned long m) {
  if (m < 2) throw PreconditionViolated("constructive_seed requires M >= 2");
  unsigned long l = 0;
  while (l + 1 < 62 && (1ULL << (l + 1)) <= m) ++l;
  unsigned long block = 1ULL << l;
  unsigned long shift = m - block + 1;
  std::vector<Int> c(m + 1);
  // Coefficient of x^e in prod_{i<L} (x^(2^i) - 1) is (-1)^(L - popcount(e)):
  // every exponent below 2^L is a unique subset sum of the powers.
  for (unsigned long long e = 0; e < block; ++e) {
    bool neg = ((l - static_cast<unsigned long>(std::popcount(e))) % 2) != 0;
    c[shift + e] = neg ? -1 : 1;
  }
  Polynomial seed{std::move(c)};
  if (seed.degree() != static_cast<long>(m)) {
    throw InternalError("constructive seed degree mismatch");
  }
  return seed;
}

Polynomial lasso_amplify(const Polynomial& f, unsigned long d) {
  if (f.is_zero()) throw ZeroPolynomial("lasso_amplify");
  if (d < 1) throw PreconditionViolated("lasso_amplify requires d >= 1");
  Polynomial fd = f.inflate(d);
  Polynomial a = fd.shift_up(d) - fd;  // (x^d - 1) f(x^d)
  std::size_t da = static_cast<std::size_t>(a.degree());
  // Multiplication by 1 + x + ... + x^(d-1) as a running window sum.
  std::vector<Int> b(da + d);
  Int acc = 0;
  for (std::size_t t = 0; t < b.size(); ++t) {
    if (t <= da) acc += a.coeff(t);
    if (t >= d) acc -= a.coeff(t - d);
    b[t] = acc;
  }
  Polynomial h = Polynomial{std::move(b)} + f;
  if (Int(h.degree()) != Int(d) * (f.degree() + 2) - 1) {
    throw InternalError("amplified polynomial degree mismatch");
  }
  return h;
}

namespace {

SignFlipCertificate sign_flip_core(const Polynomial& f_in, const Int& d,
                                   bool strict) {
  if (f_in.is_zero()) throw ZeroPolynomial("sign-flip certificate");
  if (d < 2) throw PreconditionViolated("sign-flip certificate requires d >= 2");
  SignFlipCertificate cert;
  cert.k = root_order_at_one(f_in);
  if (strict && cert.k < 9) {
    throw PreconditionViolated("root order at 1 is " + std::to_string(cert.k) +
                               ", need at least 9");
  }
  Polynomial f = f_in;
  for (int i = 0; i < cert.k; ++i) {
    Int rem;
    f = f.divide_by_x_minus_one(rem);
  }
  cert.f_at_one = f.eval_int(Int(1));
  if (cert.f_at_one <= 0) {
    throw PreconditionViolated("co-factor value at 1 must be positive; negate the input");
  }
  Int dplus = Int(f_in.degree()) + 2;
  if (strict && d * d < pow_int(dplus, 3)) {
    throw PreconditionViolated("d^2 must be at least (deg + 2)^3");
  }
  cert.h_degree = d * dplus - 1;
  Int np1 = cert.h_degree + 1;
  if (strict && pow_int(np1, 3) > pow_int(d, 5)) {
    throw PreconditionViolated("(deg H + 1)^3 must not exceed d^5");
  }
  cert.f_deriv_at_one = (f.degree() >= 1) ? derivative_at_one(f, 1) : Int(0);
  unsigned long k = static_cast<unsigned long>(cert.k);
  Int dk2 = pow_int(d, k + 2);
  cert.beta = make_rational(Int(dk2 - 2), dk2);
  Rational tail = make_rational(Int(16 * pow_int(np1, k + 3)),
                                Int(factorial(k + 2) * pow_int(d, 2 * k + 4)));
  cert.lhs = make_rational(Int(-2 * cert.f_deriv_at_one), dk2) -
             Rational(cert.f_at_one) + tail;
  cert.certified = sgn(cert.lhs) < 0;
  return cert;
}

}  // namespace

SignFlipCertificate certify_sign_flip(const Polynomial& f, const Int& d) {
  return sign_flip_core(f, d, true);
}

SignFlipCertificate sign_flip_terms(const Polynomial& f, const Int& d) {
  return sign_flip_core(f, d, false);
}

Polynomial pigeonhole_search(unsigned long n, unsigned long k) {
  if (n < 1 || k < 1) {
    throw PreconditionViolated("pigeonhole_search requires N >= 1 and k >= 1");
  }
  if (n > 26) throw SearchSpaceTooLarge("pigeonhole scan admits N <= 26 only");
  if (pow_int(Int(n + 1), k * (k + 1) / 2) >= pow_int(Int(2), n + 1)) {
    throw CountingConditionFails("(N+1)^(k(k+1)/2) < 2^(N+1) fails for N = " +
                                 std::to_string(n) + ", k = " + std::to_string(k));
  }
  // ff[i][j] = i (i-1) ... (i-j+1); signature entry j of Q is sum a_i ff[i][j].
  std::vector<std::vector<Int>> ff(n + 1, std::vector<Int>(k));
  for (unsigned long i = 0; i <= n; ++i) {
    ff[i][0] = 1;
    for (unsigned long j = 1; j < k; ++j) {
      ff[i][j] = ff[i][j - 1] * (Int(i) - Int(j - 1));
    }
  }
  std::map<std::vector<Int>, unsigned long long> seen;
  const unsigned long long total = 1ULL << (n + 1);
  for (unsigned long long mask = 0; mask < total; ++mask) {
    std::vector<Int> sig(k, Int(0));
    for (unsigned long i = 0; i <= n; ++i) {
      if (!(mask >> i & 1ULL)) continue;
      for (unsigned long j = 0; j < k; ++j) sig[j] += ff[i][j];
    }
    auto [it, inserted] = seen.emplace(std::move(sig), mask);
    if (!inserted) {
      const unsigned long long first = it->second;
      std::vector<Int> diff(n + 1);
      for (unsigned long i = 0; i <= n; ++i) {
        diff[i] = static_cast<long>(first >> i & 1ULL) -
                  static_cast<long>(mask >> i & 1ULL);
      }
      Polynomial q{std::move(diff)};
      if (q.is_zero() || root_order_at_one(q) < static_cast<int>(k)) {
        throw InternalError("pigeonhole difference fails its order guarantee");
      }
      return q;
    }
  }
  throw InternalError("pigeonhole scan found no collision");
}

namespace {

// Candidate root with a certified distance interval to 1.
struct GapCandidate {
  Polynomial sf;  // square-free, the root strictly inside iv, never 1
  RootInterval iv;
  bool below_one = false;
  Rational dlo, dhi;  // open interval around |1 - root|
  Polynomial witness;
};

void set_distance(GapCandidate& c) {
  if (c.below_one) {
    c.dlo = Rational(1) - c.iv.hi;
    c.dhi = Rational(1) - c.iv.lo;
  } else {
    c.dlo = c.iv.lo - 1;
    c.dhi = c.iv.hi - 1;
  }
}

Polynomial compose_affine(const Polynomial& p, long a0, long a1) {
  Polynomial lin = Polynomial::from_ints({a0, a1});
  Polynomial res;
  for (long i = p.degree(); i >= 0; --i) {
    res = res * lin +
          Polynomial{std::vector<Int>{p.coeff(static_cast<std::size_t>(i))}};
  }
  return res;
}

// Polynomial whose root inside (dlo, dhi) is exactly the candidate's distance.
Polynomial distance_poly(const GapCandidate& c) {
  return c.below_one ? compose_affine(c.sf, 1, -1) : compose_affine(c.sf, 1, 1);
}

// Exact order of two algebraic distances: -1 when a's is smaller, 0 on equality.
int compare_distances(GapCandidate a, GapCandidate b) {
  Polynomial da = distance_poly(a);
  Polynomial db = distance_poly(b);
  std::vector<Polynomial> cha = sturm_chain(da);
  std::vector<Polynomial> chb = sturm_chain(db);
  Polynomial g = primitive_gcd(da, db);
  std::vector<Polynomial> chg;
  if (g.degree() >= 1) chg = sturm_chain(g);
  for (int round = 0; round < 512; ++round) {
    if (a.dhi <= b.dlo) return -1;
    if (b.dhi <= a.dlo) return 1;
    if (g.degree() >= 1) {
      Rational lo = std::max(a.dlo, b.dlo);
      Rational hi = std::min(a.dhi, b.dhi);
      // Equal iff a window holds one root of each side and one common root.
      if (lo < hi && da.sign_at(lo) != 0 && da.sign_at(hi) != 0 &&
          db.sign_at(lo) != 0 && db.sign_at(hi) != 0 && g.sign_at(lo) != 0 &&
          g.sign_at(hi) != 0 && count_roots_open(da, cha, lo, hi) == 1 &&
          count_roots_open(db, chb, lo, hi) == 1 &&
          count_roots_open(g, chg, lo, hi) == 1) {
        return 0;
      }
    }
    a.iv = refine_once(a.sf, a.iv);
    set_distance(a);
    b.iv = refine_once(b.sf, b.iv);
    set_distance(b);
  }
  throw InternalError("distance comparison failed to converge");
}

}  // namespace

MinGapResult enumerate_min_gap(unsigned long n, unsigned long w,
                               unsigned long long guard) {
  if (n < 1 || w < 1) {
    throw PreconditionViolated("enumerate_min_gap requires N >= 1 and W >= 1");
  }
  Int total = pow_int(Int(2 * w + 1), n + 1);
  if (total > Int(static_cast<unsigned long>(guard))) {
    throw SearchSpaceTooLarge("coefficient space of size " + total.get_str() +
                              " exceeds the guard " + std::to_string(guard));
  }
  const Rational bound = root_gap_lower_bound(Int(n), Int(w));

  bool have = false;
  GapCandidate best;
  unsigned long long searched = 0;
  const long wl = static_cast<long>(w);
  std::vector<long> a(n + 1, -wl);
  for (;;) {
    bool all_zero = std::all_of(a.begin(), a.end(), [](long v) { return v == 0; });
    if (!all_zero) {
      ++searched;
      std::vector<Int> cs(a.begin(), a.end());
      Polynomial p{std::move(cs)};
      // Strip every (x - 1) factor, then isolate what remains.
      Polynomial q = p;
      while (q.degree() >= 1) {
        Int rem;
        Polynomial next = q.divide_by_x_minus_one(rem);
        if (rem != 0) break;
        q = std::move(next);
      }
      if (q.degree() >= 1) {
        Polynomial sf = square_free_part(q);
        for (RootInterval iv : isolate_real_roots(sf)) {
          while (iv.lo <= 1 && 1 <= iv.hi) iv = refine_once(sf, iv);
          GapCandidate cand{sf, iv, iv.hi < 1, Rational(0), Rational(0), p};
          set_distance(cand);
          if (!have) {
            best = cand;
            have = true;
            continue;
          }
          for (int round = 0;
               round < 40 && cand.dlo < best.dhi && best.dlo < cand.dhi; ++round) {
            if (Rational(cand.dhi - cand.dlo) >= Rational(best.dhi - best.dlo)) {
              cand.iv = refine_once(cand.sf, cand.iv);
              set_distance(cand);
            } else {
              best.iv = refine_once(best.sf, best.iv);
              set_distance(best);
            }
          }
          if (cand.dhi <= best.dlo) {
            best = cand;
          } else if (cand.dlo < best.dhi) {
            // Overlapping after refinement: decide exactly; ties keep the
            // earlier witness in enumeration order.
            if (compare_distances(cand, best) < 0) best = cand;
          }
        }
      }
    }
    std::size_t pos = a.size();
    while (pos > 0 && a[pos - 1] == wl) a[--pos] = -wl;
    if (pos == 0) break;
    ++a[pos - 1];
  }
  if (!have) throw InternalError("enumeration found no root distinct from 1");

  // Reconcile the certified interval against the lower bound.
  Polynomial dbest = distance_poly(best);
  if (best.dlo < bound && bound < best.dhi && dbest.sign_at(bound) == 0) {
    throw InternalError("minimum distance equals the certified lower bound");
  }
  for (int safety = 0; best.dlo < bound; ++safety) {
    if (best.dhi <= bound) {
      throw InternalError("minimum distance at most the certified lower bound");
    }
    if (safety > 4096) {
      throw InternalError("gap reconciliation failed to converge");
    }
    best.iv = refine_once(best.sf, best.iv);
    set_distance(best);
  }
  MinGapResult out;
  out.gap_lo = best.dlo;
  out.gap_hi = best.dhi;
  out.witness = best.witness;
  out.searched = searched;
  return out;
}

}  // namespace dsg::poly
