#include "dsg/roots.hpp"

#include <algorithm>

#include "dsg/errors.hpp"

namespace dsg::poly {

namespace {

// Pseudo-remainder R with lc(b)^(deg a - deg b + 1) * a = q*b + R,
// sign-corrected so that R is a positive multiple of the true remainder.
Polynomial pseudo_rem_positive(const Polynomial& a, const Polynomial& b) {
  const long db = b.degree();
  const Int& d = b.leading_coeff();
  std::vector<Int> r(a.coeffs());
  auto deg_of = [](const std::vector<Int>& v) {
    long i = static_cast<long>(v.size()) - 1;
    while (i >= 0 && v[static_cast<std::size_t>(i)] == 0) --i;
    return i;
  };
  long dr = deg_of(r);
  long e = dr - db + 1;
  while (dr >= db) {
    Int top = r[static_cast<std::size_t>(dr)];
    for (long i = 0; i <= dr; ++i) r[static_cast<std::size_t>(i)] *= d;
    for (long j = 0; j <= db; ++j) {
      r[static_cast<std::size_t>(dr - db + j)] -= top * b.coeff(static_cast<std::size_t>(j));
    }
    dr = deg_of(r);
    --e;
  }
  r.resize(static_cast<std::size_t>(dr + 1));
  Polynomial rem{std::vector<Int>(r)};
  if (e > 0) {
    Int scale = pow_int(d, static_cast<unsigned long>(e));
    rem = scale * rem;
  }
  // Total multiplier d^(delta+1); flip when it is negative.
  bool negative_multiplier = (sgn(d) < 0) && ((a.degree() - db + 1) % 2 != 0);
  return negative_multiplier ? -rem : rem;
}

// Primitive part with the sign kept.
Polynomial make_primitive(const Polynomial& p) { return p.primitive_part(); }

struct IsolationContext {
  const Polynomial& r;
  const std::vector<Polynomial>& chain;

  int var(const Rational& x) const { return sign_variations(chain, x); }
  int sign(const Rational& x) const { return r.sign_at(x); }

  // Distinct roots in (a, b); both endpoints certified non-roots.
  int count(const Rational& a, const Rational& b) const {
    return var(a) - var(b);
  }
};

// Around a known exact root m, shrinks eps until (m-eps, m+eps) holds only m.
RootInterval carve_exact_root(const IsolationContext& ctx, const Rational& m,
                              Rational eps) {
  for (;;) {
    Rational a = m - eps, b = m + eps;
    if (ctx.sign(a) != 0 && ctx.sign(b) != 0 && ctx.count(a, b) == 1) {
      RootInterval iv{a, b, ctx.sign(a), ctx.sign(b)};
      if (iv.sign_lo * iv.sign_hi >= 0) {
        throw InternalError("isolation: no sign change around exact root");
      }
      return iv;
    }
    eps /= 2;
  }
}

}  // namespace

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("sturm_chain");
  std::vector<Polynomial> chain;
  chain.push_back(make_primitive(p));
  if (p.degree() == 0) return chain;
  chain.push_back(make_primitive(p.derivative()));
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    const Polynomial& a = chain[chain.size() - 2];
    const Polynomial& b = chain.back();
    Polynomial rem = pseudo_rem_positive(a, b);
    if (rem.is_zero()) break;
    chain.push_back(make_primitive(-rem));
  }
  return chain;
}

int sign_variations(const std::vector<Polynomial>& chain, const Rational& x) {
  int count = 0, prev = 0;
  for (const Polynomial& p : chain) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

int root_order_at_one(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("root_order_at_one");
  Polynomial q = p;
  int k = 0;
  for (;;) {
    Int rem;
    Polynomial next = q.divide_by_x_minus_one(rem);
    if (rem != 0) return k;
    ++k;
    q = std::move(next);
    if (q.is_zero()) {
      throw InternalError("root_order_at_one: exhausted nonzero polynomial");
    }
  }
}

Int derivative_at_one(const Polynomial& p, unsigned long j) {
  if (p.is_zero()) throw ZeroPolynomial("derivative_at_one");
  if (j > static_cast<unsigned long>(p.degree())) {
    throw IndexOutOfRange("derivative_at_one: j = " + std::to_string(j) +
                          " exceeds degree " + std::to_string(p.degree()));
  }
  Int jfact = factorial(j);
  Int acc = 0;
  for (std::size_t i = j; i < p.coeffs().size(); ++i) {
    Int binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(i), j);
    acc += jfact * binom * p.coeff(i);
  }
  if (!mpz_divisible_p(acc.get_mpz_t(), jfact.get_mpz_t())) {
    throw InternalError("derivative_at_one: value not divisible by j!");
  }
  return acc;
}

Int derivative_at_one(const Polynomial& p, unsigned long j, const Int& w) {
  if (p.max_abs_coeff() > w) {
    throw PreconditionViolated("derivative_at_one: coefficient bound too small");
  }
  Int value = derivative_at_one(p, j);
  Int cap = w * pow_int(Int(p.degree() + 1), j + 1);
  if (abs(value) > cap) {
    throw InternalError("derivative_at_one: derivative bound violated");
  }
  return value;
}

Polynomial primitive_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) throw ZeroPolynomial("primitive_gcd");
  auto positive = [](Polynomial p) {
    return sgn(p.leading_coeff()) < 0 ? -std::move(p) : std::move(p);
  };
  if (a.is_zero()) return positive(make_primitive(b));
  if (b.is_zero()) return positive(make_primitive(a));
  Polynomial u = make_primitive(a);
  Polynomial v = make_primitive(b);
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero() && v.degree() > 0) {
    Polynomial rem = pseudo_rem_positive(u, v);
    u = std::move(v);
    v = make_primitive(rem);
  }
  if (v.is_zero()) return positive(std::move(u));
  // Nonzero constant remainder: the inputs are coprime.
  return Polynomial{std::vector<Int>{Int(1)}};
}

Polynomial square_free_part(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("square_free_part");
  if (p.degree() <= 1) return make_primitive(p);
  Polynomial g = primitive_gcd(p, p.derivative());
  if (g.degree() <= 0) return make_primitive(p);
  return exact_divide(make_primitive(p), g);
}

Int cauchy_root_bound(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("cauchy_root_bound");
  Int lead = abs(p.leading_coeff());
  return floor_div(p.max_abs_coeff(), lead) + 2;
}

int count_roots_open(const Polynomial& r, const std::vector<Polynomial>& chain,
                     const Rational& lo, const Rational& hi) {
  if (r.sign_at(lo) == 0 || r.sign_at(hi) == 0) {
    throw InternalError("count_roots_open: endpoint is a root");
  }
  if (lo >= hi) return 0;
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

namespace {

// Moves inward from an endpoint that is a root of r, returning an anchor a
// with r(a) != 0 and no root strictly between the endpoint and a.
Rational anchor_past_root(const IsolationContext& ctx, const Rational& endpoint,
                          bool move_right, Rational delta) {
  for (;;) {
    Rational a = endpoint - delta, b = endpoint + delta;
    if (ctx.sign(a) != 0 && ctx.sign(b) != 0 && ctx.count(a, b) == 1) {
      return move_right ? b : a;
    }
    delta /= 2;
  }
}

void isolate_between(const IsolationContext& ctx, const Rational& a,
                     const Rational& b, int va, int vb,
                     std::vector<RootInterval>& out) {
  int count = va - vb;
  if (count <= 0) return;
  if (count == 1) {
    RootInterval iv{a, b, ctx.sign(a), ctx.sign(b)};
    if (iv.sign_lo * iv.sign_hi >= 0) {
      throw InternalError("isolation: isolated interval without sign change");
    }
    out.push_back(std::move(iv));
    return;
  }
  Rational m = (a + b) / 2;
  if (ctx.sign(m) != 0) {
    int vm = ctx.var(m);
    isolate_between(ctx, a, m, va, vm, out);
    isolate_between(ctx, m, b, vm, vb, out);
    return;
  }
  // Exact rational root at the midpoint: carve it out, recurse on both sides.
  Rational eps = (b - a) / 4;
  RootInterval mid = carve_exact_root(ctx, m, eps);
  int v1 = ctx.var(mid.lo), v2 = ctx.var(mid.hi);
  isolate_between(ctx, a, mid.lo, va, v1, out);
  out.push_back(mid);
  isolate_between(ctx, mid.hi, b, v2, vb, out);
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const Polynomial& p,
                                             const Rational& lo,
                                             const Rational& hi) {
  if (p.is_zero()) throw ZeroPolynomial("isolate_real_roots");
  if (lo >= hi || p.degree() == 0) return {};
  Polynomial r = square_free_part(p);
  if (r.degree() <= 0) return {};
  std::vector<Polynomial> chain = sturm_chain(r);
  IsolationContext ctx{r, chain};

  Rational delta = (hi - lo) / 4;
  Rational a = lo, b = hi;
  if (ctx.sign(a) == 0) a = anchor_past_root(ctx, lo, true, delta);
  if (ctx.sign(b) == 0) b = anchor_past_root(ctx, hi, false, delta);
  if (a >= b) return {};

  std::vector<RootInterval> out;
  isolate_between(ctx, a, b, ctx.var(a), ctx.var(b), out);
  std::sort(out.begin(), out.end(),
            [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
  return out;
}

std::vector<RootInterval> isolate_real_roots(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("isolate_real_roots");
  Int bound = cauchy_root_bound(p);
  return isolate_real_roots(p, Rational(-bound), Rational(bound));
}

namespace {

// One bisection step preserving the sign-change certificate.
RootInterval refine_step(const Polynomial& r, const RootInterval& iv) {
  Rational m = (iv.lo + iv.hi) / 2;
  int s = r.sign_at(m);
  if (s == 0) {
    // The root is exactly m; shrink symmetrically inside iv.
    Rational eps = std::min(Rational(m - iv.lo), Rational(iv.hi - m)) / 2;
    RootInterval out{m - eps, m + eps, r.sign_at(m - eps), r.sign_at(m + eps)};
    if (out.sign_lo * out.sign_hi >= 0) {
      throw InternalError("refine: lost sign change at exact root");
    }
    return out;
  }
  if (iv.sign_lo * s < 0) return RootInterval{iv.lo, m, iv.sign_lo, s};
  return RootInterval{m, iv.hi, s, iv.sign_hi};
}

}  // namespace

RootInterval refine_once(const Polynomial& square_free, const RootInterval& iv) {
  return refine_step(square_free, iv);
}

RootInterval refine_root_interval(const Polynomial& square_free, RootInterval iv,
                                  const Rational& width) {
  while (iv.hi - iv.lo > width) iv = refine_step(square_free, iv);
  return iv;
}

RootInterval refine_away_from(const Polynomial& square_free, RootInterval iv,
                              const Rational& point) {
  while (iv.lo <= point && point <= iv.hi) {
    if (iv.lo < point && point < iv.hi && square_free.sign_at(point) == 0) {
      throw InternalError("refine_away_from: point is the contained root");
    }
    iv = refine_step(square_free, iv);
  }
  return iv;
}

}  // namespace dsg::poly
