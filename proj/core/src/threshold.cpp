#include "dsg/threshold.hpp"

#include <chrono>
#include <sstream>
#include <utility>

#include "dsg/bounds.hpp"
#include "dsg/errors.hpp"
#include "dsg/lasso.hpp"
#include "dsg/roots.hpp"

namespace dsg::thresh {

Int lambda_zero_exponent(const Int& n, const Int& w) {
  if (n < 1 || w < 1)
    throw PreconditionViolated("threshold exponent needs n >= 1 and W >= 1");
  return Int(poly::ceil_scaled_fourth_root(7, 1, w, n) + 6);
}

Rational lambda_zero(const Int& n, const Int& w) {
  Int e = lambda_zero_exponent(n, w);
  if (!e.fits_ulong_p())
    throw SearchSpaceTooLarge("threshold exponent does not fit a machine word");
  Int den = Int(24 * w * pow_int(Int(2 * n + 1), e.get_ui()));
  return make_rational(Int(den - 1), den);
}

Int game_weight_bound(const game::Game& g) {
  long long w = g.max_abs_weight;
  return Int(w < 1 ? 1 : static_cast<long>(w));
}

Rational lambda_zero_for(const game::Game& g) {
  return lambda_zero(Int(g.n), game_weight_bound(g));
}

namespace {

Rational checked_lambda(const game::Game& g, const Rational& lambda) {
  if (lambda < 0 || lambda >= 1) throw LambdaOutOfRange(format_rational(lambda));
  Rational l0 = lambda_zero_for(g);
  if (lambda < l0)
    throw LambdaBelowThreshold("discount factor " + format_rational(lambda) +
                               " lies below the threshold " + format_rational(l0));
  return l0;
}

}  // namespace

bool ordering_preserved(const game::Game& g, int v,
                        const game::PositionalStrategy& sigma1,
                        const game::PositionalStrategy& tau1,
                        const game::PositionalStrategy& sigma2,
                        const game::PositionalStrategy& tau2,
                        const Rational& lambda) {
  Rational l0 = checked_lambda(g, lambda);
  game::Lasso l1 = game::extract_lasso(g, sigma1, tau1, v);
  game::Lasso l2 = game::extract_lasso(g, sigma2, tau2, v);
  poly::Polynomial f = game::profile_difference(l1, l2);
  if (f.degree() < 0) return true;
  // Certify that f keeps one sign on [lambda0, 1) before comparing.
  if (f.sign_at(l0) == 0)
    throw InternalError("profile difference vanishes at the threshold");
  if (!poly::isolate_real_roots(f, l0, Rational(1)).empty())
    throw InternalError("profile difference has a root above the threshold");
  return f.sign_at(l0) == f.sign_at(lambda);
}

TraceComparison trace_equivalence(const game::Game& g,
                                  const game::PositionalStrategy& sigma0,
                                  const Rational& lambda) {
  Rational l0 = checked_lambda(g, lambda);
  TraceComparison cmp;
  cmp.trace_at_threshold = solve::strategy_iteration(g, l0, sigma0).trace;
  cmp.trace_at_lambda = solve::strategy_iteration(g, lambda, sigma0).trace;
  cmp.equal = cmp.trace_at_threshold.steps == cmp.trace_at_lambda.steps;
  return cmp;
}

std::vector<SweepRow> iteration_sweep(const game::Game& g,
                                      const std::vector<Rational>& lambdas,
                                      const game::PositionalStrategy& sigma0) {
  std::vector<SweepRow> rows;
  rows.reserve(lambdas.size());
  for (const Rational& lambda : lambdas) {
    auto start = std::chrono::steady_clock::now();
    solve::SiResult r = solve::strategy_iteration(g, lambda, sigma0);
    auto stop = std::chrono::steady_clock::now();
    SweepRow row;
    row.lambda = lambda;
    row.iterations = r.trace.iterations();
    row.wall_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string threshold_report_text(const ThresholdReport& r) {
  std::ostringstream out;
  out << "n: " << r.n.get_str() << "\n";
  out << "W: " << r.w.get_str() << "\n";
  out << "exponent: " << r.exponent.get_str() << "\n";
  out << "lambda0: " << format_rational(r.lambda0) << "\n";
  out << "rows: " << r.rows.size() << "\n";
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const auto& row = r.rows[i];
    out << "lambda[" << i << "]: " << format_rational(row.lambda) << "\n";
    out << "traces_equal[" << i << "]: " << (row.traces_equal ? "true" : "false")
        << "\n";
    out << "iterations[" << i << "]: " << row.iterations << "\n";
  }
  return out.str();
}

}  // namespace dsg::thresh
