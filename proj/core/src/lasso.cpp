#include "dsg/lasso.hpp"

#include <cstddef>

#include "dsg/errors.hpp"

namespace dsg::game {

Lasso extract_lasso(const Game& g, const PositionalStrategy& sigma,
                    const PositionalStrategy& tau, int v) {
  validate_strategy(g, sigma);
  validate_strategy(g, tau);
  if (v < 0 || v >= g.n) throw DanglingVertexId(v);
  std::vector<long> pos(static_cast<std::size_t>(g.n), -1);
  std::vector<int> verts;
  std::vector<long long> rewards;
  int cur = v;
  while (pos[static_cast<std::size_t>(cur)] < 0) {
    pos[static_cast<std::size_t>(cur)] = static_cast<long>(verts.size());
    const Edge& e = chosen_edge(g, sigma, tau, cur);
    verts.push_back(cur);
    rewards.push_back(e.weight);
    cur = e.to;
  }
  std::size_t k = static_cast<std::size_t>(pos[static_cast<std::size_t>(cur)]);
  Lasso l;
  l.prefix.assign(verts.begin(), verts.begin() + static_cast<long>(k));
  l.prefix_rewards.assign(rewards.begin(), rewards.begin() + static_cast<long>(k));
  l.cycle.assign(verts.begin() + static_cast<long>(k), verts.end());
  l.cycle_rewards.assign(rewards.begin() + static_cast<long>(k), rewards.end());
  if (l.cycle.empty()) throw InternalError("lasso walk produced no cycle");
  return l;
}

Rational disc_payoff(const Lasso& l, const Rational& lambda) {
  if (lambda < 0 || lambda >= 1) throw LambdaOutOfRange(format_rational(lambda));
  Rational acc(0), power(1);
  for (long long r : l.prefix_rewards) {
    acc += power * Rational(static_cast<long>(r));
    power *= lambda;
  }
  // power is now lambda^p.
  Rational cyc(0), cpow(1);
  for (long long r : l.cycle_rewards) {
    cyc += cpow * Rational(static_cast<long>(r));
    cpow *= lambda;
  }
  // cpow is lambda^c < 1.
  return acc + power * cyc / (Rational(1) - cpow);
}

std::pair<poly::Polynomial, poly::Polynomial> payoff_polynomials(const Lasso& l) {
  const std::size_t p = l.prefix.size();
  const std::size_t c = l.cycle.size();
  // P = (1 - x^c) * prefix part + x^p * cycle part; payoff = P/(1 - x^c).
  std::vector<Int> pc(p + c + 1, Int(0));
  for (std::size_t i = 0; i < p; ++i) {
    long long r = l.prefix_rewards[i];
    pc[i] += static_cast<long>(r);
    pc[i + c] -= static_cast<long>(r);
  }
  for (std::size_t i = 0; i < c; ++i) {
    pc[p + i] += static_cast<long>(l.cycle_rewards[i]);
  }
  std::vector<Int> qc(c + 1, Int(0));
  qc[0] = 1;
  qc[c] -= 1;
  return {poly::Polynomial{std::move(pc)}, poly::Polynomial{std::move(qc)}};
}

poly::Polynomial profile_difference(const Lasso& l1, const Lasso& l2) {
  auto [p1, q1] = payoff_polynomials(l1);
  auto [p2, q2] = payoff_polynomials(l2);
  // Equal cycle lengths share the denominator, so the difference reduces.
  if (l1.cycle.size() == l2.cycle.size()) return p1 - p2;
  return p1 * q2 - p2 * q1;
}

}  // namespace dsg::game
