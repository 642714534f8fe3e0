#pragma once

#include <utility>
#include <vector>

#include "dsg/game.hpp"
#include "dsg/polynomial.hpp"
#include "dsg/rational.hpp"

namespace dsg::game {

// Eventually-periodic play under a positional profile: a cycle-free prefix
// followed by a simple cycle repeated forever. cycle is never empty.
struct Lasso {
  std::vector<int> prefix, cycle;
  std::vector<long long> prefix_rewards, cycle_rewards;
};

// Walks from v under (sigma, tau) until a vertex repeats.
Lasso extract_lasso(const Game& g, const PositionalStrategy& sigma,
                    const PositionalStrategy& tau, int v);

// Exact discounted sum of the lasso's infinite play.
Rational disc_payoff(const Lasso& l, const Rational& lambda);

// (P, Q) with disc payoff = P(lambda)/Q(lambda) and Q = 1 - x^cycle_len;
// |P coefficients| <= 3W, degrees <= n.
std::pair<poly::Polynomial, poly::Polynomial> payoff_polynomials(const Lasso& l);

// Polynomial whose sign at lambda orders the two payoffs: P1 Q2 - P2 Q1 in
// general, reduced to P1 - P2 when the cycle lengths agree (the common
// denominator cancels). Degree <= 2n, |coefficients| <= 12W.
poly::Polynomial profile_difference(const Lasso& l1, const Lasso& l2);

}  // namespace dsg::game
