#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dsg/game.hpp"
#include "dsg/rational.hpp"

namespace dsg::solve {

// Indexed by vertex id; each entry lies in [-W/(1-lambda), W/(1-lambda)].
using ValueVector = std::vector<Rational>;

// Strategy pairs recorded per improvement round; the last two player-1
// strategies are equal (termination condition), so size() >= 2.
struct SiTrace {
  std::vector<std::pair<game::PositionalStrategy, game::PositionalStrategy>> steps;
  std::size_t iterations() const { return steps.size(); }
};

// Component v is the exact discounted payoff of the play from v.
ValueVector evaluate_profile(const game::Game& g,
                             const game::PositionalStrategy& sigma,
                             const game::PositionalStrategy& tau,
                             const Rational& lambda);

// Player-2 strategy minimizing the payoff against sigma at every vertex;
// deterministic: least-index among optimal choices.
game::PositionalStrategy best_response(const game::Game& g,
                                       const game::PositionalStrategy& sigma,
                                       const Rational& lambda);

// Greedy strategies induced by a value vector: argmax at player-1 vertices,
// argmin at player-2 vertices, smallest successor id on ties.
std::pair<game::PositionalStrategy, game::PositionalStrategy> bellman_extract(
    const game::Game& g, const Rational& lambda, const ValueVector& f);

struct SiResult {
  game::PositionalStrategy sigma_star;
  SiTrace trace;
  ValueVector values;  // exact optimal values
};

// Alternates best response and Bellman extraction until the player-1 strategy
// is a fixed point; monotone improvement is asserted on every round.
SiResult strategy_iteration(const game::Game& g, const Rational& lambda,
                            const game::PositionalStrategy& sigma0);

// f_0 = 0; f_{k+1}(v) = max/min over successors of r + lambda f_k; returns
// f_t exactly, with ||f_t - val||_inf <= lambda^t W/(1-lambda).
ValueVector value_iteration(const game::Game& g, const Rational& lambda,
                            std::size_t t);

struct OracleValues {
  ValueVector maxmin, minmax;
};

// Full enumeration of both strategy spaces; asserts maxmin = minmax.
OracleValues brute_force_values(const game::Game& g, const Rational& lambda,
                                unsigned long long guard_profiles = 1000000ULL);

// Number of positional profiles, saturated at 2^63-1.
unsigned long long profile_count(const game::Game& g);

}  // namespace dsg::solve
