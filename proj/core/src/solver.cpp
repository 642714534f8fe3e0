#include "dsg/solver.hpp"

#include <limits>
#include <string>

#include "dsg/errors.hpp"

namespace dsg::solve {

namespace {

void check_lambda(const Rational& lambda) {
  if (lambda < 0 || lambda >= 1) throw LambdaOutOfRange(format_rational(lambda));
}

void check_profile(const game::Game& g, const game::PositionalStrategy& sigma,
                   const game::PositionalStrategy& tau) {
  if (sigma.player != 1 || tau.player != 2)
    throw PreconditionViolated("profile must pair a player-1 with a player-2 strategy");
  game::validate_strategy(g, sigma);
  game::validate_strategy(g, tau);
}

// Strategy with choices only at the owner's vertices, -1 elsewhere.
game::PositionalStrategy normalized(const game::Game& g,
                                    const game::PositionalStrategy& s) {
  game::PositionalStrategy out;
  out.player = s.player;
  out.choice.assign(static_cast<std::size_t>(g.n), -1);
  for (int v = 0; v < g.n; ++v) {
    if (g.owner[static_cast<std::size_t>(v)] == s.player)
      out.choice[static_cast<std::size_t>(v)] = s.choice[static_cast<std::size_t>(v)];
  }
  return out;
}

// Enumerates one player's positional strategies in successor-list order.
struct StrategyEnum {
  const game::Game& g;
  int player;
  std::vector<int> verts;
  std::vector<std::size_t> idx;

  StrategyEnum(const game::Game& game, int p) : g(game), player(p) {
    for (int v = 0; v < g.n; ++v)
      if (g.owner[static_cast<std::size_t>(v)] == p) verts.push_back(v);
    idx.assign(verts.size(), 0);
  }

  game::PositionalStrategy current() const {
    game::PositionalStrategy s;
    s.player = player;
    s.choice.assign(static_cast<std::size_t>(g.n), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) {
      const auto& succ = g.succ[static_cast<std::size_t>(verts[i])];
      s.choice[static_cast<std::size_t>(verts[i])] = succ[idx[i]].to;
    }
    return s;
  }

  bool advance() {
    std::size_t i = verts.size();
    while (i > 0) {
      --i;
      const auto& succ = g.succ[static_cast<std::size_t>(verts[i])];
      if (idx[i] + 1 < succ.size()) {
        ++idx[i];
        return true;
      }
      idx[i] = 0;
    }
    return false;
  }
};

}  // namespace

ValueVector evaluate_profile(const game::Game& g,
                             const game::PositionalStrategy& sigma,
                             const game::PositionalStrategy& tau,
                             const Rational& lambda) {
  check_lambda(lambda);
  check_profile(g, sigma, tau);
  const std::size_t n = static_cast<std::size_t>(g.n);
  ValueVector values(n, Rational(0));
  // 0 = unvisited, 1 = on the current walk, 2 = valued.
  std::vector<int> state(n, 0);
  std::vector<std::size_t> pos(n, 0);
  struct Step {
    int v;
    long long reward;
  };
  std::vector<Step> path;
  for (int v0 = 0; v0 < g.n; ++v0) {
    if (state[static_cast<std::size_t>(v0)] == 2) continue;
    path.clear();
    int cur = v0;
    while (state[static_cast<std::size_t>(cur)] == 0) {
      state[static_cast<std::size_t>(cur)] = 1;
      pos[static_cast<std::size_t>(cur)] = path.size();
      const game::Edge& e = game::chosen_edge(g, sigma, tau, cur);
      path.push_back({cur, e.weight});
      cur = e.to;
    }
    std::size_t k = path.size();
    if (state[static_cast<std::size_t>(cur)] == 1) {
      // The walk closed a cycle at position pos[cur].
      k = pos[static_cast<std::size_t>(cur)];
      const std::size_t c = path.size() - k;
      Rational csum(0), power(1);
      for (std::size_t i = 0; i < c; ++i) {
        csum += power * Rational(static_cast<long>(path[k + i].reward));
        power *= lambda;
      }
      Rational s0 = csum / (Rational(1) - power);
      values[static_cast<std::size_t>(path[k].v)] = s0;
      state[static_cast<std::size_t>(path[k].v)] = 2;
      for (std::size_t j = c - 1; j >= 1; --j) {
        const Rational& next = (j + 1 == c)
                                   ? s0
                                   : values[static_cast<std::size_t>(path[k + j + 1].v)];
        values[static_cast<std::size_t>(path[k + j].v)] =
            Rational(static_cast<long>(path[k + j].reward)) + lambda * next;
        state[static_cast<std::size_t>(path[k + j].v)] = 2;
      }
    }
    // Unwind the acyclic part of the walk.
    for (std::size_t i = k; i-- > 0;) {
      const Rational& next = (i + 1 < path.size())
                                 ? values[static_cast<std::size_t>(path[i + 1].v)]
                                 : values[static_cast<std::size_t>(cur)];
      values[static_cast<std::size_t>(path[i].v)] =
          Rational(static_cast<long>(path[i].reward)) + lambda * next;
      state[static_cast<std::size_t>(path[i].v)] = 2;
    }
  }
  return values;
}

game::PositionalStrategy best_response(const game::Game& g,
                                       const game::PositionalStrategy& sigma,
                                       const Rational& lambda) {
  check_lambda(lambda);
  if (sigma.player != 1)
    throw PreconditionViolated("best response expects a player-1 strategy");
  game::validate_strategy(g, sigma);
  game::PositionalStrategy tau = game::least_index_strategy(g, 2);
  // Policy iteration on the one-player game fixed by sigma: switch every
  // player-2 vertex with a strictly better successor, least index first.
  const unsigned long long kMaxRounds = 1000000ULL;
  unsigned long long rounds = 0;
  ValueVector f;
  for (;;) {
    f = evaluate_profile(g, sigma, tau, lambda);
    bool improved = false;
    for (int v = 0; v < g.n; ++v) {
      if (g.owner[static_cast<std::size_t>(v)] != 2) continue;
      const auto& succ = g.succ[static_cast<std::size_t>(v)];
      Rational best = f[static_cast<std::size_t>(v)];
      int pick = -1;
      for (const game::Edge& e : succ) {
        Rational cand = Rational(static_cast<long>(e.weight)) +
                        lambda * f[static_cast<std::size_t>(e.to)];
        if (cand < best) {
          best = cand;
          pick = e.to;
        }
      }
      if (pick >= 0) {
        tau.choice[static_cast<std::size_t>(v)] = pick;
        improved = true;
      }
    }
    if (!improved) break;
    if (++rounds > kMaxRounds)
      throw InternalError("best response did not converge");
  }
  // Canonicalize: least-index argmin with respect to the optimal values.
  for (int v = 0; v < g.n; ++v) {
    if (g.owner[static_cast<std::size_t>(v)] != 2) continue;
    const auto& succ = g.succ[static_cast<std::size_t>(v)];
    Rational best(0);
    int pick = -1;
    for (const game::Edge& e : succ) {
      Rational cand = Rational(static_cast<long>(e.weight)) +
                      lambda * f[static_cast<std::size_t>(e.to)];
      if (pick < 0 || cand < best) {
        best = cand;
        pick = e.to;
      }
    }
    tau.choice[static_cast<std::size_t>(v)] = pick;
  }
  ValueVector check = evaluate_profile(g, sigma, tau, lambda);
  if (check != f) throw InternalError("canonical best response changed the values");
  return tau;
}

std::pair<game::PositionalStrategy, game::PositionalStrategy> bellman_extract(
    const game::Game& g, const Rational& lambda, const ValueVector& f) {
  check_lambda(lambda);
  if (f.size() != static_cast<std::size_t>(g.n))
    throw PreconditionViolated("value vector size does not match the game");
  game::PositionalStrategy sigma, tau;
  sigma.player = 1;
  tau.player = 2;
  sigma.choice.assign(static_cast<std::size_t>(g.n), -1);
  tau.choice.assign(static_cast<std::size_t>(g.n), -1);
  for (int v = 0; v < g.n; ++v) {
    const auto& succ = g.succ[static_cast<std::size_t>(v)];
    const bool maximize = g.owner[static_cast<std::size_t>(v)] == 1;
    Rational best(0);
    int pick = -1;
    for (const game::Edge& e : succ) {
      Rational cand = Rational(static_cast<long>(e.weight)) +
                      lambda * f[static_cast<std::size_t>(e.to)];
      if (pick < 0 || (maximize ? cand > best : cand < best)) {
        best = cand;
        pick = e.to;
      }
    }
    if (maximize)
      sigma.choice[static_cast<std::size_t>(v)] = pick;
    else
      tau.choice[static_cast<std::size_t>(v)] = pick;
  }
  return {sigma, tau};
}

SiResult strategy_iteration(const game::Game& g, const Rational& lambda,
                            const game::PositionalStrategy& sigma0) {
  check_lambda(lambda);
  if (sigma0.player != 1)
    throw PreconditionViolated("strategy iteration starts from a player-1 strategy");
  game::validate_strategy(g, sigma0);
  game::PositionalStrategy sigma = normalized(g, sigma0);
  SiResult res;
  ValueVector prev;
  bool have_prev = false;
  const unsigned long long kMaxRounds = 10000000ULL;
  unsigned long long rounds = 0;
  for (;;) {
    game::PositionalStrategy tau = best_response(g, sigma, lambda);
    ValueVector f = evaluate_profile(g, sigma, tau, lambda);
    res.trace.steps.emplace_back(sigma, tau);
    if (have_prev) {
      for (std::size_t v = 0; v < f.size(); ++v) {
        if (f[v] < prev[v])
          throw InternalError("improvement round lost value at vertex " +
                              std::to_string(v));
      }
    }
    auto [snext, tnext] = bellman_extract(g, lambda, f);
    (void)tnext;
    if (snext == sigma) {
      res.trace.steps.emplace_back(sigma, tau);
      res.sigma_star = sigma;
      res.values = std::move(f);
      return res;
    }
    if (have_prev && f == prev)
      throw InternalError("values stalled without reaching a fixed point");
    prev = std::move(f);
    have_prev = true;
    sigma = std::move(snext);
    if (++rounds > kMaxRounds)
      throw InternalError("strategy iteration did not converge");
  }
}

ValueVector value_iteration(const game::Game& g, const Rational& lambda,
                            std::size_t t) {
  check_lambda(lambda);
  ValueVector f(static_cast<std::size_t>(g.n), Rational(0));
  for (std::size_t step = 0; step < t; ++step) {
    ValueVector next(static_cast<std::size_t>(g.n), Rational(0));
    for (int v = 0; v < g.n; ++v) {
      const auto& succ = g.succ[static_cast<std::size_t>(v)];
      const bool maximize = g.owner[static_cast<std::size_t>(v)] == 1;
      bool first = true;
      Rational best(0);
      for (const game::Edge& e : succ) {
        Rational cand = Rational(static_cast<long>(e.weight)) +
                        lambda * f[static_cast<std::size_t>(e.to)];
        if (first || (maximize ? cand > best : cand < best)) {
          best = std::move(cand);
          first = false;
        }
      }
      next[static_cast<std::size_t>(v)] = std::move(best);
    }
    f = std::move(next);
  }
  return f;
}

unsigned long long profile_count(const game::Game& g) {
  const unsigned long long cap = std::numeric_limits<long long>::max();
  unsigned long long count = 1;
  for (int v = 0; v < g.n; ++v) {
    unsigned long long d = g.succ[static_cast<std::size_t>(v)].size();
    if (count > cap / d) return cap;
    count *= d;
  }
  return count;
}

OracleValues brute_force_values(const game::Game& g, const Rational& lambda,
                                unsigned long long guard_profiles) {
  check_lambda(lambda);
  unsigned long long total = profile_count(g);
  if (total > guard_profiles)
    throw TooManyProfiles(std::to_string(total) + " positional profiles exceed the guard of " +
                          std::to_string(guard_profiles));
  const std::size_t n = static_cast<std::size_t>(g.n);
  OracleValues out;
  // maxmin: outer max over player-1 strategies of the inner min over player 2.
  {
    StrategyEnum se(g, 1);
    bool first_sigma = true;
    do {
      game::PositionalStrategy sigma = se.current();
      StrategyEnum te(g, 2);
      ValueVector inner;
      bool first_tau = true;
      do {
        ValueVector f = evaluate_profile(g, sigma, te.current(), lambda);
        if (first_tau) {
          inner = std::move(f);
          first_tau = false;
        } else {
          for (std::size_t v = 0; v < n; ++v)
            if (f[v] < inner[v]) inner[v] = std::move(f[v]);
        }
      } while (te.advance());
      if (first_sigma) {
        out.maxmin = std::move(inner);
        first_sigma = false;
      } else {
        for (std::size_t v = 0; v < n; ++v)
          if (inner[v] > out.maxmin[v]) out.maxmin[v] = std::move(inner[v]);
      }
    } while (se.advance());
  }
  // minmax: outer min over player-2 strategies of the inner max over player 1.
  {
    StrategyEnum te(g, 2);
    bool first_tau = true;
    do {
      game::PositionalStrategy tau = te.current();
      StrategyEnum se(g, 1);
      ValueVector inner;
      bool first_sigma = true;
      do {
        ValueVector f = evaluate_profile(g, se.current(), tau, lambda);
        if (first_sigma) {
          inner = std::move(f);
          first_sigma = false;
        } else {
          for (std::size_t v = 0; v < n; ++v)
            if (f[v] > inner[v]) inner[v] = std::move(f[v]);
        }
      } while (se.advance());
      if (first_tau) {
        out.minmax = std::move(inner);
        first_tau = false;
      } else {
        for (std::size_t v = 0; v < n; ++v)
          if (inner[v] < out.minmax[v]) out.minmax[v] = std::move(inner[v]);
      }
    } while (te.advance());
  }
  if (out.maxmin != out.minmax)
    throw InternalError("maxmin and minmax disagree; determinacy violated");
  return out;
}

}  // namespace dsg::solve
